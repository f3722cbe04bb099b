"""
Module: config_loader.py
------------------------
Lecture de la configuration JSON d'une exécution.

Le fichier est un objet JSON plat: chaque champ de Scenario et de
SweepConfig est optionnel et prend sa valeur par défaut s'il est absent.
Les clés inconnues et les types incorrects sont refusés avec la ligne
du fichier où ils apparaissent.

Exemple:
    {
        "rho_r_m": 3.0,
        "fading_mode": "per_cell",
        "distances_m": [1.0, 1.5, 2.0],
        "realizations": 20,
        "master_seed": 7
    }

Fonctions:
    load_config: Fichier (ou rien) -> SweepConfig
    config_from_dict: Dictionnaire déjà décodé -> SweepConfig

Version: 1.0
"""

import json
import logging
import re
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src.models.experiment import DEFAULT_DISTANCES_M, DEFAULT_MASTER_SEED, DEFAULT_REALIZATIONS, SweepConfig
from src.models.scenario import FadingMode, Scenario
from src.utils.errors import ConfigError, DomainError

logger = logging.getLogger('blockpeek.cli')

INT_FIELDS = {'array_elements_azimuth', 'array_elements_elevation'}
SWEEP_FIELDS = {'distances_m', 'realizations', 'master_seed'}
SCENARIO_FIELDS = {f.name for f in fields(Scenario)}


def _line_of(text: Optional[str], key: str) -> Optional[int]:
    if not text:
        return None
    match = re.search(r'"' + re.escape(key) + r'"\s*:', text)
    if match is None:
        return None
    return text.count('\n', 0, match.start()) + 1


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_integer(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_type(key: str, value: Any) -> Optional[str]:
    """Message d'erreur si value n'a pas le type attendu pour key"""
    if key in INT_FIELDS or key in ('realizations', 'master_seed'):
        return None if _is_integer(value) else "entier attendu"
    if key == 'fading_mode':
        allowed = [mode.value for mode in FadingMode]
        return None if value in allowed else f"valeur parmi {allowed} attendue"
    if key == 'scatter_coefficient':
        return None if value is None or _is_number(value) else "nombre ou null attendu"
    if key == 'distances_m':
        if not isinstance(value, list) or not all(_is_number(v) for v in value):
            return "liste de nombres attendue"
        return None
    return None if _is_number(value) else "nombre attendu"


def config_from_dict(data: Dict[str, Any], source: str = '<config>', text: Optional[str] = None,
                     seed_override: Optional[int] = None) -> SweepConfig:
    """
    Construit la configuration de campagne à partir d'un dictionnaire

    Args:
        data: Objet JSON décodé
        source: Nom du fichier pour les diagnostics
        text: Texte brut, pour retrouver la ligne d'un champ fautif
        seed_override: Graine imposée par la ligne de commande
    """
    if not isinstance(data, dict):
        raise ConfigError("un objet JSON est attendu à la racine", source=source, line=1)

    for key, value in data.items():
        if key not in SCENARIO_FIELDS and key not in SWEEP_FIELDS:
            raise ConfigError("clé inconnue", source=source, line=_line_of(text, key), field=key)
        problem = _check_type(key, value)
        if problem:
            raise ConfigError(f"{problem}, reçu {value!r}", source=source,
                              line=_line_of(text, key), field=key)

    scenario_values = {k: v for k, v in data.items() if k in SCENARIO_FIELDS}
    try:
        scenario = Scenario(**scenario_values)
        config = SweepConfig(
            distances_m=tuple(data.get('distances_m', DEFAULT_DISTANCES_M)),
            realizations=data.get('realizations', DEFAULT_REALIZATIONS),
            master_seed=seed_override if seed_override is not None
            else data.get('master_seed', DEFAULT_MASTER_SEED),
            scenario=scenario,
        )
    except DomainError as e:
        raise ConfigError(str(e), source=source) from e

    logger.debug(f"Configuration chargée depuis {source}: {len(data)} clé(s)")
    return config


def load_config(path: Optional[Union[str, Path]] = None, seed_override: Optional[int] = None) -> SweepConfig:
    """
    Charge la configuration (valeurs par défaut si path est None)

    Raises:
        ConfigError: Fichier illisible, JSON invalide, clé ou type incorrect
    """
    if path is None:
        return config_from_dict({}, source='<défaut>', seed_override=seed_override)

    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"lecture impossible ({e.strerror})", source=str(path)) from e

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, source=str(path), line=e.lineno, column=e.colno) from e

    return config_from_dict(data, source=str(path), text=text, seed_override=seed_override)
