"""
Module: logger_config.py
-----------------------
Configuration du système de journalisation du jeu de blocage.

Met en place la journalisation vers la console et les fichiers,
définit les formats et niveaux de log.

Fonctions:
    setup_logging: Configure le système de logging
    create_log_file: Crée un nouveau fichier de log

Version: 1.0
"""

import logging
import sys
from pathlib import Path
from datetime import datetime
from typing import Optional, Tuple

from src.ui.formatter import ColoredFormatter, FileFormatter

ROOT_LOGGER = 'blockpeek'


def create_log_file(log_dir: Path) -> Path:
    """Crée un nouveau fichier de log avec timestamp"""
    log_dir = Path(log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return log_dir / f"blockpeek_{timestamp}.log"


def setup_logging(level=logging.INFO, log_dir: Optional[Path] = None,
                  quiet: bool = False) -> Tuple[logging.Logger, Optional[Path]]:
    """
    Configure le système de logging complet

    Args:
        level: Niveau de log demandé
        log_dir: Dossier du fichier de log (aucun fichier si None)
        quiet: Console limitée aux avertissements

    Returns:
        Le logger racine du projet et le chemin du fichier de log
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level)
    logger.propagate = False

    # Suppression des handlers existants
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(logging.WARNING if quiet else level)
    console_handler.setFormatter(ColoredFormatter())
    logger.addHandler(console_handler)

    log_file = None
    if log_dir is not None:
        log_file = create_log_file(log_dir)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(level)
        file_handler.setFormatter(FileFormatter())
        logger.addHandler(file_handler)
        logger.info(f"Démarrage de la journalisation - Fichier: {log_file}")

    return logger, log_file


# Filtres pour éviter les messages de bibliothèques externes
logging.getLogger('matplotlib').setLevel(logging.WARNING)
logging.getLogger('PIL').setLevel(logging.WARNING)
