"""
Module: manifest_writer.py
--------------------------
Écriture des fichiers JSON: manifeste d'exécution, équilibre, réalisations.

Les clés sont écrites dans un ordre fixe pour que deux exécutions
identiques produisent des fichiers identiques (hors horodatages du
manifeste).

Version: 1.0
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Iterable

from src.models.manifest import ManifestEntry, RunManifest
from src.utils.errors import ExportError

logger = logging.getLogger('blockpeek.export')

MANIFEST_NAME = 'manifest.json'


def file_digest(path: Path) -> ManifestEntry:
    """Empreinte SHA-256 et taille d'un fichier produit"""
    path = Path(path)
    sha = hashlib.sha256()
    try:
        with open(path, 'rb') as f:
            for block in iter(lambda: f.read(65536), b''):
                sha.update(block)
    except OSError as e:
        raise ExportError(f"Lecture impossible de {path}: {e.strerror}") from e
    return ManifestEntry(path=path.name, sha256=sha.hexdigest(), size_bytes=path.stat().st_size)


def write_json(path: Path, data) -> Path:
    """JSON indenté, UTF-8, LF final"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            json.dump(data, f, indent=2, ensure_ascii=False, allow_nan=False)
            f.write('\n')
    except OSError as e:
        raise ExportError(f"Écriture impossible de {path}: {e.strerror}") from e
    except ValueError as e:
        raise ExportError(f"Valeur non sérialisable dans {path}: {e}") from e
    logger.info(f"Fichier écrit: {path}")
    return path


def write_jsonl(path: Path, records: Iterable[dict]) -> Path:
    """Un objet JSON compact par ligne"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            for record in records:
                f.write(json.dumps(record, ensure_ascii=False, allow_nan=False, separators=(',', ':')))
                f.write('\n')
    except OSError as e:
        raise ExportError(f"Écriture impossible de {path}: {e.strerror}") from e
    logger.info(f"Fichier écrit: {path}")
    return path


def write_manifest(manifest: RunManifest, out_dir: Path) -> Path:
    """Écrit <out_dir>/manifest.json; le manifeste ne se liste pas lui-même"""
    manifest.files = [entry for entry in manifest.files if entry.path != MANIFEST_NAME]
    return write_json(Path(out_dir) / MANIFEST_NAME, manifest.to_dict())
