"""
Module: manifest.py
-------------------
Manifeste d'exécution accompagnant chaque dossier de sortie.

Classes:
    ManifestEntry: Fichier produit et son empreinte SHA-256
    RunManifest: Configuration, version, graine, horodatage, inventaire

Version: 1.0
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    sha256: str
    size_bytes: int

    def to_dict(self) -> dict:
        return {'path': self.path, 'sha256': self.sha256, 'size_bytes': self.size_bytes}


@dataclass
class RunManifest:
    """
    :param command: Sous-commande exécutée
    :param config: Écho de la configuration effective
    :param tool_version: Version du logiciel
    :param master_seed: Graine utilisée
    :param started_at / finished_at: Horodatages ISO 8601
    :param files: Inventaire des fichiers produits
    """
    command: str
    config: Dict
    tool_version: str
    master_seed: Optional[int]
    started_at: str
    finished_at: Optional[str] = None
    files: List[ManifestEntry] = field(default_factory=list)
    metadata: Dict = field(default_factory=dict)

    def add_file(self, entry: ManifestEntry) -> None:
        self.files = [f for f in self.files if f.path != entry.path] + [entry]

    def to_dict(self) -> dict:
        return {
            'command': self.command,
            'tool_version': self.tool_version,
            'master_seed': self.master_seed,
            'started_at': self.started_at,
            'finished_at': self.finished_at,
            'config': self.config,
            'metadata': self.metadata,
            'files': [entry.to_dict() for entry in sorted(self.files, key=lambda e: e.path)],
        }
