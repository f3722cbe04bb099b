"""
Point d'entrée du jeu de blocage-observation.

Utilisation:
    python main.py [--config PATH] [--seed INT] [--out DIR] [--quiet] pattern [--resolution DEG] [--figures]
    python main.py [...] payoff [--rho-a M]
    python main.py [...] solve [--matrix PATH]
    python main.py [...] sweep [--dump-realizations] [--figures]

Codes de sortie:
    0 succès, 2 configuration ou fichier d'entrée, 3 domaine,
    4 écriture, 5 résolution numérique
"""

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from src.cli.commands import CommandContext, cmd_pattern, cmd_payoff, cmd_solve, cmd_sweep, execute
from src.monitoring.performance_monitor import PerformanceMonitor
from src.seed.config_loader import load_config
from src.ui.console_ui import ConsoleUI
from src.utils.errors import BlockPeekError, ExportError
from src.utils.logger_config import setup_logging


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Options globales, acceptées avant ou après la sous-commande"""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument('--config', type=Path, default=default(None),
                        help='Fichier de configuration JSON')
    parser.add_argument('--seed', type=int, default=default(None),
                        help='Graine maîtresse (prioritaire sur la configuration)')
    parser.add_argument('--out', type=Path, default=default(Path('out')),
                        help='Dossier de sortie (défaut: out)')
    parser.add_argument('--quiet', action='store_true', default=default(False),
                        help='Console limitée aux avertissements et erreurs')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING'], default=default('INFO'),
                        help='Niveau de journalisation (défaut: INFO)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Jeu de blocage-observation en ondes millimétriques')
    _global_options(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    subparsers = parser.add_subparsers(dest='command', required=True)

    pattern = subparsers.add_parser('pattern', parents=[common], help="Diagramme de l'émetteur")
    pattern.add_argument('--resolution', type=float, default=0.1,
                         help='Pas angulaire en degrés, dans ]0, 5] (défaut: 0.1)')
    pattern.add_argument('--figures', action='store_true', help='Écrit aussi pattern.png')

    payoff = subparsers.add_parser('payoff', parents=[common], help="Matrice de gains d'une réalisation")
    payoff.add_argument('--rho-a', type=float, default=None, help="Distance de l'obstacle en mètres")

    solve = subparsers.add_parser('solve', parents=[common], help="Équilibre d'une matrice")
    solve.add_argument('--matrix', type=Path, default=None,
                       help='Matrice CSV (sinon construite depuis la configuration)')

    sweep = subparsers.add_parser('sweep', parents=[common], help='Campagne Monte-Carlo en distance')
    sweep.add_argument('--dump-realizations', action='store_true',
                       help='Écrit chaque équilibre dans realizations.jsonl')
    sweep.add_argument('--figures', action='store_true', help='Écrit aussi les cartes PNG')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    ConsoleUI.set_quiet(args.quiet)
    try:
        setup_logging(getattr(logging, args.log_level), log_dir=args.out / 'logs', quiet=args.quiet)
    except OSError as e:
        ConsoleUI.print_error(f"Journal impossible à créer dans {args.out}: {e.strerror}")
        return ExportError.exit_code
    logger = logging.getLogger('blockpeek.cli')

    try:
        config = load_config(args.config, seed_override=args.seed)
        if args.command == 'payoff' and args.rho_a is not None:
            config = replace(config, scenario=config.scenario.with_rho_a(args.rho_a))

        ctx = CommandContext(config=config, out_dir=args.out, config_path=args.config)
        ConsoleUI.print_header(args.command)

        if args.command == 'pattern':
            execute('pattern', ctx, cmd_pattern, resolution_deg=args.resolution, figures=args.figures)
        elif args.command == 'payoff':
            execute('payoff', ctx, cmd_payoff)
        elif args.command == 'solve':
            execute('solve', ctx, cmd_solve, matrix_path=args.matrix)
        elif args.command == 'sweep':
            monitor = PerformanceMonitor()
            execute('sweep', ctx, cmd_sweep, dump_realizations=args.dump_realizations,
                    figures=args.figures, monitor=monitor)
            monitor.report()

    except BlockPeekError as e:
        logger.debug("Trace de l'erreur", exc_info=True)
        ConsoleUI.print_error(str(e))
        return e.exit_code
    except KeyboardInterrupt:
        ConsoleUI.print_warning("Interruption par l'utilisateur")
        return 130

    return 0


if __name__ == "__main__":
    sys.exit(main())
