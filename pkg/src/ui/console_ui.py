"""
Module: console_ui.py
--------------------
Interface utilisateur en console pour le jeu de blocage.

Fournit des méthodes pour afficher les informations des commandes
de manière formatée et colorée dans la console.

Classes:
    ConsoleUI: Gestionnaire d'interface console

Version: 1.0
"""

import colorama
from colorama import Fore, Style

# Initialisation de colorama pour Windows
colorama.init()


class ConsoleUI:
    """Classe pour gérer l'interface utilisateur en console"""

    # Mode silencieux (--quiet): seules les erreurs et avertissements s'affichent
    quiet = False

    @classmethod
    def set_quiet(cls, quiet: bool) -> None:
        cls.quiet = quiet

    @classmethod
    def print_header(cls, command: str):
        """Affiche l'en-tête de la commande"""
        if cls.quiet:
            return
        print("\n" + "="*80)
        print(f"{Fore.CYAN}BLOCKAGE-PEEKING GAME - {command.upper()}{Style.RESET_ALL}".center(80))
        print("="*80 + "\n")

    @classmethod
    def print_scenario(cls, scenario):
        """
        Affiche les paramètres physiques du scénario

        Args:
            scenario: Instance de Scenario
        """
        if cls.quiet:
            return
        stats = [
            ("Fréquence", f"{scenario.frequency_hz / 1e9:.1f} GHz", Fore.BLUE),
            ("Puissance émise", f"{scenario.tx_power_dbm:.1f} dBm", Fore.CYAN),
            ("Bruit", f"{scenario.noise_power_dbm:.1f} dBm", Fore.CYAN),
            ("Distance R", f"{scenario.rho_r_m:.2f} m", Fore.GREEN),
            ("Distance A", f"{scenario.rho_a_m:.2f} m", Fore.MAGENTA),
            ("Évanouissement", f"{scenario.fading_mode.value} "
                               f"({scenario.fading_mean_power_db:.1f} dB)", Fore.YELLOW),
        ]

        print("\n" + "-"*40)
        print(f"{Fore.WHITE}Scénario{Style.RESET_ALL}")
        print("-"*40)

        for name, value, color in stats:
            print(f"{color}{name}: {value}{Style.RESET_ALL}")

        print("-"*40 + "\n")

    @classmethod
    def print_progress(cls, done: int, total: int, label: str = "réalisations"):
        """
        Affiche l'avancement d'une campagne

        Args:
            done: Unités terminées
            total: Unités prévues
            label: Nature des unités
        """
        if cls.quiet:
            return
        end = '\n' if done >= total else ''
        print(f"\r{Fore.YELLOW}Avancement: {done}/{total} {label}{Style.RESET_ALL}",
              end=end, flush=True)

    @classmethod
    def print_summary_table(cls, aggregates):
        """Affiche le tableau récapitulatif d'un balayage en distance"""
        if cls.quiet:
            return
        print(f"\n{Fore.CYAN}{'rho_A (m)':>10} {'θ_R moyen':>10} {'θ_A moyen':>10} "
              f"{'ν moyen':>9} {'σ(ν)':>7}{Style.RESET_ALL}")
        for agg in aggregates:
            print(f"{agg.rho_a_m:>10.2f} {agg.mean_angle_r_deg:>10.2f} "
                  f"{agg.mean_angle_a_deg:>10.2f} {agg.mean_value:>9.3f} {agg.std_value:>7.3f}")
        print()

    @staticmethod
    def print_error(message):
        """
        Affiche un message d'erreur

        Args:
            message: Message d'erreur à afficher
        """
        print(f"\n{Fore.RED}Erreur: {message}{Style.RESET_ALL}\n")

    @staticmethod
    def print_warning(message):
        """
        Affiche un avertissement

        Args:
            message: Message d'avertissement à afficher
        """
        print(f"{Fore.YELLOW}Avertissement ⚠️ : {message}{Style.RESET_ALL}\n")

    @classmethod
    def print_status_update(cls, message, color=Fore.WHITE):
        """
        Affiche une mise à jour du statut

        Args:
            message: Message de statut à afficher
            color: Couleur du message (défaut: blanc)
        """
        if cls.quiet:
            return
        print(f"{color}{message}{Style.RESET_ALL}\n")

    @classmethod
    def print_success(cls, message):
        """Affiche un message de succès"""
        if cls.quiet:
            return
        print(f"{Fore.GREEN} Succès : ✓ {message}{Style.RESET_ALL}\n")
