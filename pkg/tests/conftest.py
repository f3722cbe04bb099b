"""
Fixtures partagées des tests.
"""

import logging

import numpy as np
import pytest

from src.models.experiment import SweepConfig
from src.models.scenario import FadingMode, Scenario
from src.ui.console_ui import ConsoleUI


@pytest.fixture
def scenario():
    """Scénario par défaut (ρ_A = 1.5 m, κ calibré, évanouissement par case)"""
    return Scenario()


@pytest.fixture
def clean_scenario():
    """Sans diffusion ni multitrajet: r₁₂ = r₁"""
    return Scenario(scatter_coefficient=0.0, fading_mode=FadingMode.DISABLED)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_sweep():
    """Campagne courte: 3 distances, 4 réalisations"""
    return SweepConfig(distances_m=(1.0, 1.75, 2.5), realizations=4, master_seed=11)


@pytest.fixture
def single_process(monkeypatch):
    monkeypatch.setenv('BLOCKPEEK_THREADS', '1')


@pytest.fixture(autouse=True)
def quiet_console():
    ConsoleUI.set_quiet(True)
    yield
    ConsoleUI.set_quiet(False)
    root = logging.getLogger('blockpeek')
    for handler in list(root.handlers):
        handler.close()
        root.removeHandler(handler)
