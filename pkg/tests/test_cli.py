"""
Tests de bout en bout de la ligne de commande.
"""

import hashlib
import json

import numpy as np
import pytest

from main import main
from src.cli.commands import _single_realization
from src.core.game import solve_zero_sum_lp
from src.models.scenario import Scenario


def _run(out_dir, *args):
    return main(['--quiet', '--out', str(out_dir)] + list(args))


def _data_rows(path):
    lines = path.read_text(encoding='utf-8').split('\n')
    return [line.split(',') for line in lines if line and not line.startswith('#')]


def _manifest_digests(out_dir):
    manifest = json.loads((out_dir / 'manifest.json').read_text(encoding='utf-8'))
    return {entry['path']: entry['sha256'] for entry in manifest['files']}


def _sha256(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _sweep_config(tmp_path, distances=(1.0, 2.0), realizations=2):
    path = tmp_path / 'sweep.json'
    path.write_text(json.dumps({'distances_m': list(distances), 'realizations': realizations,
                                'master_seed': 17}, indent=2), encoding='utf-8')
    return path


class TestPattern:

    def test_rows_and_boresight(self, tmp_path):
        assert _run(tmp_path, 'pattern', '--resolution', '0.5') == 0
        rows = _data_rows(tmp_path / 'pattern.csv')
        assert rows[0] == ['theta_deg', 'gain_dbi']
        assert len(rows) - 1 == 361
        assert ['0.0000', '20.0000'] in rows
        assert rows[1][0] == '-90.0000' and rows[-1][0] == '90.0000'

    def test_near_null_neighborhood(self, tmp_path):
        _run(tmp_path, 'pattern', '--resolution', '0.5')
        gains = {float(a): float(g) for a, g in _data_rows(tmp_path / 'pattern.csv')[1:]}
        assert min(g for a, g in gains.items() if abs(a - 15.0) <= 0.5) <= -20.0
        assert gains[30.0] == -40.0

    def test_metrics_in_comments(self, tmp_path):
        _run(tmp_path, 'pattern')
        text = (tmp_path / 'pattern.csv').read_text(encoding='utf-8')
        assert '# hpbw_deg=' in text
        assert len(_data_rows(tmp_path / 'pattern.csv')) - 1 == 1801

    def test_options_after_subcommand(self, tmp_path):
        assert main(['pattern', '--quiet', '--out', str(tmp_path), '--resolution', '5']) == 0
        assert len(_data_rows(tmp_path / 'pattern.csv')) - 1 == 37

    def test_resolution_out_of_range(self, tmp_path):
        assert _run(tmp_path, 'pattern', '--resolution', '10') == 3

    @pytest.mark.parametrize('antenna', [
        {'array_elements_azimuth': 1},
        {'array_elements_azimuth': 2},
        {'array_elements_azimuth': 1, 'element_pattern_exponent': 0.0},
    ])
    def test_patterns_without_sidelobes(self, tmp_path, antenna):
        config = tmp_path / 'antenna.json'
        config.write_text(json.dumps(antenna), encoding='utf-8')
        assert _run(tmp_path / 'out', '--config', str(config), 'pattern', '--resolution', '1') == 0
        assert len(_data_rows(tmp_path / 'out' / 'pattern.csv')) - 1 == 181
        manifest = json.loads((tmp_path / 'out' / 'manifest.json').read_text(encoding='utf-8'))
        assert 'first_sidelobe_db' not in manifest['metadata']['result']

    def test_isotropic_pattern_omits_beamwidth(self, tmp_path):
        config = tmp_path / 'flat.json'
        config.write_text(json.dumps({'array_elements_azimuth': 1, 'element_pattern_exponent': 0.0}),
                          encoding='utf-8')
        assert _run(tmp_path / 'out', '--config', str(config), 'pattern') == 0
        text = (tmp_path / 'out' / 'pattern.csv').read_text(encoding='utf-8')
        assert '# hpbw_deg=' not in text
        assert '# boresight_gain_dbi=20.0000' in text

    def test_figure(self, tmp_path):
        assert _run(tmp_path / 'a', 'pattern', '--resolution', '1', '--figures') == 0
        assert _run(tmp_path / 'b', 'pattern', '--resolution', '1', '--figures') == 0
        assert _manifest_digests(tmp_path / 'a')['pattern.png'] == _sha256(tmp_path / 'a' / 'pattern.png')
        assert (tmp_path / 'a' / 'pattern.png').read_bytes() == (tmp_path / 'b' / 'pattern.png').read_bytes()


class TestPayoff:

    def test_matrix_layout_and_manifest(self, tmp_path):
        assert _run(tmp_path, '--seed', '3', 'payoff') == 0
        rows = _data_rows(tmp_path / 'payoff.csv')
        assert len(rows) == 16 and all(len(row) == 16 for row in rows)
        manifest = json.loads((tmp_path / 'manifest.json').read_text(encoding='utf-8'))
        assert manifest['command'] == 'payoff'
        assert manifest['master_seed'] == 3
        assert [f['path'] for f in manifest['files']] == ['payoff.csv']

    def test_fixed_seed_is_reproducible(self, tmp_path):
        first, second = tmp_path / 'a', tmp_path / 'b'
        _run(first, '--seed', '3', 'payoff')
        _run(second, '--seed', '3', 'payoff')
        assert (first / 'payoff.csv').read_bytes() == (second / 'payoff.csv').read_bytes()

    def test_obstacle_distance_option(self, tmp_path):
        assert _run(tmp_path, 'payoff', '--rho-a', '2.25') == 0
        manifest = json.loads((tmp_path / 'manifest.json').read_text(encoding='utf-8'))
        assert manifest['config']['rho_a_m'] == 2.25
        assert _run(tmp_path / 'bad', 'payoff', '--rho-a', '3.5') == 3


class TestSolve:

    @pytest.mark.parametrize('text, size', [('1,-1\n-1,1\n', 2), ('0,-1,1\n1,0,-1\n-1,1,0\n', 3)])
    def test_symmetric_games(self, tmp_path, text, size):
        matrix = tmp_path / 'game.csv'
        matrix.write_text(text, encoding='utf-8')
        assert _run(tmp_path / 'out', 'solve', '--matrix', str(matrix)) == 0
        result = json.loads((tmp_path / 'out' / 'equilibrium.json').read_text(encoding='utf-8'))
        assert result['value'] == pytest.approx(0.0, abs=1e-9)
        np.testing.assert_allclose(result['x_r'], np.full(size, 1.0 / size), atol=1e-9)
        assert result['support_a'] == list(range(size))

    def test_payoff_file_round_trip(self, tmp_path):
        _run(tmp_path, '--seed', '8', 'payoff')
        _run(tmp_path / 'file', 'solve', '--matrix', str(tmp_path / 'payoff.csv'))
        _run(tmp_path / 'config', '--seed', '8', 'solve')
        from_file = json.loads((tmp_path / 'file' / 'equilibrium.json').read_text(encoding='utf-8'))
        from_config = json.loads((tmp_path / 'config' / 'equilibrium.json').read_text(encoding='utf-8'))

        matrix, _ = _single_realization(Scenario(), 8)
        rounded = solve_zero_sum_lp(np.round(matrix.values, 4))
        assert from_file['value'] == pytest.approx(rounded.value, abs=1e-6)
        assert from_file['value'] == pytest.approx(from_config['value'], abs=1e-4)
        assert from_file['row_labels'][14] == '60.0000'

    def test_residuals_reported(self, tmp_path):
        _run(tmp_path, 'solve')
        result = json.loads((tmp_path / 'equilibrium.json').read_text(encoding='utf-8'))
        assert result['shape'] == [15, 15]
        assert max(result['residuals'][k] for k in ('row_support', 'col_support')) < 1e-7
        assert abs(sum(result['x_a']) - 1.0) < 1e-9

    def test_bad_matrix_file(self, tmp_path):
        matrix = tmp_path / 'game.csv'
        matrix.write_text('1,2\n3,oops\n', encoding='utf-8')
        assert _run(tmp_path / 'out', 'solve', '--matrix', str(matrix)) == 2
        assert _run(tmp_path / 'out', 'solve', '--matrix', str(tmp_path / 'absent.csv')) == 2


class TestSweep:

    def test_outputs(self, tmp_path, single_process):
        config = _sweep_config(tmp_path)
        assert _run(tmp_path / 'out', '--config', str(config), 'sweep', '--dump-realizations') == 0
        out = tmp_path / 'out'

        for name in ('heatmap_receiver.csv', 'heatmap_adversary.csv'):
            rows = _data_rows(out / name)
            assert rows[0] == ['rho_a_m', 'theta_deg', 'mean_probability']
            assert len(rows) - 1 == 2 * 15
            for rho in ('1.00', '2.00'):
                assert sum(float(r[2]) for r in rows[1:] if r[0] == rho) == pytest.approx(1.0, abs=1e-6)

        summary = _data_rows(out / 'summary.csv')
        assert len(summary) - 1 == 2
        assert all(float(row[3]) < 14.1 for row in summary[1:])

        realizations = (out / 'realizations.jsonl').read_text(encoding='utf-8').splitlines()
        assert len(realizations) == 4
        manifest = json.loads((out / 'manifest.json').read_text(encoding='utf-8'))
        assert manifest['master_seed'] == 17
        assert 'lp_solve' in manifest['metadata']['timings']

    def test_byte_identical_reruns(self, tmp_path, single_process):
        config = _sweep_config(tmp_path, distances=(1.5,), realizations=3)
        _run(tmp_path / 'a', '--config', str(config), 'sweep')
        _run(tmp_path / 'b', '--config', str(config), 'sweep')
        for name in ('heatmap_receiver.csv', 'heatmap_adversary.csv', 'summary.csv'):
            assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()

    def test_figures(self, tmp_path, single_process):
        config = _sweep_config(tmp_path)
        for name in ('a', 'b'):
            assert _run(tmp_path / name, '--config', str(config), 'sweep', '--figures') == 0

        digests = _manifest_digests(tmp_path / 'a')
        for figure in ('heatmap_receiver.png', 'heatmap_adversary.png', 'mean_angles.png'):
            assert digests[figure] == _sha256(tmp_path / 'a' / figure)
            assert (tmp_path / 'a' / figure).read_bytes() == (tmp_path / 'b' / figure).read_bytes()

    @pytest.mark.slow
    def test_default_campaign(self, tmp_path):
        assert _run(tmp_path / 'a', 'sweep') == 0
        assert _run(tmp_path / 'b', 'sweep') == 0
        assert len(_data_rows(tmp_path / 'a' / 'heatmap_receiver.csv')) - 1 == 7 * 15
        assert len(_data_rows(tmp_path / 'a' / 'summary.csv')) - 1 == 7
        for name in ('heatmap_receiver.csv', 'heatmap_adversary.csv', 'summary.csv'):
            assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()


class TestExitCodes:

    def test_invalid_configuration(self, tmp_path):
        config = tmp_path / 'bad.json'
        config.write_text('{"unknown": 1}', encoding='utf-8')
        assert _run(tmp_path / 'out', '--config', str(config), 'pattern') == 2

    def test_unusable_output_directory(self, tmp_path):
        blocker = tmp_path / 'fichier'
        blocker.write_text('x')
        assert _run(blocker, 'pattern') == 4

    def test_invalid_thread_cap(self, tmp_path, monkeypatch):
        monkeypatch.setenv('BLOCKPEEK_THREADS', 'many')
        config = _sweep_config(tmp_path, distances=(1.5,), realizations=1)
        assert _run(tmp_path / 'out', '--config', str(config), 'sweep') == 2
