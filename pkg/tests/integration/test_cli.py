# tests/integration/test_cli.py

import json

import pytest
from click.testing import CliRunner

from src.presentation.cli import cli
from tests.fixtures.sample_groups import GROUPS_DIR, TORUS_SOURCE, TORUS_TARGET, TPS

TORUS_FILE = str(GROUPS_DIR / "torus_3_3_plus.json")


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, *args):
    return runner.invoke(cli, ['--log-level', 'ERROR', *args])


def _report(path):
    return json.loads(path.read_text(encoding='utf-8'))


class TestClassifyCommand:
    """fuchsian-spectra classify."""

    def test_thrice_punctured_sphere(self, runner, tmp_path):
        out = tmp_path / "classify.json"
        result = _invoke(runner, 'classify', TPS, '--out', str(out))
        assert result.exit_code == 0, result.output
        report = _report(out)
        assert report['schema'] == 1
        assert [p['kind'] for p in report['result']['peripherals']] == ['parabolic'] * 3

    def test_torus_file(self, runner, tmp_path):
        out = tmp_path / "classify.json"
        result = _invoke(runner, 'classify', TORUS_FILE, '--out', str(out))
        assert result.exit_code == 0, result.output
        traces = [g['trace'] for g in _report(out)['result']['generators']]
        assert traces == pytest.approx([3.0, 3.0])

    def test_malformed_file(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"rank": 2, "generators": [[[1, 2], [3, 4]]')
        result = _invoke(runner, 'classify', str(bad))
        assert result.exit_code == 64

    def test_missing_file(self, runner, tmp_path):
        result = _invoke(runner, 'classify', str(tmp_path / "absent.json"))
        assert result.exit_code == 64


class TestDistanceCommand:
    """fuchsian-spectra distance."""

    def test_same_group_twice(self, runner, tmp_path):
        out = tmp_path / "distance.json"
        result = _invoke(runner, 'distance', TORUS_FILE, TORUS_FILE, '--max-len', '4',
                         '--out', str(out))
        assert result.exit_code == 0, result.output
        body = _report(out)['result']
        assert body['d_L_forward'] == 0.0
        assert body['d_L_backward'] == 0.0
        assert body['d_ls'] == 0.0

    def test_config_travels_with_report(self, runner, tmp_path):
        out = tmp_path / "distance.json"
        result = _invoke(runner, 'distance', TORUS_SOURCE, TORUS_TARGET, '--max-len', '4',
                         '--tol', 'TOL_PT=1e-9', '--out', str(out))
        assert result.exit_code == 0, result.output
        report = _report(out)
        assert report['config']['max_len'] == 4
        assert report['config']['tolerances']['TOL_PT'] == 1e-9
        assert report['result']['d_ls'] > 0.0

    def test_budget_exceeded(self, runner):
        result = _invoke(runner, 'distance', TORUS_SOURCE, TORUS_TARGET, '--max-len', '30')
        assert result.exit_code == 2

    def test_unknown_tolerance(self, runner):
        result = _invoke(runner, 'distance', TORUS_SOURCE, TORUS_TARGET, '--tol', 'TOL_NOPE=1')
        assert result.exit_code == 64

    def test_csv_needs_out(self, runner):
        result = _invoke(runner, 'distance', TORUS_SOURCE, TORUS_TARGET, '--format', 'csv')
        assert result.exit_code == 64

    def test_bad_option_value(self, runner):
        result = _invoke(runner, 'distance', TORUS_SOURCE, TORUS_TARGET, '--max-len', '0')
        assert result.exit_code == 64


class TestVerifyCommands:
    """fuchsian-spectra verify."""

    def test_square_law(self, runner, tmp_path):
        out = tmp_path / "square.json"
        result = _invoke(runner, 'verify', 'square', '--omega', '2', '--fixed', '5',
                         '--out', str(out))
        assert result.exit_code == 0, result.output
        body = _report(out)['result']
        assert body['status'] == 'PASS'
        assert body['details']['signed_value'] == pytest.approx(-4.0)

    def test_conjugate_closed_form(self, runner, tmp_path):
        out = tmp_path / "eq3.json"
        result = _invoke(runner, 'verify', 'eq3', '--lambda', '4', '--N', '1', '--n', '1',
                         '--out', str(out))
        assert result.exit_code == 0, result.output
        assert _report(out)['result']['details']['closed_form'] == pytest.approx(-2.25)

    def test_exponent_limit(self, runner, tmp_path):
        result = _invoke(runner, 'verify', 'bn', '--lsrc', '4', '--ltgt', '16', '--nmax', '20',
                         '--out', str(tmp_path / "bn.json"))
        assert result.exit_code == 0, result.output

    def test_trace_exponent(self, runner, tmp_path):
        result = _invoke(runner, 'verify', 'tr', '--lsrc', '4', '--ltgt', '16',
                         '--out', str(tmp_path / "tr.json"))
        assert result.exit_code == 0, result.output

    def test_wrong_normalization(self, runner):
        result = _invoke(runner, 'verify', 'eq3', '--lambda', '0.5', '--N', '1', '--n', '1')
        assert result.exit_code == 64

    def test_tolerance_override(self, runner, tmp_path):
        out = tmp_path / "square.json"
        result = _invoke(runner, 'verify', 'square', '--omega', '2', '--fixed', '5',
                         '--tol', 'TOL_CLASS=1e-8', '--out', str(out))
        assert result.exit_code == 0, result.output
        report = _report(out)
        assert report['config']['tolerances']['TOL_CLASS'] == 1e-8
        assert report['result']['status'] == 'PASS'

    def test_unknown_tolerance(self, runner):
        result = _invoke(runner, 'verify', 'eq2', '--omega', '1', '--fixed', '0',
                         '--tol', 'TOL_NOPE=1')
        assert result.exit_code == 64

    def test_reports_are_reproducible(self, runner, tmp_path):
        out = tmp_path / "square.json"
        args = ('verify', 'eq2', '--omega', '-1.5', '--fixed', '2', '--no-meta', '--out', str(out))
        assert _invoke(runner, *args).exit_code == 0
        first = out.read_bytes()
        assert _invoke(runner, *args).exit_code == 0
        assert out.read_bytes() == first
        assert 'meta' not in json.loads(first)


class TestBoundaryCommand:
    """fuchsian-spectra boundary."""

    def test_norm_requires_seed(self, runner):
        result = _invoke(runner, 'boundary', TORUS_SOURCE, TORUS_TARGET, '--norm')
        assert result.exit_code == 64

    def test_window_validated(self, runner):
        result = _invoke(runner, 'boundary', TORUS_SOURCE, TORUS_TARGET, '--window', '2')
        assert result.exit_code == 64

    def test_seeded_run(self, runner, tmp_path):
        out = tmp_path / "boundary.json"
        samples = tmp_path / "samples.csv"
        result = _invoke(runner, 'boundary', TORUS_SOURCE, TORUS_TARGET, '--max-len', '4',
                         '--norm', '--seed', '7', '--n-tuples', '100',
                         '--samples-out', str(samples), '--out', str(out))
        assert result.exit_code == 0, result.output
        body = _report(out)['result']
        assert body['monotone'] is True
        assert body['compatibility']['compatible'] is True
        assert body['norm']['seed'] == 7
        assert samples.read_text().splitlines()[0] == "word,x,y,kind"
        assert len(samples.read_text().splitlines()) == body['n_samples'] + 1
