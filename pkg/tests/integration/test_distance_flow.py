# tests/integration/test_distance_flow.py

import csv
import math

import pytest

from src.application.run_config import RunConfig
from src.application.use_cases import ComputeDistanceUseCase, GenerateReportUseCase
from src.infrastructure.repositories.report_repository import JsonCsvReportRepository
from src.application.services.spectrum_estimator import SpectrumEstimator
from src.shared.constants import Command, DistanceMethod, EnumerationMode
from tests.fixtures.sample_groups import GROUPS_DIR, TORUS_SOURCE, TORUS_TARGET, torus_pair


class TestDistanceFlow:
    """Load two group files, estimate both directions and persist the results."""

    def test_full_distance_flow(self, tmp_path):
        source = str(GROUPS_DIR / "torus_3_3_plus.json")
        target = str(GROUPS_DIR / "torus_4_3_plus.json")

        use_case = ComputeDistanceUseCase(workers=1)
        report = use_case.execute(source, target, 4, 4, DistanceMethod.BOTH)

        # Delta drives d_L; rho only feeds the gap
        assert report.d_L_forward > 0.0
        assert report.d_ls == max(report.d_L_forward, report.d_L_backward)
        assert report.gap is not None

        repository = JsonCsvReportRepository()
        trace_path = tmp_path / "trace.csv"
        repository.save_trace_csv(use_case.trace_rows(report), trace_path)
        with open(trace_path, newline='') as handle:
            rows = list(csv.DictReader(handle))
        forward = [float(r['value']) for r in rows if r['estimate'] == 'delta_forward']
        assert forward == sorted(forward)
        assert forward[-1] == pytest.approx(report.delta_forward.value)

        config = RunConfig(Command.DISTANCE, (source, target), max_len=4, depth=4)
        envelope = GenerateReportUseCase().execute(config, report.to_dict(), include_meta=False)
        report_path = tmp_path / "report.json"
        repository.save_json(envelope, report_path)
        text = report_path.read_text()
        assert '"d_ls"' in text
        assert text.index('"config"') < text.index('"result"')

    def test_file_and_builtin_agree(self):
        use_case = ComputeDistanceUseCase(workers=1)
        from_files = use_case.execute(str(GROUPS_DIR / "torus_3_3_plus.json"),
                                      str(GROUPS_DIR / "torus_4_3_plus.json"), 4, 4)
        builtin = use_case.execute("builtin:torus:3,3,plus", "builtin:torus:4,3,plus", 4, 4)
        assert from_files.d_ls == pytest.approx(builtin.d_ls, rel=1e-8)

    @pytest.mark.slow
    def test_default_cutoff_refines_bounds(self):
        use_case = ComputeDistanceUseCase(workers=1)
        report = use_case.execute("builtin:torus:3,3", "builtin:torus:4,3", 8, 8,
                                  DistanceMethod.BOTH)
        forward = report.delta_forward
        assert forward.trace_value(8) >= forward.trace_value(4)
        assert len(forward.witness) <= 8
        assert report.rho_forward.samples > report.delta_forward.samples

    def test_length_spectrum_distance_at_cutoff_eight(self):
        report = ComputeDistanceUseCase(workers=1).execute(TORUS_SOURCE, TORUS_TARGET, 8, 8)
        assert math.exp(report.d_ls) == pytest.approx(1.368, abs=1e-3)
        assert report.d_ls == max(report.d_L_forward, report.d_L_backward)

    @pytest.mark.slow
    def test_estimators_converge_together(self):
        report = ComputeDistanceUseCase(workers=1).execute(TORUS_SOURCE, TORUS_TARGET, 10, 12,
                                                           DistanceMethod.BOTH)
        for estimate in (report.delta_forward, report.rho_forward):
            values = [entry.value for entry in estimate.trace]
            assert values == sorted(values)
        gaps = dict(report.gap_trace)
        assert gaps[10] <= gaps[8] <= gaps[6]

    @pytest.mark.slow
    def test_enumeration_modes_agree_at_default_cutoff(self):
        estimator = SpectrumEstimator(workers=1)
        iso = torus_pair()
        cyclic = estimator.delta_estimate(iso, 10, EnumerationMode.CYCLIC_REPS)
        everything = estimator.delta_estimate(iso, 10, EnumerationMode.ALL)
        assert everything.value == pytest.approx(cyclic.value, rel=1e-12)

    @pytest.mark.slow
    @pytest.mark.timeout(120)
    def test_rho_runtime_at_default_cutoff(self):
        estimate = SpectrumEstimator(workers=1).rho_estimate(torus_pair(), 10, 12)
        assert estimate.value >= 1.0
        assert estimate.cutoff == 10
