# tests/unit/core/test_entities.py

import math

import pytest

from src.core.entities.boundary import (
    BoundarySample,
    CompatibilityReport,
    HolderFit,
    HolderProfile,
    is_monotone,
)
from src.core.entities.estimates import (
    DistanceReport,
    ExponentEstimate,
    TraceEntry,
    VerificationReport,
)
from src.core.entities.word import Word
from src.core.value_objects.extended_real import INFINITY, ExtendedReal
from src.core.value_objects.isometry_class import IsometryClass
from src.shared.constants import DistanceMethod, EstimateKind, IsometryKind, LemmaName


def _sample(x, y):
    return BoundarySample(Word.of(1), ExtendedReal.of(x), ExtendedReal.of(y))


class TestEstimates:
    """Exponent estimates and distance reports."""

    def test_value_below_one_rejected(self):
        with pytest.raises(ValueError):
            ExponentEstimate(EstimateKind.DELTA, 0.5, None, 3)

    def test_trace_must_be_nondecreasing(self):
        trace = (TraceEntry(1, 1.5, Word.of(1)), TraceEntry(2, 1.2, Word.of(1, 2)))
        with pytest.raises(ValueError):
            ExponentEstimate(EstimateKind.DELTA, 1.5, Word.of(1), 2, trace=trace)

    def test_upper_bound_violation(self):
        estimate = ExponentEstimate(EstimateKind.RHO, 1.5, Word.of(1), 2,
                                    upper_bound=1.2, upper_witness=Word.of(2))
        assert estimate.violated
        assert estimate.to_dict()['upper_witness'] == [2]

    def test_trace_value_lookup(self):
        trace = (TraceEntry(1, 1.0, None), TraceEntry(2, 1.25, Word.of(1, 2)))
        estimate = ExponentEstimate(EstimateKind.DELTA, 1.25, Word.of(1, 2), 2, trace=trace)
        assert estimate.trace_value(2) == 1.25
        with pytest.raises(KeyError):
            estimate.trace_value(5)

    def test_distance_report_requires_max(self):
        with pytest.raises(ValueError):
            DistanceReport(0.1, 0.2, 0.1, DistanceMethod.DELTA, 4)

    def test_distance_report_dict(self):
        report = DistanceReport(0.3, 0.2, 0.3, DistanceMethod.DELTA, 4)
        data = report.to_dict()
        assert data['d_ls'] == 0.3
        assert data['method'] == 'delta'
        assert data['delta_sym'] is None

    def test_verification_status(self):
        report = VerificationReport(LemmaName.SQUARE, False, 0.5)
        assert report.to_dict()['status'] == 'FAIL'


class TestIsometryClass:
    """Classification records."""

    def test_hyperbolic_needs_fixed_points(self):
        with pytest.raises(ValueError):
            IsometryClass(IsometryKind.HYPERBOLIC, 3.0, log_lambda=1.0)

    def test_huge_multiplier_is_infinite(self):
        klass = IsometryClass(IsometryKind.HYPERBOLIC, 3.0, log_lambda=1e4,
                              attracting=ExtendedReal(0.0), repelling=INFINITY)
        assert math.isinf(klass.lam)
        assert klass.to_dict()['repelling'] == "inf"

    def test_parabolic_needs_omega(self):
        with pytest.raises(ValueError):
            IsometryClass(IsometryKind.PARABOLIC, 2.0, fixed=INFINITY)


class TestBoundaryEntities:
    """Samples, fits and reports of the boundary analysis."""

    def test_monotone(self):
        assert is_monotone([_sample(0.0, 1.0), _sample(1.0, 2.0), _sample("inf", "inf")])
        assert not is_monotone([_sample(0.0, 2.0), _sample(1.0, 1.0)])

    def test_sample_row(self):
        row = _sample("inf", 2.0).to_row()
        assert row == {'word': '1', 'x': 'inf', 'y': 2.0, 'kind': 'attracting_hyp'}

    def test_fit_bounds(self):
        with pytest.raises(ValueError):
            HolderFit(1.5, 1.0, ExtendedReal(0.0), 0.5, 1.0, 0.0, 8, 1.5)
        with pytest.raises(ValueError):
            HolderFit(0.5, 2.0, ExtendedReal(0.0), 0.5, 0.5, 0.0, 8, 0.5)

    def test_profile_band_uses_largest_inverse_exponent(self):
        fits = (HolderFit(0.8, 1.25, ExtendedReal(0.0), 0.5, 1.0, 0.0, 8, 0.8),
                HolderFit(0.5, 2.0, ExtendedReal(1.0), 0.5, 1.0, 0.0, 8, 0.5))
        profile = HolderProfile(fits, (), reference=2.1)
        assert profile.max_inv_alpha == 2.0
        assert profile.within_band
        assert profile.to_dict()['max_inv_alpha'] == 2.0
        assert HolderProfile(fits, (), reference=1.25).within_band is False
        assert HolderProfile(fits, (), reference=3.0).within_band is False
        assert HolderProfile(fits, ()).within_band is None
        assert HolderProfile((), (0,), reference=2.0).within_band is None

    def test_compatibility_report(self):
        report = CompatibilityReport(3, ((Word.of(1), Word.of(2)),))
        assert not report.compatible
        assert report.to_dict()['violations'] == [[[1], [2]]]
