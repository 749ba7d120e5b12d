# tests/unit/core/test_moebius_map.py

import math

import pytest
from hypothesis import assume, given, settings as hypothesis_settings
from hypothesis import strategies as st

from src.core.value_objects.extended_real import INFINITY, ExtendedReal
from src.core.value_objects.moebius_map import (
    MoebiusMap,
    commutator_trace,
    cross_ratio,
    hyperbolic_from_fixed_points,
    parabolic_from_fixed_point,
)
from src.core.value_objects.parabolic_vector import ParabolicVector
from src.shared.constants import IsometryKind
from src.shared.utils.exceptions import (
    DegenerateTupleError,
    NotParabolicError,
    ValidationError,
)

entries = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
diagonal = st.floats(min_value=0.5, max_value=3.0, allow_nan=False)


@st.composite
def unimodular_maps(draw):
    a = draw(diagonal) * draw(st.sampled_from([1.0, -1.0]))
    b = draw(entries)
    c = draw(entries)
    return MoebiusMap(a, b, c, (1.0 + b * c) / a)


def _is_canonical(g):
    if g.trace != 0.0:
        return g.trace > 0.0
    return g.c > 0.0 or (g.c == 0.0 and g.b > 0.0)


class TestExtendedReal:
    """Points of the extended real line."""

    def test_negative_infinity_is_folded(self):
        assert ExtendedReal(-math.inf) == INFINITY
        assert ExtendedReal.of("inf").is_infinite

    def test_reciprocal_swaps_zero_and_infinity(self):
        assert ExtendedReal(0.0).reciprocal() == INFINITY
        assert INFINITY.reciprocal() == ExtendedReal(0.0)
        assert ExtendedReal(4.0).reciprocal().value == 0.25

    def test_sort_key_puts_infinity_last(self):
        points = [INFINITY, ExtendedReal(3.0), ExtendedReal(-1.0)]
        ordered = sorted(points, key=lambda p: p.sort_key())
        assert ordered == [ExtendedReal(-1.0), ExtendedReal(3.0), INFINITY]

    def test_json_token(self):
        assert INFINITY.to_json() == "inf"
        assert ExtendedReal(-0.0).to_json() == 0.0

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            ExtendedReal(math.nan)


class TestMoebiusConstruction:
    """Determinant and sign normalization."""

    def test_sign_is_canonical(self):
        g = MoebiusMap(-1.0, -2.0, 0.0, -1.0)
        assert g.to_list() == [[1.0, 2.0], [0.0, 1.0]]

    def test_zero_trace_sign_uses_c(self):
        g = MoebiusMap(0.0, 1.0, -1.0, 0.0)
        assert g.c > 0

    def test_determinant_rescaled(self):
        g = MoebiusMap(2.0, 0.0, 0.0, 2.0)
        assert g.to_list() == [[1.0, 0.0], [0.0, 1.0]]
        assert g.kind() == IsometryKind.IDENTITY

    def test_non_positive_determinant_rejected(self):
        with pytest.raises(ValidationError):
            MoebiusMap(1.0, 2.0, 3.0, 4.0)

    def test_singular_matrix_rejected(self):
        with pytest.raises(ValidationError):
            MoebiusMap(1.0, 1.0, 1.0, 1.0)

    def test_large_unimodular_power_accepted(self):
        # Entries near 1e12: ad - bc no longer resolves the determinant
        g = hyperbolic_from_fixed_points(16.0, 1.0, 2.0)
        power = g.power(20)
        assert power.kind() == IsometryKind.HYPERBOLIC
        assert power.log_multiplier() == pytest.approx(20 * math.log(16.0), rel=1e-9)

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            MoebiusMap(math.inf, 0.0, 0.0, 1.0)

    def test_from_matrix_shape_checked(self):
        with pytest.raises(ValidationError):
            MoebiusMap.from_matrix([[1.0, 2.0, 3.0]])

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(unimodular_maps())
    def test_unimodular_invariants(self, g):
        assert g.determinant == pytest.approx(1.0, abs=1e-12)
        assert g.trace >= 0.0


class TestMoebiusAlgebra:
    """Composition, inverses, powers and the action on the boundary."""

    def test_compose_applies_right_first(self):
        f = MoebiusMap.translation(1.0)
        g = MoebiusMap.scaling(4.0)
        assert f.compose(g).apply(1.0).value == pytest.approx(5.0)
        assert g.compose(f).apply(1.0).value == pytest.approx(8.0)

    def test_inverse_undoes_map(self):
        g = MoebiusMap(2.0, 1.0, 1.0, 1.0)
        assert g.compose(g.inverse()).kind() == IsometryKind.IDENTITY

    def test_power_of_translation(self):
        assert MoebiusMap.translation(1.0).power(5).b == pytest.approx(5.0)
        assert MoebiusMap.translation(1.0).power(-3).b == pytest.approx(-3.0)

    def test_action_on_infinity(self):
        g = MoebiusMap(2.0, 1.0, 1.0, 1.0)
        assert g.apply(INFINITY).value == pytest.approx(2.0)
        assert g.apply(-1.0).is_infinite
        assert MoebiusMap.translation(3.0).apply("inf").is_infinite

    def test_conjugate_by(self):
        h = MoebiusMap.scaling(4.0)
        conjugated = MoebiusMap.translation(1.0).conjugate_by(h)
        # h⁻¹(h(z) + 1) = z + 1/4
        assert conjugated.b == pytest.approx(0.25)

    def test_commutator_trace_keeps_sign(self):
        first = MoebiusMap(3.0, 1.0, -1.0, 0.0)
        p = (3.0 + math.sqrt(5.0)) / 2.0
        second = MoebiusMap(p, 0.0, 6.0 - 3.0 * p, 1.0 / p)
        assert commutator_trace(first, second) == pytest.approx(-2.0, abs=1e-9)

    @hypothesis_settings(max_examples=10_000, deadline=None)
    @given(unimodular_maps(), unimodular_maps())
    def test_operations_keep_normal_form(self, f, g):
        for result in (f.compose(g), f.inverse(), g.conjugate_by(f)):
            assert result.determinant == pytest.approx(
                1.0, abs=max(1e-12, 1e-13 * result.norm_squared))
            assert _is_canonical(result)

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(st.floats(min_value=1.5, max_value=10.0),
           st.floats(min_value=-5.0, max_value=5.0),
           st.floats(min_value=-5.0, max_value=5.0),
           st.integers(min_value=1, max_value=10))
    def test_power_multiplies_log_multiplier(self, lam, attracting, repelling, n):
        assume(abs(attracting - repelling) > 0.1)
        g = hyperbolic_from_fixed_points(lam, attracting, repelling)
        assert g.power(n).log_multiplier() == pytest.approx(n * g.log_multiplier(), rel=1e-8)

    def test_translation_conjugation_fixes_unit_translation(self):
        g0 = MoebiusMap.translation(1.0)
        for shift in (-3.5, 0.25, 12.0):
            assert g0.conjugate_by(MoebiusMap.translation(shift)).to_list() == g0.to_list()

    @pytest.mark.parametrize("scale,c", [(2.0, 1.0), (4.0, -0.5), (0.3, 3.0)])
    def test_translation_vector_scales_under_conjugation(self, scale, c):
        g = MoebiusMap(1.0, 0.0, c, 1.0)
        h = MoebiusMap.scaling(scale)
        assert g.translation_vector() == pytest.approx(c)
        assert g.conjugate_by(h).translation_vector() == pytest.approx(scale * c, abs=1e-10)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=1.5, max_value=20.0), unimodular_maps())
    def test_multiplier_is_conjugacy_invariant(self, lam, h):
        g = MoebiusMap.scaling(lam).conjugate_by(h)
        assert g.classify().lam == pytest.approx(lam, rel=1e-9)


class TestClassification:
    """Kinds, multipliers, fixed points and translation vectors."""

    def test_scaling_is_hyperbolic(self):
        klass = MoebiusMap.scaling(4.0).classify()
        assert klass.kind == IsometryKind.HYPERBOLIC
        assert klass.lam == pytest.approx(4.0)
        assert klass.attracting.is_infinite
        assert klass.repelling.value == 0.0

    def test_rotation_is_elliptic(self):
        assert MoebiusMap(0.0, 1.0, -1.0, 0.0).kind() == IsometryKind.ELLIPTIC

    def test_translation_vector_at_infinity(self):
        klass = MoebiusMap.translation(-2.5).classify()
        assert klass.kind == IsometryKind.PARABOLIC
        assert klass.fixed.is_infinite
        assert klass.omega == pytest.approx(-2.5)

    def test_parabolic_normal_form(self):
        h = parabolic_from_fixed_point(2.0, 5.0)
        klass = h.classify()
        assert klass.kind == IsometryKind.PARABOLIC
        assert klass.fixed.value == pytest.approx(5.0)
        assert klass.omega == pytest.approx(2.0)

    def test_translation_vector_requires_parabolic(self):
        with pytest.raises(NotParabolicError):
            MoebiusMap.scaling(2.0).translation_vector()

    def test_hyperbolic_from_fixed_points(self):
        g = hyperbolic_from_fixed_points(4.0, 0.0, 1.0)
        klass = g.classify()
        assert klass.lam == pytest.approx(4.0)
        assert klass.attracting.value == pytest.approx(0.0, abs=1e-12)
        assert klass.repelling.value == pytest.approx(1.0)

    def test_hyperbolic_needs_multiplier_above_one(self):
        with pytest.raises(ValidationError):
            hyperbolic_from_fixed_points(1.0, 0.0, 1.0)

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(unimodular_maps())
    def test_trace_multiplier_identity(self, g):
        assume(g.trace > 2.1)
        klass = g.classify()
        assert klass.kind == IsometryKind.HYPERBOLIC
        # λ^(1/2) + λ^(-1/2) = |tr|
        assert 2.0 * math.cosh(klass.log_lambda / 2.0) == pytest.approx(g.trace, rel=1e-10)

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(unimodular_maps())
    def test_kind_follows_trace(self, g):
        assume(abs(g.trace - 2.0) > 1e-6)
        expected = IsometryKind.HYPERBOLIC if g.trace > 2.0 else IsometryKind.ELLIPTIC
        assert g.kind() == expected

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=1.5, max_value=50.0),
           st.floats(min_value=-5.0, max_value=5.0),
           st.floats(min_value=-5.0, max_value=5.0))
    def test_fixed_points_round_trip(self, lam, attracting, repelling):
        assume(abs(attracting - repelling) > 0.1)
        klass = hyperbolic_from_fixed_points(lam, attracting, repelling).classify()
        assert klass.attracting.value == pytest.approx(attracting, abs=1e-8)
        assert klass.repelling.value == pytest.approx(repelling, abs=1e-8)


class TestCrossRatio:
    """Cross-ratio of four boundary points."""

    def test_value(self):
        assert cross_ratio(0.0, 1.0, 2.0, 3.0) == pytest.approx(4.0 / 3.0)

    def test_infinite_argument_drops_factors(self):
        # (p - r)/(p - s) · (q - s)/(q - r) with q = ∞
        assert cross_ratio(0.0, "inf", 1.0, 2.0) == pytest.approx(0.5)

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateTupleError):
            cross_ratio(0.0, 0.0, 1.0, 2.0)

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(unimodular_maps())
    def test_invariant_under_moebius_maps(self, g):
        points = [-1.0, 0.5, 2.0, 7.0]
        images = [g.apply(p) for p in points]
        assume(all(img.is_finite and abs(img.value) < 1e6 for img in images))
        assume(min(abs(images[i].value - images[j].value)
                   for i in range(4) for j in range(i + 1, 4)) > 1e-3)
        assert cross_ratio(*images) == pytest.approx(cross_ratio(*points), rel=1e-6)

    def test_multiplier_of_scaling(self):
        g = MoebiusMap.scaling(2.0)
        klass = g.classify()
        value = cross_ratio(g.apply(1.0), 1.0, klass.repelling, klass.attracting)
        assert value == pytest.approx(2.0)

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(st.floats(min_value=1.5, max_value=10.0),
           st.floats(min_value=-3.0, max_value=3.0),
           st.floats(min_value=-3.0, max_value=3.0),
           st.floats(min_value=-5.0, max_value=5.0))
    def test_multiplier_from_fixed_points(self, lam, attracting, repelling, s):
        assume(abs(attracting - repelling) > 0.5)
        assume(min(abs(s - attracting), abs(s - repelling)) > 0.25)
        g = hyperbolic_from_fixed_points(lam, attracting, repelling)
        image = g.apply(s)
        assume(image.is_finite and abs(image.value) < 100.0)
        assume(min(abs(image.value - attracting), abs(image.value - repelling),
                   abs(image.value - s)) > 0.05)
        value = cross_ratio(image, s, repelling, attracting)
        assert value == pytest.approx(lam, rel=1e-9)


class TestParabolicVector:
    """Rank-one form of parabolic maps under conjugation."""

    def test_translation_vector(self):
        vector = MoebiusMap.translation(1.0).parabolic_vector()
        assert vector.sigma == 1
        assert vector.omega(1e-10) == pytest.approx(1.0)

    def test_conjugation_by_scaling(self):
        vector = MoebiusMap.translation(1.0).parabolic_vector()
        scaled = vector.transformed(MoebiusMap.scaling(4.0).matrix)
        assert scaled.fixed_at_infinity(1e-10)
        assert scaled.omega(1e-10) == pytest.approx(4.0)

    def test_conjugate_with_finite_fixed_point(self):
        w = MoebiusMap(1.0, 0.0, 1.0, 1.0)
        vector = MoebiusMap.translation(1.0).parabolic_vector().transformed(w.matrix)
        direct = MoebiusMap.from_matrix(
            w.matrix @ MoebiusMap.translation(1.0).matrix @ w.inverse().matrix
        )
        assert vector.omega(1e-10) == pytest.approx(direct.translation_vector())
        assert vector.omega(1e-10) == pytest.approx(-1.0)

    def test_sigma_validated(self):
        with pytest.raises(ValueError):
            ParabolicVector(0, 1.0, 0.0)
