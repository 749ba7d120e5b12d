# tests/unit/application/test_surface_builder.py

import pytest

from src.application.services.surface_builder import (
    COMMUTATOR,
    fricke_trace,
    punctured_torus,
    thrice_punctured_sphere,
)
from src.core.entities.word import Word
from src.core.value_objects.moebius_map import commutator_trace
from src.shared.constants import IsometryKind, RootChoice
from src.shared.utils.exceptions import NonRealRootError, ValidationError


class TestSurfaceBuilder:
    """Builtin punctured torus and thrice-punctured sphere."""

    def test_fricke_roots(self):
        assert fricke_trace(3.0, 3.0, RootChoice.PLUS) == pytest.approx(6.0)
        assert fricke_trace(3.0, 3.0, "minus") == pytest.approx(3.0)

    def test_markov_triple_satisfies_relation(self):
        x, y = 4.0, 3.0
        z = fricke_trace(x, y)
        assert x * x + y * y + z * z == pytest.approx(x * y * z)

    def test_non_real_root(self):
        with pytest.raises(NonRealRootError) as info:
            fricke_trace(2.5, 2.5)
        assert info.value.discriminant < 0

    def test_traces_must_exceed_two(self):
        with pytest.raises(ValidationError):
            punctured_torus(2.0, 3.0)

    def test_torus_is_normalized(self):
        group = punctured_torus(3.0, 3.0)
        assert group.peripherals == (COMMUTATOR,)
        assert group.is_normalized()
        assert commutator_trace(*group.generators) == pytest.approx(-2.0, abs=1e-9)

    def test_minus_root_changes_ab(self):
        plus = punctured_torus(4.0, 3.0, "plus")
        minus = punctured_torus(4.0, 3.0, "minus")
        word = Word.of(1, 2)
        assert plus.evaluate(word).trace > minus.evaluate(word).trace

    def test_thrice_punctured_sphere(self):
        group = thrice_punctured_sphere()
        assert group.label == "tps"
        assert group.is_normalized()
        for index in range(3):
            assert group.peripheral_map(index).kind() == IsometryKind.PARABOLIC
