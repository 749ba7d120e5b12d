# src/core/value_objects/__init__.py

from src.core.value_objects.extended_real import INFINITY, ExtendedReal
from src.core.value_objects.isometry_class import IsometryClass
from src.core.value_objects.moebius_map import (
    MoebiusMap,
    apply,
    classify,
    commutator_trace,
    compose,
    conjugate,
    cross_ratio,
    hyperbolic_from_fixed_points,
    inverse,
    parabolic_from_fixed_point,
    power,
    translation_vector,
)
from src.core.value_objects.parabolic_vector import ParabolicVector

__all__ = [
    'INFINITY',
    'ExtendedReal',
    'IsometryClass',
    'MoebiusMap',
    'ParabolicVector',
    'apply',
    'classify',
    'commutator_trace',
    'compose',
    'conjugate',
    'cross_ratio',
    'hyperbolic_from_fixed_points',
    'inverse',
    'parabolic_from_fixed_point',
    'power',
    'translation_vector',
]
