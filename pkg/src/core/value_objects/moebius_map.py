# src/core/value_objects/moebius_map.py

import math
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from config.settings import settings
from src.core.value_objects.extended_real import INFINITY, ExtendedReal
from src.core.value_objects.isometry_class import IsometryClass
from src.core.value_objects.parabolic_vector import ParabolicVector
from src.shared.constants import ERROR_MESSAGES, IsometryKind
from src.shared.utils.exceptions import (
    ClassifyAmbiguousError,
    DegenerateTupleError,
    NotParabolicError,
    ValidationError,
)
from src.shared.utils.math_utils import sign

_EPS = float(np.finfo(float).eps)

PointLike = Union[ExtendedReal, int, float]


@dataclass(frozen=True)
class MoebiusMap:
    """
    Real Möbius map z ↦ (az + b)/(cz + d), an element of PSL(2, R).

    Construction rescales the determinant to 1 and picks the canonical lift:
    trace > 0, or trace == 0 with c > 0 (or c == 0 and b > 0).
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        entries = [float(v) for v in (self.a, self.b, self.c, self.d)]
        if not all(math.isfinite(v) for v in entries):
            raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field="matrix")
        a, b, c, d = entries

        ad, bc = a * d, b * c
        det = ad - bc
        # A determinant within rounding of ad and bc is taken as 1, even when it reads 0
        rounding = 64 * _EPS * (abs(ad) + abs(bc))
        if abs(det - 1.0) > max(settings.tolerances.TOL_DET, rounding):
            if det <= 0:
                raise ValidationError(
                    f"{ERROR_MESSAGES['NON_POSITIVE_DET']} (got {det:.6g})", field="matrix"
                )
            root = math.sqrt(det)
            a, b, c, d = a / root, b / root, c / root, d / root

        tr = a + d
        if tr < 0 or (tr == 0 and (c < 0 or (c == 0 and b < 0))):
            a, b, c, d = -a, -b, -c, -d

        for name, value in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, value + 0.0)

    # Construction

    @classmethod
    def from_matrix(cls, matrix: Union[Sequence[Sequence[float]], np.ndarray]) -> 'MoebiusMap':
        try:
            m = np.asarray(matrix, dtype=float)
        except (TypeError, ValueError):
            raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field="matrix")
        if m.shape != (2, 2):
            raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field="matrix")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def identity(cls) -> 'MoebiusMap':
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def translation(cls, b: float) -> 'MoebiusMap':
        """z ↦ z + b."""
        return cls(1.0, b, 0.0, 1.0)

    @classmethod
    def scaling(cls, k: float) -> 'MoebiusMap':
        """z ↦ k z for k > 0."""
        if k <= 0:
            raise ValidationError(f"scaling factor must be positive, got {k}", field="k")
        root = math.sqrt(k)
        return cls(root, 0.0, 0.0, 1.0 / root)

    # Accessors

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def norm_squared(self) -> float:
        """Squared Frobenius norm; at least 2 for any unimodular matrix."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def is_identity(self) -> bool:
        return self.a == 1.0 and self.b == 0.0 and self.c == 0.0 and self.d == 1.0

    def to_list(self) -> List[List[float]]:
        return [[self.a, self.b], [self.c, self.d]]

    # Algebra

    def compose(self, other: 'MoebiusMap') -> 'MoebiusMap':
        """self ∘ other."""
        return MoebiusMap.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> 'MoebiusMap':
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def conjugate_by(self, h: 'MoebiusMap') -> 'MoebiusMap':
        """h⁻¹ ∘ self ∘ h."""
        return MoebiusMap.from_matrix(h.inverse().matrix @ self.matrix @ h.matrix)

    def power(self, n: int) -> 'MoebiusMap':
        base = self.matrix if n >= 0 else self.inverse().matrix
        return MoebiusMap.from_matrix(np.linalg.matrix_power(base, abs(n)))

    def apply(self, z: PointLike) -> ExtendedReal:
        """Projective action on R ∪ {∞}."""
        z = ExtendedReal.of(z)
        if z.is_infinite:
            if self.c == 0.0:
                return INFINITY
            return ExtendedReal(self.a / self.c)
        numerator = self.a * z.value + self.b
        denominator = self.c * z.value + self.d
        if abs(denominator) <= 4 * _EPS * (abs(self.c * z.value) + abs(self.d)):
            return INFINITY
        return ExtendedReal(numerator / denominator)

    def derivative_at(self, z: float) -> float:
        return 1.0 / (self.c * z + self.d) ** 2

    # Classification

    def classification_band(self) -> float:
        """Half-width of the parabolic band around |tr| = 2, scaled with the entries."""
        return settings.tolerances.TOL_CLASS * max(1.0, math.sqrt(self.norm_squared / 2.0))

    def kind(self) -> IsometryKind:
        band = self.classification_band()
        tr = abs(self.trace)
        if abs(tr - 2.0) <= band and max(abs(self.b), abs(self.c), abs(self.a - self.d)) <= band:
            return IsometryKind.IDENTITY
        if tr > 2.0 + band:
            return IsometryKind.HYPERBOLIC
        if tr < 2.0 - band:
            return IsometryKind.ELLIPTIC
        return IsometryKind.PARABOLIC

    def _c_negligible(self) -> bool:
        scale = max(abs(self.a), abs(self.b), abs(self.d), 1.0)
        return abs(self.c) <= settings.tolerances.TOL_PT * scale

    def log_multiplier(self) -> float:
        """log λ = 2 arccosh(|tr|/2); 0 for non-hyperbolic maps."""
        tr = abs(self.trace)
        if tr <= 2.0:
            return 0.0
        return 2.0 * math.acosh(tr / 2.0)

    def multiplier(self) -> float:
        try:
            return math.exp(self.log_multiplier())
        except OverflowError:
            return math.inf

    def classify(self) -> IsometryClass:
        kind = self.kind()
        if kind == IsometryKind.HYPERBOLIC:
            attracting, repelling = self._hyperbolic_fixed_points()
            return IsometryClass(
                kind=kind,
                trace=self.trace,
                log_lambda=self.log_multiplier(),
                attracting=attracting,
                repelling=repelling,
            )
        if kind == IsometryKind.PARABOLIC:
            fixed = self._parabolic_fixed_point()
            return IsometryClass(
                kind=kind,
                trace=self.trace,
                omega=self._omega(fixed),
                fixed=fixed,
            )
        return IsometryClass(kind=kind, trace=self.trace)

    def _hyperbolic_fixed_points(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        tr = abs(a + d)
        if self._c_negligible():
            finite = ExtendedReal(b / (d - a))
            # g'(finite) = 1/d², so the finite point attracts iff |d| > 1
            if abs(d) > 1.0:
                return finite, INFINITY
            return INFINITY, finite

        # Roots of c z² + (d - a) z - b = 0, cancellation-free form
        sqrt_disc = math.sqrt((tr - 2.0) * (tr + 2.0))
        q = -0.5 * ((d - a) + sign(d - a) * sqrt_disc)
        first = q / c
        second = -b / q
        # c * first + d = q + d; |g'| < 1 there iff |q + d| > 1
        if abs(q + d) > 1.0:
            return ExtendedReal(first), ExtendedReal(second)
        return ExtendedReal(second), ExtendedReal(first)

    def _parabolic_fixed_point(self) -> ExtendedReal:
        a, c, d = self.a, self.c, self.d
        band = self.classification_band()
        if self._c_negligible():
            if abs(a - d) > 2.0 * math.sqrt(band) + settings.tolerances.TOL_PT:
                raise ClassifyAmbiguousError(
                    f"Trace {self.trace:.12g} is parabolic but a - d = {a - d:.3g} with c ≈ 0"
                )
            return INFINITY
        fixed = (a - d) / (2.0 * c)
        # Distance between the two candidate fixed points of a near-parabolic map
        spread = math.sqrt(abs(self.trace ** 2 - 4.0)) / abs(c)
        if spread > math.sqrt(band) * max(1.0, abs(fixed)):
            raise ClassifyAmbiguousError(
                f"Trace {self.trace:.12g} is parabolic but the fixed point is spread over {spread:.3g}"
            )
        return ExtendedReal(fixed)

    def _omega(self, fixed: ExtendedReal) -> float:
        if fixed.is_infinite:
            return self.b
        omega = self.c
        image = self.apply(fixed.value + 1.0)
        # 1/(g(z) - P) = 1/(z - P) + ω at z = P + 1
        if image.is_infinite:
            check = -1.0
        else:
            gap = image.value - fixed.value
            check = (1.0 / gap - 1.0) if gap != 0.0 else 0.0
        if check != 0.0 and sign(check) != sign(omega):
            omega = -omega
        return omega

    def translation_vector(self) -> float:
        """Signed ω of a parabolic map."""
        klass = self.classify()
        if not klass.is_parabolic:
            raise NotParabolicError(f"Map with trace {self.trace:.12g} is {klass.kind.value}")
        return klass.omega

    def parabolic_vector(self) -> ParabolicVector:
        """(sigma, x) with self = I + sigma x xᵀ J."""
        if self.kind() != IsometryKind.PARABOLIC:
            raise NotParabolicError(f"Map with trace {self.trace:.12g} is not parabolic")
        return ParabolicVector.from_nilpotent(self.a - 1.0, self.b, self.c)

    def __str__(self) -> str:
        return f"[[{self.a:.6g}, {self.b:.6g}], [{self.c:.6g}, {self.d:.6g}]]"


# Operations on maps

def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """z ↦ f(g(z))."""
    return f.compose(g)


def inverse(g: MoebiusMap) -> MoebiusMap:
    return g.inverse()


def apply(g: MoebiusMap, z: PointLike) -> ExtendedReal:
    return g.apply(z)


def classify(g: MoebiusMap) -> IsometryClass:
    return g.classify()


def translation_vector(g: MoebiusMap) -> float:
    return g.translation_vector()


def conjugate(g: MoebiusMap, h: MoebiusMap) -> MoebiusMap:
    """h⁻¹ ∘ g ∘ h."""
    return g.conjugate_by(h)


def power(g: MoebiusMap, n: int) -> MoebiusMap:
    return g.power(n)


def commutator_trace(first: MoebiusMap, second: MoebiusMap) -> float:
    """
    Trace of A B A⁻¹ B⁻¹ on SL(2, R) lifts.

    The commutator does not depend on the lifts chosen, so its trace keeps its
    sign (-2 for a punctured torus).
    """
    m = first.matrix @ second.matrix @ first.inverse().matrix @ second.inverse().matrix
    return float(np.trace(m))


def cross_ratio(p: PointLike, q: PointLike, r: PointLike, s: PointLike) -> float:
    """
    (p - r)/(p - s) · (q - s)/(q - r).

    A single ∞ argument drops the two factors containing it.
    """
    points = [ExtendedReal.of(v) for v in (p, q, r, s)]
    tol = settings.tolerances.TOL_PT
    for i in range(4):
        for j in range(i + 1, 4):
            if points[i].is_close(points[j], tol):
                raise DegenerateTupleError(
                    f"Cross-ratio points {points[i]} and {points[j]} coincide"
                )

    def factor(u: ExtendedReal, v: ExtendedReal) -> float:
        if u.is_infinite or v.is_infinite:
            return 1.0
        return u.value - v.value

    P, Q, R, S = points
    return (factor(P, R) / factor(P, S)) * (factor(Q, S) / factor(Q, R))


def parabolic_from_fixed_point(omega: float, fixed: PointLike) -> MoebiusMap:
    """The parabolic map with translation vector ω fixing P."""
    if omega == 0:
        raise ValidationError("translation vector must be nonzero", field="omega")
    fixed = ExtendedReal.of(fixed)
    if fixed.is_infinite:
        return MoebiusMap.translation(omega)
    P = fixed.value
    return MoebiusMap(1.0 + omega * P, -omega * P * P, omega, 1.0 - omega * P)


def hyperbolic_from_fixed_points(lam: float, attracting: PointLike, repelling: PointLike) -> MoebiusMap:
    """Conjugate of z ↦ λz sending ∞ to the attracting and 0 to the repelling point."""
    if not lam > 1:
        raise ValidationError(f"multiplier must exceed 1, got {lam}", field="lambda")
    P = ExtendedReal.of(attracting)
    N = ExtendedReal.of(repelling)
    if P.is_close(N, settings.tolerances.TOL_PT):
        raise ValidationError("attracting and repelling points coincide", field="fixed_points")

    if P.is_infinite:
        frame = np.array([[1.0, N.value], [0.0, 1.0]])
    elif N.is_infinite:
        frame = np.array([[P.value, -1.0], [1.0, 0.0]])
    elif P.value > N.value:
        frame = np.array([[P.value, N.value], [1.0, 1.0]])
    else:
        frame = np.array([[P.value, -N.value], [1.0, -1.0]])

    root = math.sqrt(lam)
    diagonal = np.diag([root, 1.0 / root])
    return MoebiusMap.from_matrix(frame @ diagonal @ np.linalg.inv(frame))
