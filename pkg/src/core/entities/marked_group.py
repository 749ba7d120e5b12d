# src/core/entities/marked_group.py

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, List, Tuple

import numpy as np

from config.settings import settings
from src.core.entities.word import Word
from src.core.value_objects.moebius_map import MoebiusMap, commutator_trace
from src.core.value_objects.parabolic_vector import ParabolicVector
from src.shared.constants import ERROR_MESSAGES, IsometryKind
from src.shared.utils.exceptions import (
    IndiscreteSuspectedError,
    NotParabolicError,
    TypeMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarkedGroup:
    """
    A marked Fuchsian representation of a free group.

    ``generators[i - 1]`` is the image of letter ``i``; ``peripherals`` lists
    one word per puncture, the first being the distinguished cusp.
    """

    rank: int
    generators: Tuple[MoebiusMap, ...]
    peripherals: Tuple[Word, ...]
    label: str = ""
    _inverses: Tuple[np.ndarray, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 2:
            raise ValidationError(ERROR_MESSAGES['BAD_RANK'], field="rank")
        generators = tuple(self.generators)
        if len(generators) != self.rank:
            raise ValidationError(
                f"expected {self.rank} generators, got {len(generators)}", field="generators"
            )
        peripherals = tuple(p if isinstance(p, Word) else Word(tuple(p)) for p in self.peripherals)
        if not peripherals:
            raise ValidationError(ERROR_MESSAGES['NO_PERIPHERALS'], field="peripherals")
        for index, word in enumerate(peripherals):
            if word.max_index > self.rank:
                raise ValidationError(
                    f"{ERROR_MESSAGES['LETTER_OUT_OF_RANGE']}: {word.to_list()}",
                    field=f"peripherals[{index}]",
                )

        object.__setattr__(self, 'generators', generators)
        object.__setattr__(self, 'peripherals', peripherals)
        object.__setattr__(self, '_inverses', tuple(g.inverse().matrix for g in generators))

        for index, word in enumerate(peripherals):
            kind = self.evaluate(word).kind()
            if kind != IsometryKind.PARABOLIC:
                raise NotParabolicError(
                    f"Peripheral {index} ({word}) of '{self.label}' evaluates to a {kind.value} map"
                )

    # Representation

    def letter_matrix(self, letter: int) -> np.ndarray:
        if letter > 0:
            return self.generators[letter - 1].matrix
        return self._inverses[-letter - 1]

    def evaluate_matrix(self, word: Word) -> np.ndarray:
        """SL(2, R) lift of the word, multiplied left to right."""
        result = np.eye(2)
        for letter in word:
            if abs(letter) > self.rank:
                raise ValidationError(
                    f"{ERROR_MESSAGES['LETTER_OUT_OF_RANGE']}: {word.to_list()}", field="word"
                )
            result = result @ self.letter_matrix(letter)
        return result

    def evaluate(self, word: Word) -> MoebiusMap:
        if word.is_identity:
            return MoebiusMap.identity()
        return MoebiusMap.from_matrix(self.evaluate_matrix(word))

    def peripheral_map(self, index: int = 0) -> MoebiusMap:
        return self.evaluate(self.peripherals[index])

    def peripheral_vector(self, index: int = 0) -> ParabolicVector:
        return self.peripheral_map(index).parabolic_vector()

    # Normalization

    def conjugated(self, matrix: np.ndarray, reflect: bool = False) -> 'MarkedGroup':
        """Group with every generator replaced by M⁻¹ g M (then mirrored by z ↦ -z if asked)."""
        inverse = np.linalg.inv(matrix)
        generators = []
        for g in self.generators:
            m = inverse @ g.matrix @ matrix
            if reflect:
                m = np.array([[m[0, 0], -m[0, 1]], [-m[1, 0], m[1, 1]]])
            generators.append(MoebiusMap.from_matrix(m))
        return MarkedGroup(self.rank, tuple(generators), self.peripherals, self.label)

    def normalize(self) -> 'MarkedGroup':
        """
        Conjugate so the first peripheral becomes z ↦ z + 1.

        The first peripheral is I + sigma x xᵀ J; conjugating by the matrix
        with first column x sends it to z ↦ z + sigma. A negative sigma is
        fixed with the reflection z ↦ -z, which preserves every multiplier
        and every |ω|.
        """
        p = self.peripheral_map(0)
        if p.kind() != IsometryKind.PARABOLIC:
            raise NotParabolicError(f"First peripheral of '{self.label}' is not parabolic")
        vector = p.parabolic_vector()
        x1, x2 = vector.x1, vector.x2
        n2 = x1 * x1 + x2 * x2
        frame = np.array([[x1, -x2 / n2], [x2, x1 / n2]])
        normalized = self.conjugated(frame, reflect=vector.sigma < 0)
        logger.debug(
            f"Normalized '{self.label}': first peripheral now {normalized.peripheral_map(0)}"
        )
        return normalized

    def is_normalized(self, tol: float = 1e-9) -> bool:
        p = self.peripheral_map(0)
        return (abs(p.a - 1.0) <= tol and abs(p.b - 1.0) <= tol
                and abs(p.c) <= tol and abs(p.d - 1.0) <= tol)

    # Sanity checks

    def jorgensen_values(self) -> List[Tuple[Tuple[int, int], float]]:
        """|tr²A - 4| + |tr[A, B] - 2| for every ordered pair of distinct generators."""
        values = []
        for i, j in permutations(range(self.rank), 2):
            first, second = self.generators[i], self.generators[j]
            value = abs(first.trace ** 2 - 4.0) + abs(commutator_trace(first, second) - 2.0)
            values.append(((i + 1, j + 1), value))
        return values

    def check_jorgensen(self) -> None:
        threshold = 1.0 - settings.tolerances.TOL_JORG
        for pair, value in self.jorgensen_values():
            if value < threshold:
                raise IndiscreteSuspectedError(pair, value)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rank': self.rank,
            'label': self.label,
            'generators': [g.to_list() for g in self.generators],
            'peripherals': [p.to_list() for p in self.peripherals],
        }


@dataclass(frozen=True)
class MarkedIsomorphism:
    """
    Identity correspondence on words between two marked groups, j: source → target.
    """

    source: MarkedGroup
    target: MarkedGroup

    def __post_init__(self):
        if self.source.rank != self.target.rank:
            raise ValidationError(
                f"ranks differ: {self.source.rank} vs {self.target.rank}", field="target"
            )
        if self.source.peripherals != self.target.peripherals:
            raise ValidationError("peripheral word lists differ", field="target")

    @property
    def rank(self) -> int:
        return self.source.rank

    def inverse(self) -> 'MarkedIsomorphism':
        return MarkedIsomorphism(self.target, self.source)

    def images(self, word: Word) -> Tuple[MoebiusMap, MoebiusMap]:
        return self.source.evaluate(word), self.target.evaluate(word)

    def check_type(self, word: Word, source_kind: IsometryKind, target_kind: IsometryKind) -> None:
        """Raise if the marking sends a hyperbolic element to a non-hyperbolic one or back."""
        if source_kind != target_kind and IsometryKind.HYPERBOLIC in (source_kind, target_kind):
            raise TypeMismatchError(word, source_kind.value, target_kind.value)

    def check_normalized(self, tol: float = 1e-9) -> bool:
        return self.source.is_normalized(tol) and self.target.is_normalized(tol)
