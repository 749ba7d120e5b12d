# src/application/services/word_enumerator.py

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from src.core.entities.marked_group import MarkedGroup
from src.core.entities.word import Word, is_cyclic_representative
from src.shared.constants import EnumerationMode
from src.shared.utils.exceptions import BudgetExceededError, ValidationError
from src.shared.utils.math_utils import count_reduced_words

logger = logging.getLogger(__name__)

WordImages = Tuple[Word, Tuple[np.ndarray, ...]]


class WordEnumerator:
    """
    Depth-first enumeration of freely reduced words in a free group.

    Words come out in lexicographic order for the letter order
    1 < -1 < 2 < -2 < ...; prefix products are carried along so each word
    costs one matrix product per group. Shards keyed by the first letter are
    disjoint, and the empty word belongs to the shard of letter 1.
    """

    def __init__(self, rank: int, budget: Optional[int] = None):
        if rank < 1:
            raise ValidationError("rank must be positive", field="rank")
        self.rank = rank
        self.budget = budget if budget is not None else settings.WORD_BUDGET

    def letters(self) -> List[int]:
        ordered = []
        for index in range(1, self.rank + 1):
            ordered.extend([index, -index])
        return ordered

    def count(self, max_len: int) -> int:
        return count_reduced_words(self.rank, max_len)

    def check_budget(self, max_len: int) -> int:
        total = self.count(max_len)
        if total > self.budget:
            raise BudgetExceededError(total, self.budget)
        return total

    def enumerate(self,
                  max_len: int,
                  mode: EnumerationMode = EnumerationMode.ALL,
                  first_letter: Optional[int] = None) -> Iterator[Word]:
        for word, _ in self.enumerate_with_images((), max_len, mode, first_letter):
            yield word

    def enumerate_with_images(self,
                              groups: Sequence[MarkedGroup],
                              max_len: int,
                              mode: EnumerationMode = EnumerationMode.ALL,
                              first_letter: Optional[int] = None) -> Iterator[WordImages]:
        """Yield (word, lifts of the word in each group)."""
        if max_len < 0:
            raise ValidationError("max_len cannot be negative", field="max_len")
        if first_letter is not None and (first_letter == 0 or abs(first_letter) > self.rank):
            raise ValidationError(f"first letter {first_letter} outside the alphabet", field="first_letter")
        self.check_budget(max_len)

        cyclic_only = mode == EnumerationMode.CYCLIC_REPS
        identity = tuple(np.eye(2) for _ in groups)

        if first_letter is None or first_letter == 1:
            yield Word(()), identity
        roots = self.letters() if first_letter is None else [first_letter]
        if max_len == 0:
            return

        for letter in roots:
            images = tuple(group.letter_matrix(letter) for group in groups)
            yield from self._walk((letter,), images, groups, max_len, cyclic_only)

    def _walk(self,
              prefix: Tuple[int, ...],
              images: Tuple[np.ndarray, ...],
              groups: Sequence[MarkedGroup],
              max_len: int,
              cyclic_only: bool) -> Iterator[WordImages]:
        if not cyclic_only or is_cyclic_representative(prefix):
            yield Word(prefix), images
        if len(prefix) == max_len:
            return
        last = prefix[-1]
        for letter in self.letters():
            if letter == -last:
                continue
            extended = tuple(
                image @ group.letter_matrix(letter) for image, group in zip(images, groups)
            )
            yield from self._walk(prefix + (letter,), extended, groups, max_len, cyclic_only)


def enumerate_words(rank: int,
                    max_len: int,
                    mode: EnumerationMode = EnumerationMode.ALL,
                    first_letter: Optional[int] = None) -> Iterator[Word]:
    """All freely reduced words up to ``max_len``, or one per conjugacy-and-inversion class."""
    if max_len < 1:
        raise ValidationError("max_len must be >= 1", field="max_len")
    return WordEnumerator(rank).enumerate(max_len, mode, first_letter)
