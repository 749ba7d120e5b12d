# src/core/entities/word.py

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.shared.constants import ERROR_MESSAGES
from src.shared.utils.exceptions import ValidationError


def letter_key(letter: int) -> Tuple[int, bool]:
    """Letter order 1 < -1 < 2 < -2 < ..."""
    return (abs(letter), letter < 0)


def free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    """Cancel adjacent letter/inverse pairs."""
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """
    Element of a free group as a freely reduced sequence of signed,
    1-based generator indices. The empty word is the identity.
    """

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0:
                raise ValidationError(f"{ERROR_MESSAGES['BAD_WORD']}: {list(letters)}", field="word")
        object.__setattr__(self, 'letters', free_reduce(letters))

    @classmethod
    def of(cls, *letters: int) -> 'Word':
        return cls(tuple(letters))

    @classmethod
    def identity(cls) -> 'Word':
        return cls(())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: 'Word') -> 'Word':
        return Word(self.letters + other.letters)

    def inverse(self) -> 'Word':
        return Word(tuple(-letter for letter in reversed(self.letters)))

    def power(self, n: int) -> 'Word':
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def conjugated_by(self, other: 'Word') -> 'Word':
        """other · self · other⁻¹."""
        return other * self * other.inverse()

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def max_index(self) -> int:
        return max((abs(letter) for letter in self.letters), default=0)

    @property
    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def cyclic_reduction(self) -> 'Word':
        letters = self.letters
        start, end = 0, len(letters)
        while end - start >= 2 and letters[start] == -letters[end - 1]:
            start += 1
            end -= 1
        return Word(letters[start:end])

    def cyclic_representative(self) -> 'Word':
        """Least rotation of the cyclic reduction of this word or of its inverse."""
        core = self.cyclic_reduction()
        return Word(canonical_cyclic_letters(core.letters))

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, bool], ...]]:
        """Shortlex order."""
        return (len(self.letters), tuple(letter_key(letter) for letter in self.letters))

    def to_list(self) -> List[int]:
        return list(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(str(letter) for letter in self.letters)


def canonical_cyclic_letters(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    """Least rotation (by letter order) of a cyclically reduced word or its inverse."""
    if not letters:
        return letters
    inverse = tuple(-letter for letter in reversed(letters))
    candidates = []
    for source in (letters, inverse):
        for shift in range(len(source)):
            candidates.append(source[shift:] + source[:shift])
    return min(candidates, key=lambda word: tuple(letter_key(letter) for letter in word))


def is_cyclic_representative(letters: Tuple[int, ...]) -> bool:
    if len(letters) >= 2 and letters[0] == -letters[-1]:
        return False
    return canonical_cyclic_letters(letters) == letters
