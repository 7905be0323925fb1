"""Words over the nonnegative integers: zero/positive decomposition, letter
classes, and the descent / rise / major-index family of statistics.

Positions are 1-based in the whole public interface.  The virtual letters at
positions 0 and n+1 are treated as +infinity, hence as non-subexcedent,
wherever a boundary neighbour is consulted; position n therefore always
counts as a rise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import FixmahonError, NeutralLetterError, WordFormatError

Word = tuple[int, ...]
IndexSet = frozenset[int]


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated word of nonnegative decimal letters."""
    letters = []
    for token in text.split():
        try:
            value = int(token)
        except ValueError:
            raise WordFormatError(f"invalid letter {token!r}") from None
        if value < 0:
            raise WordFormatError(f"negative letter {token!r}")
        letters.append(value)
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


def format_index_set(positions: Iterable[int]) -> str:
    return "{" + ",".join(str(p) for p in sorted(positions)) + "}"


def zero_set(w: Word) -> IndexSet:
    """Positions of the zero letters."""
    return frozenset(i for i, x in enumerate(w, 1) if x == 0)


def zero_count(w: Word) -> int:
    return sum(1 for x in w if x == 0)


def positive_count(w: Word) -> int:
    return sum(1 for x in w if x > 0)


def pos_subword(w: Word) -> Word:
    """The subword of positive letters, in order."""
    return tuple(x for x in w if x > 0)


def des_set(w: Word) -> IndexSet:
    """Positions i < n with a strict drop from letter i to letter i+1."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def rise_set(w: Word) -> IndexSet:
    """Positions i with letter i <= letter i+1; position n is always a rise."""
    n = len(w)
    out = {i for i in range(1, n) if w[i - 1] <= w[i]}
    if n:
        out.add(n)
    return frozenset(out)


def maj(w: Word) -> int:
    """Major index: the sum of the descent positions."""
    return sum(des_set(w))


def mafz(w: Word) -> int:
    """Zero-shifted Mahonian statistic: the amount by which the zeros sit to
    the right of the initial positions, plus the major index of the positive
    subword."""
    z = zero_count(w)
    return sum(zero_set(w)) - z * (z + 1) // 2 + maj(pos_subword(w))


def red_map(w: Word) -> dict[int, int]:
    """Order-preserving bijection from the positions of positive letters
    onto 1..m."""
    out: dict[int, int] = {}
    for i, x in enumerate(w, 1):
        if x > 0:
            out[i] = len(out) + 1
    return out


class LetterClass(Enum):
    ZERO = "zero"
    EXCEDENT = "excedent"
    SUBEXCEDENT = "subexcedent"
    NEUTRAL = "neutral"


def letter_classes(w: Word) -> tuple[LetterClass, ...]:
    """Class of every letter: positive letters compare against their reduced
    rank, zeros are their own class."""
    out = []
    rank = 0
    for x in w:
        if x == 0:
            out.append(LetterClass.ZERO)
        else:
            rank += 1
            if x > rank:
                out.append(LetterClass.EXCEDENT)
            elif x < rank:
                out.append(LetterClass.SUBEXCEDENT)
            else:
                out.append(LetterClass.NEUTRAL)
    return tuple(out)


def classify(w: Word, k: int) -> LetterClass:
    """Class of the letter at position k.  The virtual boundary positions 0
    and n+1 carry +infinity and classify as excedent."""
    n = len(w)
    if k == 0 or k == n + 1:
        return LetterClass.EXCEDENT
    if not 1 <= k <= n:
        raise FixmahonError(f"position {k} out of range for a word of length {n}")
    return letter_classes(w)[k - 1]


def rise_bullet_from_classes(
    letters: Sequence[int], classes: Sequence[LetterClass]
) -> IndexSet:
    """Modified rise set of a letter sequence whose classes are supplied by
    the caller (useful for fragments classified inside a longer word).

    Position i is in iff one of: both letters positive and increasing; both
    zero; a zero followed by an excedent letter; a subexcedent letter
    followed by a zero.  The last position always qualifies.
    """
    if len(letters) != len(classes):
        raise FixmahonError("letters and classes must have equal length")
    n = len(letters)
    out = set()
    for i in range(1, n):
        a, b = letters[i - 1], letters[i]
        if a > 0 and b > 0:
            ok = a < b
        elif a == 0 and b == 0:
            ok = True
        elif a == 0:
            ok = classes[i] is LetterClass.EXCEDENT
        else:
            ok = classes[i - 1] is LetterClass.SUBEXCEDENT
        if ok:
            out.add(i)
    if n:
        out.add(n)
    return frozenset(out)


def rise_bullet_set(w: Word) -> IndexSet:
    """Modified rise set of a word; requires every positive letter to be
    excedent or subexcedent (no letter equal to its reduced rank)."""
    classes = letter_classes(w)
    for i, c in enumerate(classes, 1):
        if c is LetterClass.NEUTRAL:
            raise NeutralLetterError(
                f"letter {w[i - 1]} at position {i} equals its reduced rank"
            )
    return rise_bullet_from_classes(w, classes)


def is_derangement_word(v: Sequence[int]) -> bool:
    """True when v is a permutation of 1..m with no letter at its own rank."""
    m = len(v)
    return sorted(v) == list(range(1, m + 1)) and all(
        x != i for i, x in enumerate(v, 1)
    )


@dataclass(frozen=True)
class ShuffleClassId:
    """Identifier (n, v) of the set of words of length n whose positive
    subword is v."""

    n: int
    v: Word

    def __post_init__(self) -> None:
        if self.n < 0:
            raise FixmahonError(f"negative word length {self.n}")
        if any(x <= 0 for x in self.v):
            raise FixmahonError("class subword must have positive letters")
        if len(self.v) > self.n:
            raise FixmahonError(
                f"subword of length {len(self.v)} cannot fit in length {self.n}"
            )

    @classmethod
    def of_word(cls, w: Word) -> "ShuffleClassId":
        return cls(len(w), pos_subword(w))

    def contains(self, w: Word) -> bool:
        return len(w) == self.n and pos_subword(w) == self.v

    def size(self) -> int:
        return math.comb(self.n, self.n - len(self.v))
