"""A recursive class-preserving bijection on words with nonnegative letters
that carries the major index to the zero-shifted statistic ``mafz`` while
fixing the rightmost letter, plus its inverse.

The recursion peels the last letter b off w = w' a 0^r b (a the last
positive letter before b) and patches the image of the shorter word with one
of two letter moves before appending b again.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FixmahonError
from .words import Word


def gamma(w: Word) -> Word:
    """Rotate a trailing zero to the front."""
    if not w or w[-1] != 0:
        raise FixmahonError("gamma requires a word ending in 0")
    return (0,) + w[:-1]


def gamma_inv(w: Word) -> Word:
    """Rotate a leading zero to the back."""
    if not w or w[0] != 0:
        raise FixmahonError("gamma_inv requires a word starting with 0")
    return w[1:] + (0,)


def delta(w: Word) -> Word:
    """Move the positive letter that follows each zero run to the front of
    that run.  Defined for words ending in a positive letter; all-zero words
    pass through unchanged."""
    if all(x == 0 for x in w):
        return w
    if w[-1] == 0:
        raise FixmahonError("delta requires a word ending in a positive letter")
    out: list[int] = []
    i, n = 0, len(w)
    while i < n:
        m = 0
        while w[i + m] == 0:
            m += 1
        out.append(w[i + m])
        out.extend([0] * m)
        j = i + m + 1
        while j < n and w[j] > 0:
            out.append(w[j])
            j += 1
        i = j
    return tuple(out)


def delta_inv(w: Word) -> Word:
    """Move the positive letter that precedes each zero run to the end of
    that run.  Defined for words starting with a positive letter; all-zero
    words pass through unchanged."""
    if all(x == 0 for x in w):
        return w
    if w[0] == 0:
        raise FixmahonError("delta_inv requires a word starting with a positive letter")
    out: list[int] = []
    i, n = 0, len(w)
    while i < n:
        if w[i] > 0 and i + 1 < n and w[i + 1] == 0:
            j = i + 1
            while j < n and w[j] == 0:
                j += 1
            out.extend([0] * (j - i - 1))
            out.append(w[i])
            i = j
        else:
            out.append(w[i])
            i += 1
    return tuple(out)


@dataclass(frozen=True)
class TailDecomposition:
    """Split w = prefix . a . 0^r . b where a is the last positive letter
    among the first n-1 letters (absent for 0...0b) and b the last letter."""

    prefix: Word
    a: int | None
    r: int
    b: int
    c: int

    def reassemble(self) -> Word:
        head = self.prefix if self.a is None else self.prefix + (self.a,)
        return head + (0,) * self.r + (self.b,)


def tail_decomposition(w: Word) -> TailDecomposition:
    if not w:
        raise FixmahonError("cannot decompose the empty word")
    head = w[:-1]
    a_idx = None
    for i in range(len(head) - 1, -1, -1):
        if head[i] > 0:
            a_idx = i
            break
    if a_idx is None:
        return TailDecomposition((), None, len(head), w[-1], w[0])
    return TailDecomposition(
        head[:a_idx], head[a_idx], len(head) - 1 - a_idx, w[-1], w[0]
    )


def f3(w: Word) -> Word:
    """Image of ``w``; computed left to right, maintaining the image of the
    processed prefix.

    Appending a letter b that is >= the last positive letter a of the prefix
    extends the image as is.  A smaller b triggers a zero rotation when the
    prefix ends in zeros, and the zero-run letter move otherwise.  Prefixes
    without positive letters extend as is.
    """
    image: list[int] = []
    last_pos = 0  # last positive letter of the processed prefix, 0 if none
    zeros_after = 0
    for b in w:
        if last_pos == 0 or last_pos <= b:
            image.append(b)
        elif zeros_after >= 1:
            image = [*gamma(tuple(image)), b]
        else:
            image = [*delta(tuple(image)), b]
        if b > 0:
            last_pos = b
            zeros_after = 0
        else:
            zeros_after += 1
    return tuple(image)


def f3_inv(w: Word) -> Word:
    """Inverse of ``f3``.

    The case split is read off the image: the first letter tells which
    letter move to undo, and the last positive letter among the first n-1
    letters (an invariant of the map) plays the role of a.  The inverse
    letter move is applied to the image prefix before recursing.
    """
    suffix: list[int] = []
    cur = tuple(w)
    while len(cur) >= 2:
        head = cur[:-1]
        a = next((x for x in reversed(head) if x > 0), 0)
        if a == 0:
            break  # 0...0b is its own preimage
        b = cur[-1]
        suffix.append(b)
        if a <= b:
            cur = head
        elif cur[0] == 0:
            cur = gamma_inv(head)
        else:
            cur = delta_inv(head)
    suffix.reverse()
    return cur + tuple(suffix)
