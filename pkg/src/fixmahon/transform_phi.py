"""Zero-moving bijections on shuffle classes with a deranged positive
subword, together with their inverses and a factored recomputation.

Every map here moves zeros only; the positive subword and the number of
zeros are invariants.  The headline property: the plain rise set of the
input equals the modified rise set of the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FixmahonError, NoZeroError, NotADerangementError
from .words import (
    LetterClass,
    Word,
    is_derangement_word,
    letter_classes,
    pos_subword,
    red_map,
    zero_count,
)

_SUB = LetterClass.SUBEXCEDENT


def _require_derangement_pos(w: Word) -> None:
    v = pos_subword(w)
    if not is_derangement_word(v):
        raise NotADerangementError(f"positive subword {v} is not a derangement")


def _nth_zero_position(w: Word, l: int) -> int:
    seen = 0
    for i, x in enumerate(w, 1):
        if x == 0:
            seen += 1
            if seen == l:
                return i
    raise FixmahonError(f"word has fewer than {l} zeros")


def _class_at(classes: tuple[LetterClass, ...], k: int) -> LetterClass:
    # boundary positions 0 and n+1 hold +infinity: non-subexcedent
    if k == 0 or k == len(classes) + 1:
        return LetterClass.EXCEDENT
    return classes[k - 1]


def _ascend_right(w: Word, red: dict[int, int], k: int) -> int:
    """Greatest end of the increasing run of positive letters starting at
    position k in which every extension letter stays below its rank."""
    n = len(w)
    while k + 1 <= n and w[k] > 0 and w[k - 1] < w[k] < red[k + 1]:
        k += 1
    return k


def _descend_left(w: Word, red: dict[int, int], i: int) -> int:
    """Smallest start of the decreasing run of positive letters ending at
    position i in which every extension letter stays below its rank."""
    while i - 1 >= 1 and w[i - 2] > 0 and w[i - 2] > w[i - 1] and w[i - 2] < red[i - 1]:
        i -= 1
    return i


def phi_l(w: Word, l: int) -> Word:
    """Move the l-th zero (counted left to right) according to the classes
    of its neighbours.

    A zero flanked by non-subexcedent letters stays put.  With a subexcedent
    right neighbour (or two subexcedent neighbours in decreasing order) the
    zero slides right past the maximal increasing run of letters below their
    ranks; in the mirror situation it slides left past the maximal decreasing
    run.  Indices l past the number of zeros act as the identity.
    """
    n = len(w)
    if not 1 <= l <= n:
        raise FixmahonError(f"zero index {l} out of range for length {n}")
    _require_derangement_pos(w)
    if l > zero_count(w):
        return w
    j = _nth_zero_position(w, l)
    classes = letter_classes(w)
    left = _class_at(classes, j - 1)
    right = _class_at(classes, j + 1)
    if left is not _SUB and right is not _SUB:
        return w
    red = red_map(w)
    if right is _SUB and (left is not _SUB or w[j - 2] > w[j]):
        k = _ascend_right(w, red, j + 1)
        return w[: j - 1] + w[j:k] + (0,) + w[k:]
    i = _descend_left(w, red, j - 1)
    return w[: i - 1] + (0,) + w[i - 1 : j - 1] + w[j:]


def psi_l(w: Word, l: int) -> Word:
    """Inverse of ``phi_l``: the case analysis is mirrored, and the runs the
    zero crosses are read in the opposite monotonicity."""
    n = len(w)
    if not 1 <= l <= n:
        raise FixmahonError(f"zero index {l} out of range for length {n}")
    _require_derangement_pos(w)
    if l > zero_count(w):
        return w
    j = _nth_zero_position(w, l)
    classes = letter_classes(w)
    left = _class_at(classes, j - 1)
    right = _class_at(classes, j + 1)
    if left is not _SUB and right is not _SUB:
        return w
    if left is _SUB and (right is not _SUB or w[j - 2] > w[j]):
        # slide left before the maximal increasing run ending at j-1
        i = j - 1
        while i - 1 >= 1 and w[i - 2] > 0 and w[i - 2] < w[i - 1]:
            i -= 1
        return w[: i - 1] + (0,) + w[i - 1 : j - 1] + w[j:]
    # slide right past the maximal decreasing run starting at j+1
    k = j + 1
    while k + 1 <= n and w[k] > 0 and w[k - 1] > w[k]:
        k += 1
    return w[: j - 1] + w[j:k] + (0,) + w[k:]


def phi(w: Word) -> Word:
    """Composition of the single-zero moves, highest zero index first."""
    _require_derangement_pos(w)
    for l in range(len(w), 0, -1):
        w = phi_l(w, l)
    return w


def psi(w: Word) -> Word:
    """Inverse of ``phi``: single-zero inverse moves, lowest index first."""
    _require_derangement_pos(w)
    for l in range(1, len(w) + 1):
        w = psi_l(w, l)
    return w


@dataclass(frozen=True)
class CanonicalFactorization:
    """Split w' = u u' at the last zero run, with the rearrangement of u'
    that realizes the zero moves for that run in one step."""

    u: Word
    u_prime: Word
    theta_u_prime: Word
    case: int

    def __post_init__(self) -> None:
        if self.case not in (1, 2, 3, 4):
            raise FixmahonError(f"invalid factorization case {self.case}")


def canonical_factorize(w_prime: Word, context: Word | None = None) -> CanonicalFactorization:
    """Factor a left factor ``w_prime`` of ``context`` around its last run
    of zeros.

    The split point and the zero rearrangement depend on the classes of the
    letters flanking the run (classes agree whether computed on the prefix
    or on the full word).  A run ending the prefix sees +infinity on its
    right.
    """
    if context is None:
        context = w_prime
    n1 = len(w_prime)
    if n1 == 0 or w_prime != context[: n1]:
        raise FixmahonError("expected a nonempty left factor of the context word")
    _require_derangement_pos(context)
    if all(x > 0 for x in w_prime):
        raise NoZeroError("word has no zero letter")

    end = max(p for p in range(1, n1 + 1) if w_prime[p - 1] == 0)
    j = end
    while j - 1 >= 1 and w_prime[j - 2] == 0:
        j -= 1
    h = end - j + 1

    classes = letter_classes(w_prime)
    left = _class_at(classes, j - 1)
    right = _class_at(classes, j + h)  # j + h == n1 + 1 means the boundary
    red = red_map(w_prime)

    if left is not _SUB and right is not _SUB:
        u = w_prime[: j - 1]
        u_prime = w_prime[j - 1 :]
        return CanonicalFactorization(u, u_prime, u_prime, 1)

    if right is _SUB and (left is not _SUB or w_prime[j - 2] > w_prime[j + h - 1]):
        k = _ascend_right(w_prime, red, j + h)
        u = w_prime[: j - 1]
        u_prime = w_prime[j - 1 :]
        theta = w_prime[j + h - 1 : k] + (0,) * h + w_prime[k:]
        return CanonicalFactorization(u, u_prime, theta, 2)

    i = _descend_left(w_prime, red, j - 1)
    u = w_prime[: i - 1]
    u_prime = w_prime[i - 1 :]
    if right is _SUB:
        k = _ascend_right(w_prime, red, j + h)
        theta = (
            (0,)
            + w_prime[i - 1 : j - 1]
            + w_prime[j + h - 1 : k]
            + (0,) * (h - 1)
            + w_prime[k:]
        )
        return CanonicalFactorization(u, u_prime, theta, 3)
    theta = (0,) + w_prime[i - 1 : j - 1] + (0,) * (h - 1) + w_prime[j + h - 1 :]
    return CanonicalFactorization(u, u_prime, theta, 4)


def phi_via_theta(w: Word) -> Word:
    """Recompute ``phi`` by factoring off one zero run at a time and
    concatenating the rearranged pieces."""
    _require_derangement_pos(w)
    current = w
    pieces: list[Word] = []
    while any(x == 0 for x in current):
        fact = canonical_factorize(current, w)
        pieces.append(fact.theta_u_prime)
        current = fact.u
    out = current
    for piece in reversed(pieces):
        out += piece
    return out
