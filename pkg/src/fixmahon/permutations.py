"""Permutations in one-line notation: the encoding that replaces fixed
points by zeros and reduces the rest, the statistics read through that
encoding, and the bijections on the symmetric group induced by the word
transformations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import transform_f3, transform_phi, words
from .errors import NotADerangementError, WordFormatError
from .words import IndexSet, Word, is_derangement_word, pos_subword

Permutation = tuple[int, ...]


def parse_permutation(text: str) -> Permutation:
    """Parse a space-separated permutation of 1..n in one-line notation."""
    values = []
    for token in text.split():
        try:
            values.append(int(token))
        except ValueError:
            raise WordFormatError(f"invalid value {token!r}") from None
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        raise WordFormatError(
            f"values {format_permutation(values)!r} are not a permutation of 1..{n}"
        )
    return tuple(values)


def format_permutation(sigma) -> str:
    return " ".join(str(x) for x in sigma)


def zder(sigma: Permutation) -> Word:
    """Encode a permutation as a word: zeros at fixed points, the reduced
    derangement letters elsewhere."""
    moving = [i for i, s in enumerate(sigma, 1) if s != i]
    rank = {p: t for t, p in enumerate(moving, 1)}
    return tuple(0 if s == i else rank[s] for i, s in enumerate(sigma, 1))


def zder_inv(w: Word) -> Permutation:
    """Decode a word back to a permutation.  Zeros become fixed points; the
    positive subword must be a derangement."""
    if not is_derangement_word(pos_subword(w)):
        raise NotADerangementError(
            f"positive subword {pos_subword(w)} is not a derangement"
        )
    moving = [i for i, x in enumerate(w, 1) if x > 0]
    sigma = list(range(1, len(w) + 1))
    for i, x in zip(moving, (w[p - 1] for p in moving)):
        sigma[i - 1] = moving[x - 1]
    return tuple(sigma)


def der(sigma: Permutation) -> Word:
    """Reduced word of the non-fixed values, always a derangement word."""
    return pos_subword(zder(sigma))


def fix_set(sigma: Permutation) -> IndexSet:
    return frozenset(i for i, s in enumerate(sigma, 1) if s == i)


def fix_count(sigma: Permutation) -> int:
    return sum(1 for i, s in enumerate(sigma, 1) if s == i)


def exc_count(sigma: Permutation) -> int:
    # i ranges over 1..n-1; position n can never exceed
    return sum(1 for i in range(1, len(sigma)) if sigma[i - 1] > i)


@dataclass(frozen=True)
class StatVector:
    """Bundle of the classical statistics of a permutation together with
    their analogues read through the zero/derangement encoding."""

    n: int
    fix: int
    des: int
    exc: int
    maj: int
    dez: int
    maz: int
    maf: int
    fix_set: IndexSet
    des_set: IndexSet
    dez_set: IndexSet
    rise_set: IndexSet
    rize_set: IndexSet


def perm_stats(sigma: Permutation) -> StatVector:
    w = zder(sigma)
    fixed = fix_set(sigma)
    des_s = words.des_set(sigma)
    dez_s = words.des_set(w)
    maf = words.mafz(w)
    # the fixed-point form of maf must agree with the word-level statistic
    f = len(fixed)
    assert maf == sum(fixed) - f * (f + 1) // 2 + words.maj(pos_subword(w))
    return StatVector(
        n=len(sigma),
        fix=f,
        des=len(des_s),
        exc=exc_count(sigma),
        maj=sum(des_s),
        dez=len(dez_s),
        maz=sum(dez_s),
        maf=maf,
        fix_set=fixed,
        des_set=des_s,
        dez_set=dez_s,
        rise_set=words.rise_set(sigma),
        rize_set=words.rise_set(w),
    )


def phi_perm(sigma: Permutation) -> Permutation:
    """Conjugate of the zero-moving bijection by the encoding."""
    return zder_inv(transform_phi.phi(zder(sigma)))


def phi_inv_perm(sigma: Permutation) -> Permutation:
    return zder_inv(transform_phi.psi(zder(sigma)))


def f3_perm(sigma: Permutation) -> Permutation:
    """Conjugate of the major-index-transporting bijection by the encoding."""
    return zder_inv(transform_f3.f3(zder(sigma)))


def f3_inv_perm(sigma: Permutation) -> Permutation:
    return zder_inv(transform_f3.f3_inv(zder(sigma)))


def f3_phi_inv_perm(sigma: Permutation) -> Permutation:
    """Composite map carrying (fix, maj, reduced derangement) to
    (fix, maf, reduced derangement)."""
    return f3_perm(phi_inv_perm(sigma))
