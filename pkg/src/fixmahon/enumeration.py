"""Exhaustive generators (permutations, derangements, shuffle classes),
joint-distribution tables, and the verifiers that sweep every claimed
identity over its finite domain and report the first counterexample.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import transform_f3, transform_phi, words
from .errors import CapExceededError, FixmahonError
from .permutations import (
    Permutation,
    der,
    f3_perm,
    f3_phi_inv_perm,
    format_permutation,
    perm_stats,
    phi_perm,
)
from .words import ShuffleClassId, Word, format_word, is_derangement_word

DEFAULT_ENUM_CAP = 9
SWEEP_MAX_N = 7
V_SLICE_MAX_LEN = 5
V_SLICE_MAX_LETTER = 3
PAIR_SWEEP_MAX_LEN = 6
PAIR_SWEEP_MAX_LETTER = 3

STAT_NAMES = ("fix", "des", "exc", "maj", "dez", "maz", "maf")


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise FixmahonError(f"negative size {n}")
    if n > cap:
        raise CapExceededError(f"size {n} exceeds the cap {cap}")


def enum_permutations(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Permutation]:
    """All permutations of 1..n in lexicographic order."""
    _check_cap(n, cap)
    return iter(itertools.permutations(range(1, n + 1)))


def enum_derangements(m: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Word]:
    """All fixed-point-free permutations of 1..m, lexicographically."""
    _check_cap(m, cap)
    return (
        p
        for p in itertools.permutations(range(1, m + 1))
        if all(x != i for i, x in enumerate(p, 1))
    )


def derangement_count(m: int) -> int:
    """Number of derangements of order m, by the two-term recurrence."""
    if m == 0:
        return 1
    prev2, prev1 = 1, 0  # orders 0 and 1
    if m == 1:
        return 0
    for k in range(2, m + 1):
        prev2, prev1 = prev1, (k - 1) * (prev1 + prev2)
    return prev1


def enum_shuffle_class(
    class_id: ShuffleClassId | tuple[int, Word], cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Word]:
    """All words of the class, ordered by the positions of their zeros."""
    if not isinstance(class_id, ShuffleClassId):
        class_id = ShuffleClassId(class_id[0], tuple(class_id[1]))
    n, v = class_id.n, class_id.v
    _check_cap(n, cap)
    for zeros in itertools.combinations(range(n), n - len(v)):
        word = [0] * n
        zero_positions = set(zeros)
        it = iter(v)
        for i in range(n):
            if i not in zero_positions:
                word[i] = next(it)
        yield tuple(word)


def enum_positive_words(max_len: int, max_letter: int) -> Iterator[Word]:
    """All nonempty words with letters 1..max_letter, by length then lex."""
    for m in range(1, max_len + 1):
        yield from itertools.product(range(1, max_letter + 1), repeat=m)


def enum_words(max_len: int, max_letter: int) -> Iterator[Word]:
    """All words with letters 0..max_letter, by length then lex."""
    for m in range(max_len + 1):
        yield from itertools.product(range(max_letter + 1), repeat=m)


@dataclass(frozen=True)
class DistributionTable:
    """Exact joint counts of a statistic tuple over the symmetric group."""

    stats: tuple[str, ...]
    n: int
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def to_json_dict(self) -> dict:
        return {
            "stats": list(self.stats),
            "n": self.n,
            "total": self.total(),
            "counts": {
                ",".join(str(v) for v in key): count for key, count in self.rows()
            },
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(self.stats) + ["count"])
        for key, count in self.rows():
            writer.writerow(list(key) + [count])
        return buf.getvalue()

    def to_text(self) -> str:
        header = list(self.stats) + ["count"]
        body = [[str(v) for v in key] + [str(count)] for key, count in self.rows()]
        widths = [
            max(len(header[c]), *(len(row[c]) for row in body)) if body else len(header[c])
            for c in range(len(header))
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for row in body:
            lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        return "\n".join(lines)


def joint_distribution(
    n: int, stats: Iterable[str], cap: int = DEFAULT_ENUM_CAP
) -> DistributionTable:
    """Exact joint distribution of the named statistics over all
    permutations of 1..n."""
    stats = tuple(stats)
    for name in stats:
        if name not in STAT_NAMES:
            raise FixmahonError(
                f"unknown statistic {name!r}; expected one of {', '.join(STAT_NAMES)}"
            )
    counts: dict[tuple[int, ...], int] = {}
    for sigma in enum_permutations(n, cap):
        vec = perm_stats(sigma)
        key = tuple(getattr(vec, name) for name in stats)
        counts[key] = counts.get(key, 0) + 1
    return DistributionTable(stats=stats, n=n, counts=counts)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive sweep: what was checked, how many objects,
    and the first counterexample when the sweep fails."""

    claim: str
    params: dict[str, int]
    checked: int
    passed: bool
    counterexample: dict[str, str] | None = None

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(sorted(self.params.items())),
            "checked": self.checked,
            "pass": self.passed,
            "counterexample": self.counterexample,
        }

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.claim} [{params}] checked={self.checked}: {status}"
        if self.counterexample:
            detail = "; ".join(f"{k}={v}" for k, v in self.counterexample.items())
            line += f"\ncounterexample: {detail}"
        return line


def _fail(claim, params, checked, **counterexample) -> VerificationReport:
    return VerificationReport(
        claim, params, checked, False, {k: str(v) for k, v in counterexample.items()}
    )


def _derangement_classes(max_n: int, cap: int) -> Iterator[ShuffleClassId]:
    for n in range(max_n + 1):
        for m in range(n + 1):
            for v in enum_derangements(m, cap):
                yield ShuffleClassId(n, v)


def _sliced_classes(max_n: int, max_v_len: int, max_letter: int, cap: int):
    """Classes over a finite slice of arbitrary positive subwords, the empty
    subword included."""
    for n in range(max_n + 1):
        yield ShuffleClassId(n, ())
        for v in enum_positive_words(min(n, max_v_len), max_letter):
            yield ShuffleClassId(n, v)


def check_phi_rise_preservation(
    max_n: int = SWEEP_MAX_N, cap: int = DEFAULT_ENUM_CAP
) -> VerificationReport:
    """Over every class with a deranged positive subword: the map permutes
    the class and turns the rise set into the modified rise set."""
    params = {"max_n": max_n}
    checked = 0
    for cid in _derangement_classes(max_n, cap):
        members = list(enum_shuffle_class(cid, cap))
        images = []
        for w in members:
            out = transform_phi.phi(w)
            images.append(out)
            checked += 1
            if words.rise_set(w) != words.rise_bullet_set(out):
                return _fail(
                    "thm-1.1",
                    params,
                    checked,
                    input=format_word(w),
                    expected=words.format_index_set(words.rise_set(w)),
                    actual=words.format_index_set(words.rise_bullet_set(out)),
                )
        if sorted(images) != sorted(members):
            return _fail(
                "thm-1.1",
                params,
                checked,
                input=f"class n={cid.n} v={format_word(cid.v)}",
                expected="image multiset equal to the class",
                actual="image multiset differs",
            )
    return VerificationReport("thm-1.1", params, checked, True)


def check_f3_major_index_transfer(
    max_n: int = SWEEP_MAX_N,
    max_v_len: int = V_SLICE_MAX_LEN,
    max_letter: int = V_SLICE_MAX_LETTER,
    cap: int = DEFAULT_ENUM_CAP,
) -> VerificationReport:
    """Over classes with arbitrary positive subwords (bounded slice): the
    map permutes each class, preserves the last letter, and carries the
    major index to the zero-shifted statistic."""
    params = {"max_n": max_n, "max_v_len": max_v_len, "max_letter": max_letter}
    checked = 0
    for cid in _sliced_classes(max_n, max_v_len, max_letter, cap):
        members = list(enum_shuffle_class(cid, cap))
        images = []
        for w in members:
            out = transform_f3.f3(w)
            images.append(out)
            checked += 1
            ok = (
                words.maj(w) == words.mafz(out)
                and (not w or w[-1] == out[-1])
                and words.pos_subword(out) == cid.v
                and len(out) == len(w)
            )
            if not ok:
                return _fail(
                    "thm-1.2",
                    params,
                    checked,
                    input=format_word(w),
                    expected=f"maj={words.maj(w)} last={w[-1] if w else '-'}",
                    actual=f"image={format_word(out)} mafz={words.mafz(out)}",
                )
        if sorted(images) != sorted(members):
            return _fail(
                "thm-1.2",
                params,
                checked,
                input=f"class n={cid.n} v={format_word(cid.v)}",
                expected="image multiset equal to the class",
                actual="image multiset differs",
            )
    return VerificationReport("thm-1.2", params, checked, True)


def check_encoding_bijection(
    max_n: int = SWEEP_MAX_N, cap: int = DEFAULT_ENUM_CAP
) -> VerificationReport:
    """The zero/derangement encoding is a bijection onto the words with a
    deranged positive subword, matching rise sets as claimed."""
    from .permutations import zder, zder_inv

    params = {"max_n": max_n}
    checked = 0
    for n in range(max_n + 1):
        seen = set()
        for sigma in enum_permutations(n, cap):
            w = zder(sigma)
            checked += 1
            if words.rise_set(sigma) != words.rise_bullet_set(w):
                return _fail(
                    "prop-1.3",
                    params,
                    checked,
                    input=format_permutation(sigma),
                    expected=words.format_index_set(words.rise_set(sigma)),
                    actual=words.format_index_set(words.rise_bullet_set(w)),
                )
            if perm_stats(sigma).rize_set != words.rise_set(w):
                return _fail(
                    "prop-1.3", params, checked,
                    input=format_permutation(sigma),
                    expected="rize computed through the encoding",
                    actual="mismatch",
                )
            if zder_inv(w) != sigma or not is_derangement_word(words.pos_subword(w)):
                return _fail(
                    "prop-1.3",
                    params,
                    checked,
                    input=format_permutation(sigma),
                    expected="decoding returns the permutation",
                    actual=format_word(w),
                )
            seen.add(w)
        expected_size = sum(
            math.comb(n, m) * derangement_count(m) for m in range(n + 1)
        )
        if len(seen) != math.factorial(n) or expected_size != math.factorial(n):
            return _fail(
                "prop-1.3",
                params,
                checked,
                input=f"n={n}",
                expected=f"{math.factorial(n)} distinct encoded words",
                actual=f"{len(seen)} (size formula gives {expected_size})",
            )
    return VerificationReport("prop-1.3", params, checked, True)


def check_induced_permutation_maps(
    max_n: int = SWEEP_MAX_N, cap: int = DEFAULT_ENUM_CAP
) -> VerificationReport:
    """The two induced maps are bijections of the symmetric group and
    transport the statistic triples (and the excedance-refined tuples) as
    claimed."""
    params = {"max_n": max_n}
    checked = 0
    for n in range(max_n + 1):
        phi_images = set()
        f3_images = set()
        for sigma in enum_permutations(n, cap):
            checked += 1
            s = perm_stats(sigma)
            d = der(sigma)

            tau = phi_perm(sigma)
            t = perm_stats(tau)
            if (s.fix, s.rize_set, d) != (t.fix, t.rise_set, der(tau)):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/rize/der transfer",
                    actual=format_permutation(tau),
                )
            if (s.fix, s.dez_set, s.exc) != (t.fix, t.des_set, t.exc):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/dez-set/exc transfer",
                    actual=format_permutation(tau),
                )
            if (s.fix, s.dez, s.maz, s.exc) != (t.fix, t.des, t.maj, t.exc):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/dez/maz/exc transfer",
                    actual=format_permutation(tau),
                )
            phi_images.add(tau)

            tau2 = f3_perm(sigma)
            t2 = perm_stats(tau2)
            if (s.fix, s.maz, d) != (t2.fix, t2.maf, der(tau2)):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/maz/der to fix/maf/der",
                    actual=format_permutation(tau2),
                )
            if (s.fix, s.maz, s.exc) != (t2.fix, t2.maf, t2.exc):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/maz/exc to fix/maf/exc",
                    actual=format_permutation(tau2),
                )
            f3_images.add(tau2)

            tau3 = f3_phi_inv_perm(sigma)
            t3 = perm_stats(tau3)
            if (s.fix, s.maj, d) != (t3.fix, t3.maf, der(tau3)):
                return _fail(
                    "thm-1.4", params, checked,
                    input=format_permutation(sigma), equation="fix/maj/der to fix/maf/der",
                    actual=format_permutation(tau3),
                )
        if len(phi_images) != math.factorial(n) or len(f3_images) != math.factorial(n):
            return _fail(
                "thm-1.4", params, checked,
                input=f"n={n}", equation="bijectivity",
                actual=f"{len(phi_images)} and {len(f3_images)} images",
            )
    return VerificationReport("thm-1.4", params, checked, True)


def check_equidistribution(
    max_n: int = SWEEP_MAX_N, cap: int = DEFAULT_ENUM_CAP
) -> VerificationReport:
    """Multiset equalities between the encoded and the classical statistic
    triples over the whole symmetric group."""
    params = {"max_n": max_n}
    checked = 0
    for n in range(max_n + 1):
        pairs = [
            (("fix", "dez", "maz"), ("fix", "des", "maj")),
            (("fix", "exc", "maz"), ("fix", "exc", "maj")),
            (("fix", "exc", "maf"), ("fix", "exc", "maj")),
        ]
        for left, right in pairs:
            a = joint_distribution(n, left, cap)
            b = joint_distribution(n, right, cap)
            checked += a.total() + b.total()
            if a.counts != b.counts:
                return _fail(
                    "cor-1.5",
                    params,
                    checked,
                    input=f"n={n}",
                    expected=f"{'/'.join(left)} matches {'/'.join(right)}",
                    actual="distributions differ",
                )
    return VerificationReport("cor-1.5", params, checked, True)


def check_f3_zero_position_dependence(
    max_len: int = PAIR_SWEEP_MAX_LEN,
    max_letter: int = PAIR_SWEEP_MAX_LETTER,
) -> VerificationReport:
    """Words sharing zero positions and the descent set of their positive
    subword share the zero positions of their images."""
    params = {"max_len": max_len, "max_letter": max_letter}
    checked = 0
    groups: dict[tuple, frozenset[int]] = {}
    for w in enum_words(max_len, max_letter):
        checked += 1
        key = (len(w), words.zero_set(w), words.des_set(words.pos_subword(w)))
        image_zeros = words.zero_set(transform_f3.f3(w))
        if key not in groups:
            groups[key] = image_zeros
        elif groups[key] != image_zeros:
            return _fail(
                "prop-4.1",
                params,
                checked,
                input=format_word(w),
                expected=words.format_index_set(groups[key]),
                actual=words.format_index_set(image_zeros),
            )
    return VerificationReport("prop-4.1", params, checked, True)


def check_roundtrips(
    max_n: int = SWEEP_MAX_N,
    max_v_len: int = V_SLICE_MAX_LEN,
    max_letter: int = V_SLICE_MAX_LETTER,
    cap: int = DEFAULT_ENUM_CAP,
) -> VerificationReport:
    """Inverse pairs compose to the identity on every class, and both maps
    fix the words and permutations without fixed points."""
    from .permutations import zder

    params = {"max_n": max_n, "max_v_len": max_v_len, "max_letter": max_letter}
    checked = 0
    for cid in _derangement_classes(max_n, cap):
        for w in enum_shuffle_class(cid, cap):
            checked += 1
            out = transform_phi.phi(w)
            if transform_phi.psi(out) != w or transform_phi.phi(transform_phi.psi(w)) != w:
                return _fail(
                    "roundtrips", params, checked,
                    input=format_word(w), expected="identity round trip",
                    actual=format_word(transform_phi.psi(out)),
                )
        if cid.n == len(cid.v) and cid.v:
            # zero-free class: both transformations fix the single member
            v = cid.v
            if transform_phi.phi(v) != v or transform_f3.f3(v) != v:
                return _fail(
                    "roundtrips", params, checked,
                    input=format_word(v), expected="fixed word",
                    actual="moved",
                )
    for cid in _sliced_classes(max_n, max_v_len, max_letter, cap):
        for w in enum_shuffle_class(cid, cap):
            checked += 1
            if transform_f3.f3_inv(transform_f3.f3(w)) != w:
                return _fail(
                    "roundtrips", params, checked,
                    input=format_word(w), expected="identity round trip",
                    actual=format_word(transform_f3.f3_inv(transform_f3.f3(w))),
                )
    for n in range(max_n + 1):
        for sigma in enum_derangements(n, cap):
            checked += 1
            if phi_perm(sigma) != sigma or f3_perm(sigma) != sigma:
                return _fail(
                    "roundtrips", params, checked,
                    input=format_permutation(sigma),
                    expected="derangements stay fixed",
                    actual="moved",
                )
            assert zder(sigma) == der(sigma)
    return VerificationReport("roundtrips", params, checked, True)


CLAIMS = {
    "thm-1.1": check_phi_rise_preservation,
    "thm-1.2": check_f3_major_index_transfer,
    "prop-1.3": check_encoding_bijection,
    "thm-1.4": check_induced_permutation_maps,
    "cor-1.5": check_equidistribution,
    "prop-4.1": check_f3_zero_position_dependence,
    "roundtrips": check_roundtrips,
}


def verify_claim(claim_id: str, **params) -> VerificationReport:
    """Run one named sweep; unknown names raise, parameters are passed on."""
    if claim_id not in CLAIMS:
        raise FixmahonError(
            f"unknown claim {claim_id!r}; expected one of {', '.join(sorted(CLAIMS))}"
        )
    clean = {k: v for k, v in params.items() if v is not None}
    return CLAIMS[claim_id](**clean)
