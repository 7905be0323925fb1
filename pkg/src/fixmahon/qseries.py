"""Exact sparse polynomials in the variables (u, t, s, q, Y) with optional
truncation caps on u and t, plus the generating-function identities for the
fixed-point-refined distributions, verified coefficient by coefficient
against brute-forced tables.

Coefficients are exact integers kept inside the signed 64-bit range; leaving
that range raises instead of wrapping.  Truncation drops every monomial
whose u or t exponent exceeds the active cap, which makes the capped
polynomials a quotient ring: multiply-then-truncate equals
truncate-then-multiply.
"""

from __future__ import annotations

import itertools
from functools import cache
from typing import Iterator, Mapping

from .enumeration import VerificationReport
from .errors import CoefficientOverflowError, FixmahonError
from .words import des_set, maj

VARIABLES = ("u", "t", "s", "q", "Y")
_ZERO_EXP = (0, 0, 0, 0, 0)
_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def _checked(c: int) -> int:
    if c < _INT64_MIN or c > _INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {c} leaves the 64-bit range")
    return c


def _merge_cap(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class MultiPoly:
    """Immutable sparse polynomial; monomial keys are exponent 5-tuples in
    the order (u, t, s, q, Y)."""

    __slots__ = ("coeffs", "u_cap", "t_cap")

    def __init__(
        self,
        coeffs: Mapping[tuple[int, ...], int] | None = None,
        u_cap: int | None = None,
        t_cap: int | None = None,
    ):
        clean: dict[tuple[int, int, int, int, int], int] = {}
        for exps, c in (coeffs or {}).items():
            if len(exps) != 5 or any(e < 0 for e in exps):
                raise FixmahonError(f"bad exponent vector {exps!r}")
            if c == 0:
                continue
            if u_cap is not None and exps[0] > u_cap:
                continue
            if t_cap is not None and exps[1] > t_cap:
                continue
            clean[tuple(exps)] = _checked(c)
        self.coeffs = clean
        self.u_cap = u_cap
        self.t_cap = t_cap

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, u_cap: int | None = None, t_cap: int | None = None) -> "MultiPoly":
        return cls({}, u_cap, t_cap)

    @classmethod
    def one(cls, u_cap: int | None = None, t_cap: int | None = None) -> "MultiPoly":
        return cls({_ZERO_EXP: 1}, u_cap, t_cap)

    @classmethod
    def term(
        cls,
        coeff: int = 1,
        *,
        u: int = 0,
        t: int = 0,
        s: int = 0,
        q: int = 0,
        Y: int = 0,
        u_cap: int | None = None,
        t_cap: int | None = None,
    ) -> "MultiPoly":
        return cls({(u, t, s, q, Y): coeff}, u_cap, t_cap)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly({_ZERO_EXP: other}, self.u_cap, self.t_cap)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        u_cap = _merge_cap(self.u_cap, other.u_cap)
        t_cap = _merge_cap(self.t_cap, other.t_cap)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out, u_cap, t_cap)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.coeffs.items()}, self.u_cap, self.t_cap)

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        u_cap = _merge_cap(self.u_cap, other.u_cap)
        t_cap = _merge_cap(self.t_cap, other.t_cap)
        out: dict[tuple[int, int, int, int, int], int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                eu = e1[0] + e2[0]
                if u_cap is not None and eu > u_cap:
                    continue
                et = e1[1] + e2[1]
                if t_cap is not None and et > t_cap:
                    continue
                e = (eu, et, e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                out[e] = _checked(out.get(e, 0) + c1 * c2)
        return MultiPoly(out, u_cap, t_cap)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise FixmahonError("negative powers are not defined")
        out = MultiPoly.one(self.u_cap, self.t_cap)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly({_ZERO_EXP: other})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, *, u: int = 0, t: int = 0, s: int = 0, q: int = 0, Y: int = 0) -> int:
        return self.coeffs.get((u, t, s, q, Y), 0)

    def truncated(self, u_cap: int | None, t_cap: int | None) -> "MultiPoly":
        return MultiPoly(
            self.coeffs, _merge_cap(self.u_cap, u_cap), _merge_cap(self.t_cap, t_cap)
        )

    def evaluate(self, **values: int) -> int:
        """Full evaluation; every variable that occurs must be assigned."""
        for e in self.coeffs:
            for name, exp in zip(VARIABLES, e):
                if exp and name not in values:
                    raise FixmahonError(f"no value supplied for variable {name}")
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for name, exp in zip(VARIABLES, e):
                if exp:
                    term *= values[name] ** exp
            total += term
        return total

    def geometric_inverse(self) -> "MultiPoly":
        """Multiplicative inverse of a polynomial with constant term 1,
        truncated to the active caps.  Every non-constant monomial must
        raise a capped exponent, otherwise the series would not terminate.
        """
        if self.coeffs.get(_ZERO_EXP, 0) != 1:
            raise FixmahonError("inversion requires constant term exactly 1")
        g = MultiPoly.one(self.u_cap, self.t_cap) - self
        for e in g.coeffs:
            capped = (e[0] > 0 and self.u_cap is not None) or (
                e[1] > 0 and self.t_cap is not None
            )
            if not capped:
                raise FixmahonError(
                    "inversion does not terminate under the active caps"
                )
        acc = MultiPoly.one(self.u_cap, self.t_cap)
        power = acc
        bound = (self.u_cap or 0) + (self.t_cap or 0) + 1
        for _ in range(bound):
            power = power * g
            if power.is_zero():
                return acc
            acc = acc + power
        raise FixmahonError("inversion failed to terminate")

    def to_text(self) -> str:
        """Render with monomials in graded-lexicographic exponent order."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            factors = []
            for name, exp in zip(VARIABLES, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def variable(name: str, u_cap: int | None = None, t_cap: int | None = None) -> MultiPoly:
    if name not in VARIABLES:
        raise FixmahonError(f"unknown variable {name!r}")
    return MultiPoly.term(1, **{name: 1}, u_cap=u_cap, t_cap=t_cap)


def qpoch(x: MultiPoly, k: int) -> MultiPoly:
    """Finite q-factorial product (1 - x)(1 - x q)...(1 - x q^(k-1))."""
    if k < 0:
        raise FixmahonError("nonnegative length required")
    q = variable("q")
    out = MultiPoly.one(x.u_cap, x.t_cap)
    factor = x
    for _ in range(k):
        out = out * (MultiPoly.one(x.u_cap, x.t_cap) - factor)
        factor = factor * q
    return out


def qbinom(n: int, k: int) -> MultiPoly:
    """Gaussian binomial coefficient as a polynomial in q, built by the
    additive two-term recurrence (no division)."""
    if not 0 <= k <= n:
        raise FixmahonError(f"binomial index ({n}, {k}) out of range")
    # row[j] = list of q-coefficients of the (i, j) entry
    row: list[list[int]] = [[1]]
    for i in range(1, n + 1):
        new_row: list[list[int]] = []
        for j in range(i + 1):
            acc: list[int] = []

            def _add(dest, src, shift):
                while len(dest) < len(src) + shift:
                    dest.append(0)
                for d, c in enumerate(src):
                    dest[d + shift] += c

            if j - 1 >= 0:
                _add(acc, row[j - 1], 0)
            if j < i:
                _add(acc, row[j], j)
            new_row.append(acc)
        row = new_row
    return MultiPoly({(0, 0, 0, d, 0): c for d, c in enumerate(row[k])})


BRUTE_CAP = 8


def _permutations(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n < 0 or n > cap:
        raise FixmahonError(f"size {n} exceeds the brute-force cap {cap}")
    return iter(itertools.permutations(range(1, n + 1)))


@cache
def brute_A_fix_des_maj(n: int, cap: int = BRUTE_CAP) -> MultiPoly:
    """Joint generating polynomial of (fixed points, descents, major index)
    in (Y, t, q), summed over all permutations of 1..n."""
    counts: dict[tuple[int, int, int, int, int], int] = {}
    for sigma in _permutations(n, cap):
        fix = sum(1 for i, v in enumerate(sigma, 1) if v == i)
        d = des_set(sigma)
        key = (0, len(d), 0, sum(d), fix)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts)


@cache
def brute_A_fix_exc_maj(n: int, cap: int = BRUTE_CAP) -> MultiPoly:
    """Joint generating polynomial of (fixed points, excedances, major
    index) in (Y, s, q), summed over all permutations of 1..n."""
    counts: dict[tuple[int, int, int, int, int], int] = {}
    for sigma in _permutations(n, cap):
        fix = sum(1 for i, v in enumerate(sigma, 1) if v == i)
        exc = sum(1 for i in range(1, n) if sigma[i - 1] > i)
        key = (0, 0, exc, maj(sigma), fix)
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts)


def verify_identity_127(max_n: int = 8, cap: int = BRUTE_CAP) -> VerificationReport:
    """Denominator-cleared coefficient identity for the excedance/major
    generating function: for each n,

        sum_k  qbinom(n, k) * A_k(Y, s, q) * ((sq)^(n-k) - sq)  ==  (1 - sq) Y^n.
    """
    params = {"max_n": max_n}
    sq = MultiPoly.term(1, s=1, q=1)
    checked = 0
    for n in range(max_n + 1):
        lhs = MultiPoly.zero()
        for k in range(n + 1):
            lhs = lhs + qbinom(n, k) * brute_A_fix_exc_maj(k, cap) * (sq ** (n - k) - sq)
        rhs = (MultiPoly.one() - sq) * MultiPoly.term(1, Y=n)
        checked += 1
        if lhs != rhs:
            return VerificationReport(
                "id-1.27",
                params,
                checked,
                False,
                {
                    "n": str(n),
                    "lhs": lhs.to_text(),
                    "rhs": rhs.to_text(),
                },
            )
    return VerificationReport("id-1.27", params, checked, True)


def verify_identity_126(
    u_cap: int = 6, t_cap: int = 6, cap: int = BRUTE_CAP
) -> VerificationReport:
    """Truncated-series comparison for the descent/major generating
    function: both sides are expanded exactly up to the (u, t) caps.

    Left side: sum over n of A_n(Y, t, q) u^n divided by the t-factorial
    product of length n+1.  Right side: sum over r of t^r times the
    geometric inverse of (1 - u [r+1]_q) times the ratio of u-factorial
    products.  Terms with r beyond the t cap only produce over-cap
    monomials, so the sum may stop there.
    """
    params = {"u_cap": u_cap, "t_cap": t_cap}
    one = MultiPoly.one(u_cap, t_cap)
    u = variable("u", u_cap, t_cap)
    t = variable("t", u_cap, t_cap)
    q = variable("q", u_cap, t_cap)
    Y = variable("Y", u_cap, t_cap)

    lhs = MultiPoly.zero(u_cap, t_cap)
    for n in range(u_cap + 1):
        a_n = brute_A_fix_des_maj(n, cap).truncated(u_cap, t_cap)
        lhs = lhs + a_n * u**n * qpoch(t, n + 1).geometric_inverse()

    rhs = MultiPoly.zero(u_cap, t_cap)
    for r in range(t_cap + 1):
        q_sum = MultiPoly.zero(u_cap, t_cap)
        for i in range(r + 1):
            q_sum = q_sum + q**i
        geometric = (one - u * q_sum).geometric_inverse()
        rhs = rhs + t**r * geometric * qpoch(u, r + 1) * qpoch(u * Y, r + 1).geometric_inverse()

    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs), key=lambda e: (sum(e), e))
    checked = len(keys)
    for e in keys:
        a, b = lhs.coeffs.get(e, 0), rhs.coeffs.get(e, 0)
        if a != b:
            names = " ".join(
                f"{name}^{exp}" for name, exp in zip(VARIABLES, e) if exp
            )
            return VerificationReport(
                "id-1.26",
                params,
                checked,
                False,
                {"monomial": names or "1", "lhs": str(a), "rhs": str(b)},
            )
    return VerificationReport("id-1.26", params, checked, True)
