import math
import random

import pytest

import fixmahon as fm
from fixmahon.qseries import MultiPoly, variable

U_CAP, T_CAP = 6, 6


def _poly(**kwargs):
    return MultiPoly.term(kwargs.pop("coeff", 1), **kwargs)


def test_qpoch_examples():
    t = variable("t")
    q = variable("q")
    assert fm.qpoch(t, 2) == 1 - t - t * q + t**2 * q
    assert fm.qpoch(t, 0) == MultiPoly.one()
    assert fm.qpoch(variable("u"), 1) == 1 - variable("u")


def test_qbinom_examples():
    q = variable("q")
    for n in range(6):
        assert fm.qbinom(n, 0) == MultiPoly.one()
    assert fm.qbinom(2, 1) == 1 + q
    assert fm.qbinom(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    with pytest.raises(fm.FixmahonError):
        fm.qbinom(2, 3)


def test_qbinom_symmetry_and_specialization():
    for n in range(9):
        for k in range(n + 1):
            poly = fm.qbinom(n, k)
            assert poly == fm.qbinom(n, n - k)
            assert poly.evaluate(q=1) == math.comb(n, k)


def _box_count(j, rows, cols):
    # partitions of j with at most `rows` parts, each at most `cols`
    count = 0

    def rec(remaining, largest, slots):
        nonlocal count
        if remaining == 0:
            count += 1
            return
        if slots == 0:
            return
        for part in range(min(largest, remaining), 0, -1):
            rec(remaining - part, part, slots - 1)

    rec(j, cols, rows)
    return count


def test_qbinom_counts_partitions_in_a_box():
    for n in range(8):
        for k in range(n + 1):
            poly = fm.qbinom(n, k)
            degree = k * (n - k)
            for j in range(degree + 1):
                assert poly.coefficient(q=j) == _box_count(j, k, n - k)
            assert poly.coefficient(q=degree + 1) == 0


def _random_poly(rng, u_cap=None, t_cap=None):
    coeffs = {}
    for _ in range(rng.randint(0, 6)):
        exps = tuple(rng.randint(0, 2) for _ in range(5))
        coeffs[exps] = rng.randint(-4, 4)
    return MultiPoly(coeffs, u_cap, t_cap)


def test_ring_laws_random_seeded():
    rng = random.Random(20240613)
    for _ in range(60):
        a = _random_poly(rng)
        b = _random_poly(rng)
        c = _random_poly(rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == MultiPoly.zero()
        assert a * MultiPoly.one() == a


def test_truncation_is_a_ring_homomorphism():
    rng = random.Random(977)
    for _ in range(40):
        a = _random_poly(rng)
        b = _random_poly(rng)
        direct = (a * b).truncated(2, 1)
        staged = (a.truncated(2, 1) * b.truncated(2, 1)).truncated(2, 1)
        assert direct == staged
        assert (a + b).truncated(2, 1) == a.truncated(2, 1) + b.truncated(2, 1)


def test_geometric_inverse_is_a_unit_inverse():
    u = variable("u", u_cap=U_CAP, t_cap=T_CAP)
    t = variable("t", u_cap=U_CAP, t_cap=T_CAP)
    q = variable("q", u_cap=U_CAP, t_cap=T_CAP)
    one = MultiPoly.one(U_CAP, T_CAP)
    for unit in (
        one - u,
        fm.qpoch(t, 3),
        fm.qpoch(u * variable("Y"), 2).truncated(U_CAP, T_CAP),
        one - u * (1 + q + q**2),
    ):
        assert unit.geometric_inverse() * unit == one


def test_geometric_inverse_rejects_non_units():
    with pytest.raises(fm.FixmahonError, match="constant term"):
        (2 * MultiPoly.one(2, 2)).geometric_inverse()
    with pytest.raises(fm.FixmahonError, match="constant term"):
        MultiPoly.zero(2, 2).geometric_inverse()
    # an uncapped variable cannot be inverted as a series
    with pytest.raises(fm.FixmahonError, match="terminate"):
        (MultiPoly.one() - variable("s")).geometric_inverse()


def test_coefficient_overflow_is_detected():
    big = MultiPoly.term(2**62)
    with pytest.raises(fm.CoefficientOverflowError):
        big + big
    with pytest.raises(fm.CoefficientOverflowError):
        big * 4
    with pytest.raises(fm.CoefficientOverflowError):
        MultiPoly.term(2**63)


def test_to_text():
    f = _poly(Y=2) + _poly(s=1, q=1)
    assert f.to_text() == "Y^2 + s*q"
    assert MultiPoly.zero().to_text() == "0"
    assert (MultiPoly.one() - _poly(s=1, q=1)).to_text() == "1 - s*q"
    assert (3 * _poly(u=2)).to_text() == "3*u^2"


def test_evaluate_requires_all_variables():
    f = _poly(Y=1) + _poly(q=2)
    assert f.evaluate(Y=3, q=2) == 7
    with pytest.raises(fm.FixmahonError, match="Y"):
        f.evaluate(q=2)


def test_brute_distribution_polynomials():
    Y = variable("Y")
    t = variable("t")
    s = variable("s")
    q = variable("q")
    assert fm.brute_A_fix_des_maj(0) == MultiPoly.one()
    assert fm.brute_A_fix_des_maj(1) == Y
    assert fm.brute_A_fix_des_maj(2) == Y**2 + t * q
    assert fm.brute_A_fix_exc_maj(2) == Y**2 + s * q
    for n in range(6):
        assert fm.brute_A_fix_des_maj(n).evaluate(Y=1, t=1, q=1) == math.factorial(n)
        assert fm.brute_A_fix_exc_maj(n).evaluate(Y=1, s=1, q=1) == math.factorial(n)


def test_brute_cap():
    with pytest.raises(fm.FixmahonError):
        fm.brute_A_fix_des_maj(9)


def test_encoded_statistics_have_the_same_polynomial():
    # generating polynomial of (fix, dez, maz) agrees with (fix, des, maj)
    for n in range(6):
        coeffs = {}
        for sigma in fm.enum_permutations(n):
            vec = fm.perm_stats(sigma)
            key = (0, vec.dez, 0, vec.maz, vec.fix)
            coeffs[key] = coeffs.get(key, 0) + 1
        assert MultiPoly(coeffs) == fm.brute_A_fix_des_maj(n)


def test_identity_127_hand_expansion_n2():
    s = variable("s")
    q = variable("q")
    Y = variable("Y")
    sq = s * q
    lhs = (
        fm.qbinom(2, 0) * fm.brute_A_fix_exc_maj(0) * (sq**2 - sq)
        + fm.qbinom(2, 1) * fm.brute_A_fix_exc_maj(1) * (sq - sq)
        + fm.qbinom(2, 2) * fm.brute_A_fix_exc_maj(2) * (MultiPoly.one() - sq)
    )
    assert lhs == (MultiPoly.one() - sq) * Y**2


def test_identity_127_small():
    report = fm.verify_identity_127(max_n=5)
    assert report.passed
    assert report.checked == 6


def test_identity_126_small():
    report = fm.verify_identity_126(u_cap=3, t_cap=3)
    assert report.passed


def test_identity_126_low_order_coefficients():
    u = variable("u", u_cap=2, t_cap=2)
    t = variable("t", u_cap=2, t_cap=2)
    q = variable("q", u_cap=2, t_cap=2)
    Y = variable("Y", u_cap=2, t_cap=2)
    one = MultiPoly.one(2, 2)
    rhs = MultiPoly.zero(2, 2)
    for r in range(3):
        q_sum = MultiPoly.zero(2, 2)
        for i in range(r + 1):
            q_sum = q_sum + q**i
        rhs = (
            rhs
            + t**r
            * (one - u * q_sum).geometric_inverse()
            * fm.qpoch(u, r + 1)
            * fm.qpoch(u * Y, r + 1).geometric_inverse()
        )
    assert rhs.coefficient() == 1
    assert rhs.coefficient(u=1, Y=1) == 1
    assert rhs.coefficient(u=1) == 0
    lhs_n1 = fm.brute_A_fix_des_maj(1).truncated(2, 2) * u * fm.qpoch(
        t, 2
    ).geometric_inverse()
    assert lhs_n1.coefficient(u=1, Y=1) == 1
    assert lhs_n1.coefficient(u=1) == 0
