import math
import random

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fuchsia.errors import BalanceViolation, DegenerateDenominator, NonConvergent, PoleBeforeTermination
from fuchsia.exact_algebra import rat
from fuchsia.families import hat_list
from fuchsia.hypergeometric import (
    E1,
    E2,
    E12,
    RC1_SYMMETRIES,
    HypParams,
    convolution_4f3_form,
    f4t3_at1,
    gauss_coeffs,
    h0_reduction_check,
    pochhammer,
    product_2f1_coeffs,
    q0_coeffs,
    rc0_hat,
    rc1_hat,
    terminating_4f3_at1,
    transform_4f3,
    uv0,
    uv1,
    y_family,
)
from fuchsia.params import GaussParams, random_rat
from _strategies import nonint_rationals, params, seeds


def _balanced(seed: int, m: int) -> HypParams:
    """An admissible balanced terminating parameter list with ``alpha_0 = -m``."""
    rng = random.Random(seed)
    while True:
        a1, a2, a3, b1, b2 = (random_rat(rng) for _ in range(5))
        h = HypParams.of(-m, a1, a2, a3, b1, b2, 1 - m + a1 + a2 + a3 - b1 - b2)
        if all(v.denominator != 1 for v in (*h.alphas[1:], *h.betas)):
            return h


# --- Pochhammer and direct sums ---------------------------------------------------------------


def test_pochhammer_examples():
    assert pochhammer(rat(5, 3), 0) == 1
    assert pochhammer(rat(1), 6) == math.factorial(6)
    assert pochhammer(rat(-2), 3) == 0
    assert pochhammer(rat(1, 2), 2) == rat(3, 4)
    with pytest.raises(ValueError):
        pochhammer(rat(1), -1)


@given(nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals)
def test_terminating_short_sums(a1, a2, a3, b1, b2, b3):
    assert terminating_4f3_at1(HypParams.of(0, a1, a2, a3, b1, b2, b3)) == 1
    h = HypParams.of(-1, a1, a2, a3, b1, b2, b3)
    assert terminating_4f3_at1(h) == 1 - a1 * a2 * a3 / (b1 * b2 * b3)


@given(st.integers(0, 8), nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals)
def test_pfaff_saalschutz(m, a, b, c, t):
    # a 4F3 with a cancelling pair reduces to a balanced 3F2 with a product formula
    d = 1 + a + b - c - m
    assume(d.denominator != 1)
    h = HypParams.of(-m, a, b, t, c, d, t)
    assert h.is_balanced()
    want = pochhammer(c - a, m) * pochhammer(c - b, m) / (pochhammer(c, m) * pochhammer(c - a - b, m))
    assert terminating_4f3_at1(h) == want
    assert terminating_4f3_at1(h, reverse=True) == want


def test_terminating_rejects_bad_input():
    with pytest.raises(ValueError):
        terminating_4f3_at1(HypParams.of(rat(1, 2), 1, 1, 1, rat(1, 3), rat(1, 5), rat(1, 7)))
    with pytest.raises(PoleBeforeTermination):
        terminating_4f3_at1(HypParams.of(-3, rat(1, 3), rat(1, 5), rat(1, 7), -1, rat(1, 11), rat(1, 13)))


# --- contiguous and three-term relations ------------------------------------------------------


@given(seeds, st.integers(1, 7))
def test_contiguous_relations(seed, m):
    h = _balanced(seed, m)
    try:
        U1, V1, U2, V2 = uv0(h)
    except DegenerateDenominator:
        assume(False)
    F = terminating_4f3_at1
    assert F(h) == U1 * F(h.shift(E1)) + V1 * F(h.shift(E12))
    assert F(h) == U2 * F(h.shift(E2)) + V2 * F(h.shift(E12))


@given(seeds, st.integers(2, 7))
def test_three_term_relation(seed, m):
    h = _balanced(seed, m)
    try:
        q1, q2 = q0_coeffs(h)
    except DegenerateDenominator:
        assume(False)
    F = terminating_4f3_at1
    assert F(h) == q1 * F(h.shift(E12)) + q2 * F(h.shift(E12).shift(E12))


@given(params, st.integers(0, 3))
def test_rc0_hat_annihilates_terminating_sums(p, m):
    # make the list terminating at alpha_0 = -m, keeping it balanced through beta_3
    h = hat_list("sol1_rc0", p)
    shift = -m - h.alphas[0]
    t = HypParams((rat(-m), *h.alphas[1:]), (*h.betas[:2], h.betas[2] + shift))
    assert t.is_balanced()
    eq = rc0_hat(t)
    seq = [terminating_4f3_at1(t.at(k)) for k in range(7)]
    assert all(seq[k] == eq.p1(k) * seq[k - 1] + eq.p2(k) * seq[k - 2] for k in range(2, 7))


@given(seeds, st.integers(1, 7))
def test_transformation(seed, m):
    h = _balanced(seed, m)
    pre, h2 = transform_4f3(h)
    assert h2.is_balanced()
    try:
        rhs = terminating_4f3_at1(h2)
    except PoleBeforeTermination:
        assume(False)
    assert terminating_4f3_at1(h) == pre * rhs


def test_transformation_needs_balance():
    with pytest.raises(BalanceViolation):
        transform_4f3(HypParams.of(-2, rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11), rat(1, 13), rat(1, 17)))


# --- Gauss products ---------------------------------------------------------------------------


def test_gauss_coeffs_against_mpmath():
    g = GaussParams(rat(1, 3), rat(2, 7), rat(5, 11))
    got = gauss_coeffs(g, 6)
    want = mpmath.taylor(lambda x: mpmath.hyp2f1(1 / mpmath.mpf(3), 2 / mpmath.mpf(7), 5 / mpmath.mpf(11), x), 0, 6)
    assert all(abs(float(c) - float(w)) < 1e-12 for c, w in zip(got, want))


@given(seeds)
def test_convolution_identity(seed):
    rng = random.Random(seed)
    inner = GaussParams(*(random_rat(rng) for _ in range(3)))
    outer = GaussParams(*(random_rat(rng) for _ in range(3)))
    prod = product_2f1_coeffs(inner, outer, 10)
    assert all(prod[k] == convolution_4f3_form(inner, outer, k) for k in range(11))


# --- non-terminating values -------------------------------------------------------------------


def test_f4t3_against_mpmath_balanced():
    a = [0.3, 0.45, 0.7, 1.2]
    b = [0.9, 1.35, 1.4]
    value, _ = f4t3_at1(a, [*b, 1])
    mpmath.mp.dps = 30
    pre = mpmath.fprod(mpmath.gamma(x) for x in a) / mpmath.fprod(mpmath.gamma(x) for x in b)
    want = float(pre * mpmath.hyper(a, b, 1))
    assert abs(value - want) < 1e-12 * abs(want)


def test_f4t3_rejects_divergent():
    with pytest.raises(NonConvergent):
        f4t3_at1([0.3, 0.4, 0.5, 0.6], [0.2, 0.3, 0.4, 1.0])


def test_y0_against_mpmath():
    h = HypParams.of(rat(3, 10), rat(9, 20), rat(7, 10), rat(6, 5), rat(9, 10), rat(27, 20), rat(7, 5))
    assert h.is_balanced()
    mpmath.mp.dps = 30
    a, b = h.as_floats()
    pre = mpmath.fprod(mpmath.gamma(x) for x in a) / mpmath.fprod(mpmath.gamma(x) for x in b)
    want = float(pre * mpmath.hyper(a, b, 1))
    assert abs(y_family(h, 0) - want) < 1e-10 * abs(want)


def test_y_family_needs_balance():
    with pytest.raises(BalanceViolation):
        y_family(HypParams.of(rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11), 1, 1, 1), 0)


def _rel(lhs, *terms):
    return abs(lhs - sum(terms)) / (abs(lhs) + sum(abs(t) for t in terms))


def test_y_family_inhomogeneous_relations():
    h = HypParams.of(rat(3, 10), rat(9, 20), rat(7, 10), rat(6, 5), rat(9, 10), rat(27, 20), rat(7, 5))
    U1, V1, U2, V2, c1, c2 = (float(v) for v in uv1(h))
    for i in range(8):
        y = y_family(h, i)
        assert _rel(y, U1 * y_family(h.shift(E1), i), V1 * y_family(h.shift(E12), i), c1) < 1e-9
        assert _rel(y, U2 * y_family(h.shift(E2), i), V2 * y_family(h.shift(E12), i), c2) < 1e-9


# --- symmetries of the two families -----------------------------------------------------------


@given(seeds, st.integers(1, 5))
def test_uv0_swap_symmetry(seed, m):
    h = _balanced(seed, m)
    try:
        U1, V1, U2, V2 = uv0(h)
        S1, T1, S2, T2 = uv0(h.swap01())
    except DegenerateDenominator:
        assume(False)
    assert (U1, V1) == (S2, T2)
    assert (U2, V2) == (S1, T1)


@given(params)
def test_rc1_symmetries(p):
    h = hat_list("sol1_rc1", p)
    base = rc1_hat(h)
    for sym in RC1_SYMMETRIES.values():
        g = rc1_hat(sym(h))
        assert (g.p1, g.p2) == (base.p1, base.p2)


@given(params)
def test_h0_reduction(p):
    assert h0_reduction_check(hat_list("sol1_rc1", p))


def test_symbolic_parameters():
    h = HypParams.of(rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11), rat(1, 13), rat(1, 17), rat(1, 19))
    s = h.symbolic()
    assert s.at(0) == s
    for x, y in zip(s, h.at(2)):
        assert (x(2) if hasattr(x, "num") else x) == y
