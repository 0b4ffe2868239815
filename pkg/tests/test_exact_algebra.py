from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuchsia.exact_algebra import MPoly, Poly, RatFun, poly_gcd, rat, rat_from_json, rat_to_json, rational_roots
from _strategies import nonzero_polys, polys, rationals

x = Poly.x()


# --- examples -------------------------------------------------------------------------------


def test_derivative_examples():
    assert (x * x).derivative() == 2 * x
    assert Poly.const(5).derivative() == Poly()
    assert (x**3 - x).derivative() == 3 * x * x - 1


def test_rational_roots_examples():
    roots, rest = rational_roots(x * x - 1)
    assert roots == [(rat(-1), 1), (rat(1), 1)] and rest == Poly.const(1)
    roots, rest = rational_roots(x**3 * (x - 1) ** 2)
    assert roots == [(rat(0), 3), (rat(1), 2)]
    roots, rest = rational_roots(x * x + 1)
    assert roots == [] and rest == x * x + 1


def test_rational_roots_rejects_zero():
    with pytest.raises(ValueError):
        rational_roots(Poly())


def test_mpoly_partial_examples():
    t1, t2, t3 = MPoly.gens()
    d = -1 + t1 * t1 + t2 * t2 + t3 * t3 - 2 * t1 * t2 * t3
    assert d.partial(0) == 2 * t1 - 2 * t2 * t3
    assert (t1 * t3).partial(1) == MPoly()
    assert (t1 * t2 * t3).partial(2) == t1 * t2


def test_rat_json_round_trip():
    for v in (rat(0), rat(-3, 7), rat(5)):
        assert rat_from_json(rat_to_json(v)) == v
    assert rat("2/6") == rat(1, 3)
    assert rat(Fraction(3, 9)) == rat(1, 3)


# --- properties ------------------------------------------------------------------------------


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polys, nonzero_polys)
def test_divmod_reconstructs(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (a * c).divmod(g)[1].is_zero()
    assert (b * c).divmod(g)[1].is_zero()
    assert c.divmod(g)[1].is_zero() or g.degree >= c.degree


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(st.lists(rationals, min_size=1, max_size=4), rationals)
def test_roots_recovered(roots, lead):
    if lead == 0:
        lead = rat(1)
    p = Poly.from_roots(roots, lead)
    found, rest = rational_roots(p)
    assert sorted(r for r, m in found for _ in range(m)) == sorted(roots)
    assert rest.degree == 0


@given(polys, rationals, rationals)
def test_shift_is_composition(p, a, v):
    assert p.shift(a)(v) == p(v + a)


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_ratfun_reduces(a, b, c):
    f = RatFun(a * c, b * c)
    g = RatFun(a, b)
    assert f == g
    assert f.den.lc == 1


@given(nonzero_polys, nonzero_polys, nonzero_polys, nonzero_polys)
def test_ratfun_quotient_rule(a, b, c, d):
    f, g = RatFun(a, b), RatFun(c, d)
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
    assert (f / g) * g == f


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), rationals), max_size=6))
def test_mpoly_mixed_partials_commute(terms):
    p = MPoly({(i, j, k): c for i, j, k, c in terms})
    assert p.partial(0).partial(1) == p.partial(1).partial(0)
    assert p.partial(1).partial(2) == p.partial(2).partial(1)


@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), rationals), max_size=5),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), rationals), max_size=5),
    st.tuples(rationals, rationals, rationals),
)
def test_mpoly_subs_is_homomorphism(t1, t2, pt):
    p = MPoly({(i, j, k): c for i, j, k, c in t1})
    q = MPoly({(i, j, k): c for i, j, k, c in t2})
    assert (p * q).subs(pt) == p.subs(pt) * q.subs(pt)
    assert (p + q).subs(pt) == p.subs(pt) + q.subs(pt)
