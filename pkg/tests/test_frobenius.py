import pytest
from hypothesis import given

from fuchsia import catalog as cat
from fuchsia.difference import from_recurrence, displayed_recurrences
from fuchsia.errors import DegenerateParams, NonGenericExponent
from fuchsia.exact_algebra import Poly, RatFun, rat
from fuchsia.families import solution_family
from fuchsia.frobenius import (
    FrobSeries,
    l_bands,
    pochhammer_ratio,
    polynomial_solution_L,
    recurrence_at,
    riemann_liouville,
    series,
    series_ok,
    verify_series,
)
from fuchsia.hypergeometric import gauss_coeffs
from fuchsia.local_analysis import INF
from fuchsia.params import GaussParams, draw_params
from _strategies import nonint_rationals, params

n = Poly.x()
H = rat(1, 2)


def _proportional(a, b):
    c = a[0] / b[0]
    return all(u == c * v for u, v in zip(a, b))


# --- recurrences ---------------------------------------------------------------------------------


@given(nonint_rationals, nonint_rationals, nonint_rationals)
def test_gauss_recurrence(a, b, c):
    rec = recurrence_at(cat.gauss(GaussParams(a, b, c)), 0, 0)
    assert rec.order == 1
    assert RatFun(rec.rs[0], rec.r0) == RatFun((a + n - 1) * (b + n - 1), (c + n - 1) * n)


@given(params)
def test_displayed_recurrences(p):
    assert from_recurrence(recurrence_at(cat.z_x(p), 0, 0)) == displayed_recurrences("Rc0", p)
    assert from_recurrence(recurrence_at(cat.q_op(p), 0, p.A0 - p.A2)) == displayed_recurrences("RcQ0plus", p)


def test_non_exponent_rejected():
    p = next(iter(draw_params(1, 1)))
    with pytest.raises(NonGenericExponent):
        series(cat.z_x(p), 0, rat(1, 3), 5)


# --- series ------------------------------------------------------------------------------------------


@given(nonint_rationals, nonint_rationals, nonint_rationals)
def test_gauss_series_is_pochhammer_ratio(a, b, c):
    s = series(cat.gauss(GaussParams(a, b, c)), 0, 0, 15)
    assert list(s.coeffs) == gauss_coeffs(GaussParams(a, b, c), 15)
    assert series_ok(cat.gauss(GaussParams(a, b, c)), s)


def test_truncation_residual_order():
    g = GaussParams(rat(1, 3), rat(2, 7), rat(5, 11))
    s = FrobSeries(rat(0), tuple(gauss_coeffs(g, 10)), rat(0))
    # E x^m lowers the order by one, so the first residual sits at order N
    assert verify_series(cat.gauss(g), s) == 10


def test_holomorphic_z_solution_matches_closed_form():
    for p in draw_params(7, 2):
        s = series(cat.z_x(p), 0, 0, 20)
        assert _proportional(s.coeffs, solution_family("Z:f(0,0)", p, 20, "z_0").coeffs)
        q = series(cat.q_op(p), 0, 0, 20)
        assert _proportional(q.coeffs, solution_family("Q:f(0,0)", p, 20, "q_4f3_1").coeffs)


def test_resonant_pair_spans_exponent_space():
    p = next(iter(draw_params(7, 1)))
    z = cat.z_x(p)
    s1 = series(z, 0, p.A0 - H, 12, init=(1, 0))
    s2 = series(z, 0, p.A0 - H, 12, init=(0, 1))
    assert series_ok(z, s1) and series_ok(z, s2)
    assert s1.free == (0, 1)
    assert s1.coeffs[0] * s2.coeffs[1] - s1.coeffs[1] * s2.coeffs[0] != 0


def test_closed_form_residual_bound():
    p = next(iter(draw_params(3, 1)))
    s = solution_family("Z:f(0,0)", p, 25)
    res = verify_series(cat.z_x(p), s)
    assert res is None or res >= 25 - 2


# --- Riemann-Liouville -------------------------------------------------------------------------------


def test_rl_zero_is_identity():
    s = FrobSeries(rat(1, 3), (rat(1), rat(2)), rat(0))
    assert riemann_liouville(s, 0) == s


@given(params)
def test_rl_product_series_to_f00(p):
    g1, g2 = cat.gauss_pair(p)
    u = FrobSeries(-p.A0, tuple(cat.gauss_product_series(g1, g2, 30)), rat(0))
    t = riemann_liouville(u, H)
    assert t.rho == H - p.A0
    assert _proportional(t.coeffs, solution_family("Z:f(0,0)", p, 30).coeffs)


@given(params)
def test_rl_at_infinity_pochhammer_rule(p):
    for sign in (1, -1):
        rho = 1 - sign * p.A2
        s = series(cat.l_op(p), INF, rho, 20)
        t = riemann_liouville(s, H)
        assert t.rho == rho - H
        assert all(t.coeffs[k] == s.coeffs[k] * pochhammer_ratio(rho - H, rho, k) for k in range(21))
        assert series_ok(cat.ztilde(p), t)


def test_pochhammer_ratio():
    assert pochhammer_ratio(1, 2, 3) == rat(1 * 2 * 3, 2 * 3 * 4)
    assert pochhammer_ratio(rat(1, 3), rat(1, 3), 5) == 1


# --- polynomial solutions of L ---------------------------------------------------------------------


@given(params)
def test_polynomial_solutions(p):
    for m in range(4):
        q = p.replace(A2=rat(m + 1))
        s = polynomial_solution_L(q)
        assert verify_series(cat.l_op(q), s) is None
        assert len(s.coeffs) == m + 1


@given(params)
def test_degree_zero_is_constant(p):
    q = p.replace(A2=rat(1))
    assert polynomial_solution_L(q).coeffs == (rat(1),)
    assert cat.l_op(q).coeffs[0].is_zero()


@given(params)
def test_subleading_coefficient(p):
    A0, A1, _, A3 = p.A
    for m in (1, 2, 3):
        q = p.replace(A2=rat(m + 1))
        alpha = (A1**2 - A0**2 - q.A2**2 - A3**2 + 5) / 2
        s = polynomial_solution_L(q)
        assert s.coeffs[m - 1] / s.coeffs[m] == -m * (m * m + m - 2 + alpha) / (m * m - A3**2)


def test_polynomial_solution_needs_integer_a2():
    p = next(iter(draw_params(1, 1)))
    with pytest.raises(DegenerateParams):
        polynomial_solution_L(p)
    assert l_bands(p, 0)[1] == 0
