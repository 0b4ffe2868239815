import mpmath
import pytest
import sympy
from hypothesis import given

from fuchsia import catalog as cat
from fuchsia.errors import DegenerateParams, MissingParam, UnknownName
from fuchsia.exact_algebra import Poly, RatFun, rat
from fuchsia.ore import DiffOp, equals_up_to_left_factor, ore_left_factor_divide
from fuchsia.params import GaussParams, Params
from _strategies import nonint_rationals, params
from _sym import X, apply_op, sym_ratfun

x = Poly.x()
P = Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))


# --- registry -------------------------------------------------------------------------------


def test_registry_names_and_signatures():
    for name in ("Z", "Zt", "Ztilde", "K", "L", "Q", "R", "DF", "Gauss"):
        assert name in cat.names()
        assert cat.describe(name)
    assert cat.signature("Q") == ("A0", "A1", "A2", "A3")
    assert cat.signature("DF") == ("a", "b", "c", "g")


def test_registry_errors():
    with pytest.raises(UnknownName):
        cat.make("Nope", {})
    with pytest.raises(UnknownName):
        cat.signature("Nope")
    with pytest.raises(MissingParam):
        cat.make("Q", {"A0": rat(1, 7)})


def test_make_normalises():
    op = cat.make("Q", {"A0": P.A0, "A1": P.A1, "A2": P.A2, "A3": P.A3})
    assert op.has_poly_coeffs()
    assert equals_up_to_left_factor(op, cat.q_op(P))


# --- explicit coefficients ------------------------------------------------------------------


@given(params)
def test_z_leading_and_constant_coefficients(p):
    z = cat.z_x(p)
    assert z.order == 4
    assert z.coeffs[4] == RatFun(x**3 * (x - 1) ** 2)
    A0, A1, A2, A3 = p.A
    assert z.coeffs[0](0) == -((2 * A0 - 1) ** 2) * (A0**2 + A1**2 - A2**2 - A3**2 - 2 * A0 + 1) / 4


@given(params)
def test_zt_becomes_z_under_the_change_of_variable(p):
    # x = (1 - t)/2, so d/dt = -1/2 d/dx; compare via sympy
    t = sympy.Symbol("t")
    zt = cat.z_t(p)
    fx = sympy.Function("g")
    g_of_t = fx((1 - t) / 2)
    lhs = sum(sym_ratfun(c, t) * sympy.diff(g_of_t, t, j) for j, c in enumerate(zt.coeffs))
    lhs = lhs.subs(t, 1 - 2 * X).doit()
    z = cat.z_x(p)
    rhs = apply_op(z, fx(X))
    ratio = sympy.simplify(lhs / rhs)
    assert ratio.free_symbols <= {X}
    assert not ratio.has(fx)


def test_gauss_operator_kills_2f1():
    g = GaussParams(rat(1, 3), rat(2, 7), rat(5, 11))
    op = cat.gauss(g)
    mpmath.mp.dps = 30
    f = lambda v: mpmath.hyp2f1(mpmath.mpf(1) / 3, mpmath.mpf(2) / 7, mpmath.mpf(5) / 11, v)  # noqa: E731
    at = mpmath.mpf("0.3")
    val = sum(float(c(rat(3, 10))) * mpmath.diff(f, at, j) for j, c in enumerate(op.coeffs))
    # the coefficients enter as doubles, so the residual is at rounding level
    assert abs(val) < 1e-14


# --- tensor products ------------------------------------------------------------------------


def _reduce_second_derivatives(expr, funcs):
    """Replace ``z_i''`` by ``S_i z_i`` until no second derivative remains."""
    for _ in range(6):
        for z, s in funcs:
            for k in range(5, 1, -1):
                target = sympy.diff(z, X, k)
                repl = sympy.diff(s * z, X, k - 2)
                expr = expr.subs(target, repl)
    return sympy.simplify(expr)


def test_tensor_product_kills_products():
    s1 = RatFun(Poly.const(1), x)
    s2 = RatFun(Poly.const(rat(2, 3)), x - 1)
    op = cat.tensor_product(s1, s2)
    z1, z2 = sympy.Function("u")(X), sympy.Function("v")(X)
    res = apply_op(op, z1 * z2)
    assert _reduce_second_derivatives(res, [(z1, sym_ratfun(s1)), (z2, sym_ratfun(s2))]) == 0


def test_tensor_square_kills_squares():
    s = RatFun(Poly([1, 2]), x * (x - 1))
    z = sympy.Function("u")(X)
    res = apply_op(cat.tensor_square(s), z * z)
    assert _reduce_second_derivatives(res, [(z, sym_ratfun(s))]) == 0
    assert cat.tensor_product(s, s) == cat.tensor_square(s)


def test_tensor_limit_is_limit():
    s = RatFun(Poly.const(1), x)
    t = RatFun(Poly.const(1), (x - 1) * (x - 1))
    lim = cat.tensor_product_limit(s, t)
    eps = rat(1, 10**9)
    near = cat.tensor_product(s + t * eps, s)
    at = rat(1, 3)
    for j in range(5):
        assert abs(float(near.coeff(j)(at)) - float(lim.coeff(j)(at))) < 1e-6


@given(params)
def test_gauss_pair_tensor_is_k(p):
    g1, g2 = cat.gauss_pair(p)
    assert equals_up_to_left_factor(cat.tensor_product_gauss(g1, g2), cat.k_op(p))


@given(nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals)
def test_apparent_quadratic_divides_leading_coefficient(a1, b1, a2, c):
    g1, g2 = GaussParams(a1, b1, c), GaussParams(a2, b1 + rat(1, 3), c + rat(2, 5))
    q = cat.apparent_quadratic(g1, g2)
    op = cat.tensor_product_gauss(g1, g2).normalize()
    lead = op.coeffs[-1].num
    if q.degree > 0:
        assert (lead % q).is_zero()


def test_gauss_product_series_against_mpmath():
    g1, g2 = GaussParams(rat(1, 3), rat(2, 7), rat(5, 11)), GaussParams(rat(-1, 5), rat(3, 4), rat(2, 9))
    got = cat.gauss_product_series(g1, g2, 6)
    mpmath.mp.dps = 30
    f = lambda v: mpmath.hyp2f1(*(mpmath.mpf(float(q)) for q in (g1.a, g1.b, g1.c)), v) * mpmath.hyp2f1(  # noqa: E731
        *(mpmath.mpf(float(q)) for q in (g2.a, g2.b, g2.c)), v
    )
    want = mpmath.taylor(f, 0, 6)
    assert all(abs(float(c) - float(w)) < 1e-10 for c, w in zip(got, want))


# --- apparent-free cases --------------------------------------------------------------------


def test_case1_parameters():
    cp = cat.Case1Params(rat(1, 3), rat(2, 7), rat(5, 11), rat(1, 13))
    a1 = cp.a1
    g1, g2 = cp.gauss()
    assert g1.c == g2.c == rat(5, 11)
    # a1 is chosen so that every root of the quadratic sits at the singular point 0
    q = cat.apparent_quadratic(g1, g2)
    assert q.coeff(0) == 0 and q.coeff(1) == 0
    assert g1.a == a1
    with pytest.raises(DegenerateParams):
        cat.Case1Params(rat(1, 3), rat(2, 7), rat(2, 3), rat(1, 3))
    euler = cat.Case1Params(rat(1, 3), rat(2, 7), rat(5, 11), rat(5, 11) - rat(2, 7))
    assert euler.euler_locus and euler.lam is None


def test_m6_factors_through_y():
    cp = cat.Case1Params(rat(1, 3), rat(2, 7), rat(5, 11), rat(1, 13), rat(2, 9))
    q, rem = ore_left_factor_divide(cat.m6_op(cp), cat.y_op(cp))
    assert rem.is_zero()
    assert equals_up_to_left_factor(q, cat.m5_op(cp))


def test_k13_split():
    p0 = Params(rat(1, 7), rat(2, 7), rat(0), rat(4, 13))
    from fuchsia.ore import op_mul

    assert equals_up_to_left_factor(cat.k_s1s2_display(p0), op_mul(cat.k13_one(), cat.k13_three(p0)))
