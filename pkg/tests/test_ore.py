import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuchsia.catalog import ad1, ad3, k_op, l_op, q_op, r_op, z_x, ztilde
from fuchsia.errors import DivisionDegenerate
from fuchsia.exact_algebra import Poly, RatFun, rat
from fuchsia.ore import (
    D,
    DiffOp,
    ThetaForm,
    VarMap,
    X,
    ad_conjugate,
    ad_raw,
    adjoint,
    change_var,
    equals_up_to_left_factor,
    from_theta,
    left_divide_by_d,
    op_mul,
    ore_left_factor_divide,
    to_theta,
)
from fuchsia.params import Params, draw_params
from _strategies import nonint_rationals, nonzero_polys, params, polys, rationals

x = Poly.x()
theta = Poly.x()  # theta-polynomials use the same univariate type

ops = st.lists(polys, min_size=1, max_size=4).filter(lambda c: not c[-1].is_zero()).map(DiffOp.from_polys)


# --- composition --------------------------------------------------------------------------------


def test_leibniz():
    assert op_mul(D, X) == DiffOp([1, x])


def test_euler_square():
    xd = DiffOp([0, x])
    assert op_mul(xd, xd) == DiffOp([0, x, x * x])


@given(ops, ops, ops)
def test_composition_associative(a, b, c):
    assert op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c))


@given(ops, nonzero_polys)
def test_apply_respects_composition(a, f):
    b = DiffOp([0, 1, x])
    assert op_mul(a, b).apply(RatFun(f)) == a.apply(b.apply(RatFun(f)))


# --- adjoint --------------------------------------------------------------------------------------


def test_adjoint_of_d():
    assert adjoint(D) == DiffOp([0, -1])


@given(polys, polys, polys)
def test_adjoint_of_quartic_normal_form(q2, q3, q4):
    p = DiffOp.from_polys([q4, q3, q2, Poly(), Poly.const(1)])
    d = lambda f, k=1: f.derivative(k)
    want = DiffOp.from_polys([q4 + d(q2, 2) - d(q3), 2 * d(q2) - q3, q2, Poly(), Poly.const(1)])
    assert adjoint(p) == want


@given(ops, ops)
def test_adjoint_involution_and_antihomomorphism(a, b):
    assert adjoint(adjoint(a)) == a
    assert adjoint(op_mul(a, b)) == op_mul(adjoint(b), adjoint(a))


def test_ztilde_self_adjoint_at_fixed_params():
    z = ztilde(Params.of(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13)))
    assert adjoint(z) == z


# --- addition -------------------------------------------------------------------------------------


@given(nonint_rationals)
def test_ad_of_d(lam):
    assert ad_raw(D, [(0, lam)]) == DiffOp([RatFun(Poly.const(-lam), x), 1])


@given(ops, rationals, rationals)
def test_ad_inverse(p, lam, c):
    there = ad_raw(p, [(c, lam)])
    assert ad_raw(there, [(c, -lam)]) == p


@given(params)
def test_ad_examples(p):
    assert equals_up_to_left_factor(ad1(k_op(p), p), l_op(p)) is not None
    assert equals_up_to_left_factor(ad3(q_op(p), p), r_op(p)) is not None


def test_ad_conjugate_returns_normalisation_factor():
    p = next(iter(draw_params(2, 1)))
    raw = ad_raw(k_op(p), [(0, -p.A0)])
    norm, f = ad_conjugate(k_op(p), [(0, -p.A0)])
    assert raw == norm.lmul(f)


# --- change of variable ---------------------------------------------------------------------------


@given(params)
def test_ztilde_reflection_symmetry(p):
    A0, A1, A2, A3 = p.A
    moved = change_var(ztilde(Params(A1, A0, A2, A3)), VarMap.affine(-1, 1))
    assert equals_up_to_left_factor(moved, ztilde(p)) is not None


@given(params)
def test_q_inversion_symmetry(p):
    A0, A1, A2, A3 = p.A
    moved = change_var(q_op(Params(A3, A1, A2, A0)), VarMap.reciprocal())
    target, _ = ad_conjugate(q_op(p), [(0, 1 + 2 * A2)])
    assert equals_up_to_left_factor(moved, target) is not None


@given(ops)
def test_reciprocal_is_involution(p):
    back = change_var(change_var(p, VarMap.reciprocal()), VarMap.reciprocal())
    assert back == p


# --- theta forms ----------------------------------------------------------------------------------


def test_theta_examples():
    assert to_theta(DiffOp([0, 0, x * x])) == ThetaForm({0: theta * (theta - 1)})
    assert to_theta(D) == ThetaForm({1: Poly.const(1)})


def test_ztilde_theta_form():
    p = next(iter(draw_params(4, 1)))
    A0, A1, A2, A3 = p.A
    h = rat(1, 2)
    c0 = (theta + h - A2) * (theta + h + A2) * (theta + h - A3) * (theta + h + A3)
    c1 = -(theta + 1) * (2 * theta * theta + 4 * theta + A1**2 - A0**2 - A2**2 - A3**2 + rat(5, 2))
    c2 = (theta + rat(3, 2) + A0) * (theta + rat(3, 2) - A0)
    got = to_theta(ztilde(p))
    want = ThetaForm({0: c0, 1: c1, 2: c2})
    lead = got.c[2].lc / c2.lc
    assert got == ThetaForm({k: v * lead for k, v in want.c.items()})


@given(st.lists(polys, min_size=1, max_size=3))
def test_theta_round_trip(cs):
    t = ThetaForm({k: c for k, c in enumerate(cs)}).clean()
    assert to_theta(from_theta(t)) == t


def test_left_divide_by_d():
    f = theta * theta + 3
    t = ThetaForm({1: f.shift(1)})
    q, count = left_divide_by_d(t)
    assert count == 1 and q == ThetaForm({0: f})
    q, count = left_divide_by_d(ThetaForm({0: theta * theta}))
    assert count == 0 and q == ThetaForm({0: theta * theta})


def test_divide_d2_x_consistent_with_composition():
    p = op_mul(D**2, X)
    q, count = left_divide_by_d(to_theta(p))
    assert count == 1
    assert op_mul(D, from_theta(q)) == p


# --- left division --------------------------------------------------------------------------------


@given(ops, ops)
def test_division_of_constructed_product(y, m):
    q, r = ore_left_factor_divide(op_mul(y, m), y)
    assert r.is_zero() and q == m


def test_division_with_remainder():
    q, r = ore_left_factor_divide(DiffOp([1, 0, 1]), D)
    assert q == D and r == DiffOp([1])


@given(ops, ops)
def test_division_identity(p, y):
    q, r = ore_left_factor_divide(p, y)
    assert op_mul(y, q) + r == p
    assert r.is_zero() or r.order < y.order


def test_division_by_zero_rejected():
    with pytest.raises(DivisionDegenerate):
        ore_left_factor_divide(D, DiffOp())


def test_equals_up_to_left_factor_examples():
    p = next(iter(draw_params(1, 1)))
    q = q_op(p)
    assert equals_up_to_left_factor(q.lmul(2 * x), q) == RatFun(2 * x)
    z = z_x(p)
    assert equals_up_to_left_factor(z, z) == RatFun(1)
    assert equals_up_to_left_factor(z, q) is None
