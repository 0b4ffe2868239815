from hypothesis import given

from fuchsia.catalog import gauss, l_op, q_op, z_x, ztilde
from fuchsia.exact_algebra import Poly, rat
from fuchsia.middle_convolution import mc, mc_compose_check, strip_left_d, theta_shift
from fuchsia.ore import D, DiffOp, equals_up_to_left_factor, op_mul
from fuchsia.params import GaussParams, draw_params
from _strategies import nonint_rationals, params

x = Poly.x()


def _eq(a, b):
    return equals_up_to_left_factor(a, b) is not None


@given(nonint_rationals)
def test_mc_fixes_d(mu):
    assert _eq(mc(D, mu), D)


@given(nonint_rationals)
def test_theta_substitution_shifts_theta(mu):
    # mc_mu(theta) = theta - mu before normalisation; normalising drops the left x
    assert theta_shift(DiffOp([0, x]), mu) == DiffOp([-mu, x])


@given(nonint_rationals, nonint_rationals)
def test_mc_fixes_pure_d_operators(mu, nu):
    assert mc_compose_check(D**2, mu, nu)


def test_mc_ztilde_to_l():
    for p in draw_params(7, 5):
        assert _eq(mc(ztilde(p), -rat(1, 2)), l_op(p))


def test_mc_ztilde_to_q_drops_order():
    for p in draw_params(7, 5):
        out = mc(ztilde(p), -rat(1, 2) - p.A2)
        assert out.order == 3 and _eq(out, q_op(p))


def test_inverse_law_on_z():
    p = next(iter(draw_params(3, 1)))
    assert mc_compose_check(z_x(p), rat(1, 3), -rat(1, 3))


@given(params)
def test_composition_l_to_q(p):
    assert mc_compose_check(l_op(p), rat(1, 2), -rat(1, 2) - p.A2)
    assert _eq(mc(l_op(p), -p.A2), q_op(p))


def test_mc_zero_is_identity():
    p = next(iter(draw_params(5, 1)))
    assert _eq(mc(l_op(p), 0), l_op(p))


def test_strip_left_d_counts():
    g = gauss(GaussParams(rat(1, 3), rat(2, 5), rat(3, 7)))
    q, count = strip_left_d(op_mul(D**2, g))
    assert count == 2 and _eq(q, g)


def test_theta_shift_matches_mc_before_division():
    p = next(iter(draw_params(5, 1)))
    mu = rat(2, 9)
    shifted = theta_shift(l_op(p), mu)
    q, count = strip_left_d(shifted.normalize())
    assert _eq(q, mc(l_op(p), mu))
