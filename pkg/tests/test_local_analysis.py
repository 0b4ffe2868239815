import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuchsia import catalog as cat
from fuchsia.errors import IrregularSingular, UnknownOperator
from fuchsia.exact_algebra import Poly, RatFun, rat
from fuchsia.frobenius import l_bands
from fuchsia.local_analysis import (
    INF,
    ExponentForm,
    compare_scheme,
    expected_scheme,
    fuchs_defect,
    is_self_adjoint,
    local_exponents,
    normal_form_q,
    scheme_names,
    shift_coeffs,
    theta_invariants,
)
from fuchsia.ore import D, DiffOp, conjugate_logderiv
from fuchsia.params import GaussParams, Params, draw_params
from _strategies import nonint_rationals, params, polys

x = Poly.x()
m = Poly.x()
FIXED = Params.of(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))


def test_shift_coeffs_examples():
    assert shift_coeffs(D) == {-1: m}
    assert shift_coeffs(DiffOp([0, x])) == {0: m}


def test_shift_coeffs_of_l_match_polynomial_bands():
    p = next(iter(draw_params(5, 1)))
    e = shift_coeffs(cat.l_op(p))
    lead = e[0](0) / l_bands(p, 0)[0]
    for k in range(6):
        pk, qk, rk = l_bands(p, k)
        assert e[0](k) == lead * pk
        assert e[-1](k) == lead * qk
        assert e[-2](k) == lead * rk


def test_ztilde_exponents_at_zero():
    got, rest = local_exponents(cat.ztilde(FIXED), 0)
    h = rat(1, 2)
    assert got == sorted([h - FIXED.A0, rat(0), rat(1), h + FIXED.A0]) and rest.degree == 0


@given(nonint_rationals, nonint_rationals, nonint_rationals)
def test_gauss_exponents(a, b, c):
    op = cat.gauss(GaussParams(a, b, c))
    assert local_exponents(op, 0)[0] == sorted([rat(0), 1 - c])
    assert local_exponents(op, 1)[0] == sorted([rat(0), c - a - b])
    assert local_exponents(op, INF)[0] == sorted([a, b])
    assert fuchs_defect(op) == 0


def test_q_exponents_at_infinity():
    A0, A1, A2, A3 = FIXED.A
    assert local_exponents(cat.q_op(FIXED), INF)[0] == sorted([1 + 2 * A2, 1 + A2 - A3, 1 + A2 + A3])


@given(params)
def test_all_tabulated_schemes(p):
    for name in scheme_names():
        if name == "Gauss":
            continue
        vals = p.to_df().as_dict() if name == "DF" else p.as_dict()
        res = compare_scheme(cat.make(name, vals), expected_scheme(name), vals)
        assert all(v["match"] for v in res.values()), name


def test_scheme_tables_exposed():
    assert [str(e) for e in dict(expected_scheme("Z").entries)[rat(0)]] == ["0", "-1/2+A0", "1/2+A0", "2A0"]
    assert [str(e) for e in dict(expected_scheme("L").entries)[INF]] == ["1+A2", "1-A3", "1+A3", "1-A2"]
    assert "DF" in scheme_names()
    with pytest.raises(UnknownOperator):
        expected_scheme("nope")


def test_exponent_form_parse():
    f = ExponentForm.parse("1-A0-A1-A2+A3")
    assert f.evaluate({"A0": 1, "A1": 2, "A2": 3, "A3": 4}) == -1
    assert ExponentForm.parse("2a+2c+g+2").evaluate({"a": 1, "c": 1, "g": 1}) == 7
    with pytest.raises(ValueError):
        ExponentForm.parse("A0*")


def test_irregular_point_detected():
    with pytest.raises(IrregularSingular):
        local_exponents(DiffOp([1, x * x]), 0)


# --- normal form and invariants --------------------------------------------------------------------


@given(polys, polys, polys)
def test_normal_form_fixed_point(q2, q3, q4):
    p = DiffOp.from_polys([q4, q3, q2, Poly(), Poly.const(1)])
    assert normal_form_q(p) == (RatFun(q2), RatFun(q3), RatFun(q4))


@given(polys, polys, polys, polys)
def test_normal_form_matches_direct_conjugation(q1, q2, q3, q4):
    p = DiffOp.from_polys([q4, q3, q2, q1, Poly.const(1)])
    conj = conjugate_logderiv(p, RatFun(q1) / 4)
    assert conj.coeffs[3].is_zero()
    assert normal_form_q(p) == (conj.coeffs[2], conj.coeffs[1], conj.coeffs[0])


def test_quartic_d_has_zero_invariants():
    th3, th4 = theta_invariants(D**4)
    assert th3.is_zero() and th4.is_zero()


@given(params)
def test_ztilde_theta3_vanishes_and_q3_is_q2_prime(p):
    z = cat.ztilde(p)
    q2, q3, _ = normal_form_q(z)
    assert q3 == q2.derivative()
    assert theta_invariants(z)[0].is_zero()


@given(params)
def test_addition_preserves_theta3(p):
    assert theta_invariants(cat.z_x(p))[0].is_zero()


def test_self_adjoint_examples():
    assert is_self_adjoint(cat.ztilde(FIXED))
    assert is_self_adjoint(D**2)
    assert not is_self_adjoint(cat.gauss(GaussParams(rat(1, 3), rat(2, 7), rat(5, 11))))


@given(params)
def test_fuchs_relation_for_catalog(p):
    for op in (cat.ztilde(p), cat.l_op(p), cat.q_op(p), cat.r_op(p)):
        assert fuchs_defect(op) == 0
