import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fuchsia.difference import (
    DiffEq2,
    conjugate,
    essentially_same,
    from_recurrence,
    gauge_factor,
    invariant,
    displayed_recurrences,
    recurrence_names,
)
from fuchsia.errors import NonLinearFactor, UnknownName
from fuchsia.exact_algebra import Poly, RatFun, rat
from fuchsia.frobenius import Recurrence
from fuchsia.params import Params
from _strategies import nonint_rationals, params

n = Poly.x()


def test_fibonacci_invariant_is_one():
    fib = DiffEq2(RatFun(1), RatFun(1))
    assert invariant(fib) == RatFun(1)
    assert fib.solve((0, 1), 10) == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]


def test_invariant_closed_form():
    # p1 = n, p2 = 1 gives H = n (n + 1)
    assert invariant(DiffEq2(RatFun(n), RatFun(1))) == RatFun(n * (n + 1))


def test_p2_must_not_vanish():
    with pytest.raises(ValueError):
        DiffEq2(RatFun(n), RatFun(0))


@given(params)
def test_solve_has_zero_residual(p):
    eq = displayed_recurrences("Rc0", p)
    seq = eq.solve((rat(3), rat(1)), 8)
    # full[k] is C_{k-1}, starting from the initial value C_{-1} = 3
    full = [rat(3), *seq]
    assert all(full[k] == eq.p1(k - 1) * full[k - 1] + eq.p2(k - 1) * full[k - 2] for k in range(2, len(full)))


@given(params, nonint_rationals, nonint_rationals, st.sampled_from([rat(2), rat(-3, 5), rat(1)]))
def test_invariant_is_gauge_invariant(p, u, v, w):
    eq = displayed_recurrences("Rc0", p)
    r = RatFun(n + u, Poly.const(w) * (n + v))
    assert invariant(conjugate(eq, r)) == invariant(eq)
    assert essentially_same(eq, conjugate(eq, r))


@given(params, nonint_rationals, nonint_rationals)
def test_gauge_factor_recovers_conjugation(p, u, v):
    assume(u != v)
    src = displayed_recurrences("Rc0", p)
    r = RatFun((n + u) * 3, n + v)
    dst = conjugate(src, r)
    g = gauge_factor(src, dst)
    assert g.ratio() == RatFun(1) / r
    # a dst-solution gauged by g solves src
    d = dst.solve((rat(1), rat(2)), 7)
    c = g.apply(d)
    assert all(x == 0 for x in src.residual(c, start=2))


def test_gauge_factor_identity():
    eq = displayed_recurrences("Rc0", Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13)))
    g = gauge_factor(eq, eq)
    assert g.w == 1 and g.ups == () and g.downs == ()
    assert g.value(5) == 1


def test_gauge_factor_rejects_irreducible_ratio():
    eq = DiffEq2(RatFun(n), RatFun(1))
    with pytest.raises(NonLinearFactor):
        gauge_factor(eq, DiffEq2(RatFun(n * (n * n + 1)), RatFun(1)))


def test_essentially_same_distinguishes():
    p = Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))
    assert essentially_same(displayed_recurrences("Rc0", p), displayed_recurrences("Rc0", p))
    assert not essentially_same(displayed_recurrences("Rc0", p), displayed_recurrences("Rc1", p))


@given(params)
def test_h0_closed_form(p):
    A0, A1, A2, A3 = p.A
    got = invariant(displayed_recurrences("Rc0", p))(A0)
    assert got == -((A0**2 - A1**2 + A2**2 + A3**2 - 1) ** 2) / (4 * A0**2 * A2**2 * A3**2)


@given(params)
def test_rcinf_invariant_symmetry(p):
    A0, A1, A2, A3 = p.A
    assert invariant(displayed_recurrences("RcInf", p)) == invariant(displayed_recurrences("Rc0", Params(-A2, A1, A0, A3)))


def test_unknown_recurrence():
    with pytest.raises(UnknownName):
        displayed_recurrences("Rc7", Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13)))


def test_from_recurrence_rejects_three_steps():
    rec = Recurrence(Poly.const(1), (Poly.const(1), Poly.const(1), Poly.const(1)))
    with pytest.raises(ValueError):
        from_recurrence(rec)
