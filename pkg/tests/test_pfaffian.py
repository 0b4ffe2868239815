import pytest
from hypothesis import given, settings

from fuchsia import pfaffian as pf
from fuchsia.exact_algebra import MPoly, rat
from fuchsia.params import Params
from _strategies import params

P = Params(rat(1, 7), rat(2, 7), rat(3, 11), rat(4, 13))
POINT = (rat(1, 3), rat(2, 5), rat(3, 7))


def _b(p):
    a0, a1, a2, a3 = p.a
    return a0, (-a1 + a2 + a3) / 2, (a1 - a2 + a3) / 2, (a1 + a2 - a3) / 2


# --- entries derived from the differential system --------------------------------------------


@given(params)
def test_omega8_second_derivative_rows_follow_from_the_system(p):
    # solving the i-th b-form equation for F_ii gives row F_i of M_i
    a0, *bs = _b(p)
    w = pf.build_omega8(p.a)
    t = POINT
    col = {(0, 1): 4, (0, 2): 5, (1, 2): 6}
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        ti, tj, tk = t[i], t[j], t[k]
        T = ti * ti - 1
        want = [rat(0)] * 8
        want[0] = bs[i] / T
        want[1 + i] = a0 * ti / T
        want[col[tuple(sorted((i, j)))]] = (tk - ti * tj) / T
        want[col[tuple(sorted((i, k)))]] = (tj - tk * ti) / T
        want[col[tuple(sorted((j, k)))]] = -(ti - tj * tk) / T
        assert w.evaluate(i, t)[1 + i] == want


def test_omega8_first_row_is_the_frame():
    w = pf.build_omega8(P.a)
    for i in range(3):
        row = w.evaluate(i, POINT)[0]
        assert row == [rat(1) if c == 1 + i else rat(0) for c in range(8)]


def test_omega8_displayed_entries():
    a0, b1, b2, b3 = _b(P)
    w = pf.build_omega8(P.a)
    t1 = POINT[0]
    M1 = w.evaluate(0, POINT)
    assert M1[0][1] == 1
    assert M1[1][0] == b1 / (t1 * t1 - 1)


def test_sigma_relations():
    t1, t2, t3 = MPoly.gens()
    b = (rat(1, 3), rat(2, 5), rat(3, 7))
    args = (t1, t2, t3, *b, rat(1, 11))
    polys = pf.omega8_polys()
    assert polys["p163"](*args) == pf.sigma23(polys["p154"])(*args)
    m182 = polys["m182"]
    assert m182(*args) == pf.sigma23(m182)(*args)


@given(params)
def test_omega6_rows_follow_from_the_restricted_system(p):
    a0, a1, a2, a3 = p.a
    w = pf.build_omega6(p.a)
    t1, t2 = POINT[:2]
    u = t1 - t2
    T2 = 1 - t2 * t2
    N1 = w.evaluate(0, POINT)
    N2 = w.evaluate(1, POINT)
    assert N1[0] == [rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)]
    assert N2[0] == [rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)]
    assert N1[1] == [rat(0), rat(0), rat(0), 1 / u, rat(0), rat(0)]
    assert N2[1] == [rat(0), rat(0), rat(0), rat(0), 1 / u, rat(0)]
    want = [-a3 / T2, -a0 * t1 / T2, -a0 * t2 / T2, -(1 - t1 * t1) / (u * T2), -2 * (1 - t1 * t2) / (u * T2), rat(0)]
    assert N2[2] == want


def test_omega6_displayed_entries():
    a0, b1, b2, b3 = _b(P)
    w = pf.build_omega6(P.a)
    t1, t2 = POINT[:2]
    N1 = w.evaluate(0, POINT)
    N2 = w.evaluate(1, POINT)
    assert N1[3][0] == -b1 * (2 + a0) / (t1 * t1 - 1)
    assert N2[2][5] == 0
    u = t1 - t2
    n142 = -a0 * (t1 + t2) - a0 * a0 * t1 + (b1 - b3) * u
    # n142 is the numerator of N1[4][2] (1-based) over t1^2 - 1
    assert N1[3][1] * (t1 * t1 - 1) == n142


# --- integrability ---------------------------------------------------------------------------


@settings(max_examples=3)
@given(params)
def test_omega8_integrable(p):
    w = pf.build_omega8(p.a)
    assert pf.check_integrability(w)
    assert pf.d_omega_nonzero(w)
    assert not pf.check_integrability(pf.perturb(w, 0, 0, 1))


@settings(max_examples=3)
@given(params)
def test_omega6_integrable(p):
    w = pf.build_omega6(p.a)
    assert pf.check_integrability(w)
    assert pf.d_omega_nonzero(w)
    assert not pf.check_integrability(pf.perturb(w, 0, 0, 1))


@pytest.mark.parametrize("build", [pf.build_omega8, pf.build_omega6])
def test_printed_forms_fail(build):
    assert not pf.check_integrability(build(P.a, printed=True))


@pytest.mark.parametrize("build", [pf.build_omega8, pf.build_omega6])
def test_spot_check_agrees(build):
    w = build(P.a)
    assert pf.spot_check(w, points=5, seed=3)
    assert not pf.spot_check(pf.perturb(w, 1, 2, 3), points=5, seed=3)


def test_frame_determinant():
    assert pf.frame_determinant(rat(1), rat(1), rat(1)) == 0
    assert pf.frame_determinant(rat(0), rat(0), rat(0)) == -1
