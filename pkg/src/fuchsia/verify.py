"""Registry of named verification checks.

A check runs over seeded parameter draws and returns one case record per
draw or sub-case.  It passes iff every case passes and nothing raised.
Reports are plain JSON-ready dicts so the CLI and the tests share them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import catalog as cat
from .difference import essentially_same, from_recurrence, invariant, displayed_recurrences
from .errors import DegenerateDenominator, DegenerateParams, FuchsiaError, PoleBeforeTermination, UnknownName
from .exact_algebra import MPoly, Poly, RatFun, rat, rat_to_json
from .families import MATCHES, family, family_names, hat_list, pfaff_df, pfaff_q
from .frobenius import (
    FrobSeries,
    pochhammer_ratio,
    polynomial_solution_L,
    recurrence_at,
    residual_float,
    riemann_liouville,
    series,
    series_ok,
    verify_series,
)
from .hypergeometric import (
    E1,
    E2,
    E12,
    E12x2,
    RC1_SYMMETRIES,
    HypParams,
    convolution_4f3_form,
    product_2f1_coeff,
    q0_coeffs,
    rc0_hat,
    rc1_hat,
    terminating_4f3_at1,
    transform_4f3,
    uv0,
    uv1,
    w_solutions,
    y_family,
)
from .local_analysis import INF, compare_scheme, expected_scheme, is_self_adjoint, theta_invariants
from .middle_convolution import mc, theta_shift
from .ore import DiffOp, VarMap, ad_conjugate, adjoint, change_var, equals_up_to_left_factor, op_mul, ore_left_factor_divide
from .params import GaussParams, Params, draw_params, random_rat
from . import pfaffian as pf
from . import systems as sy

__all__ = ["Context", "Check", "check_ids", "get_check", "run_check", "run_checks", "CRITERIA"]

DEFAULT_SEED = 7
_HALF = rat(1, 2)


@dataclass(frozen=True)
class Context:
    seed: int = DEFAULT_SEED
    draws: int | None = None  # None: the check's own default
    n: int | None = None
    tol: float | None = None


@dataclass(frozen=True)
class Check:
    id: str
    criterion: int
    doc: str
    fn: Callable[["_Run"], Iterable[dict]]
    draws: int = 5
    n: int = 0
    tol: float = 0.0  # 0 means exact


@dataclass
class _Run:
    check: Check
    ctx: Context
    cases: list = field(default_factory=list)

    @property
    def draws(self) -> int:
        return self.ctx.draws if self.ctx.draws is not None else self.check.draws

    @property
    def n(self) -> int:
        return self.ctx.n if self.ctx.n is not None else self.check.n

    @property
    def tol(self) -> float:
        return self.ctx.tol if self.ctx.tol is not None else self.check.tol

    def params(self) -> list[Params]:
        return list(draw_params(self.ctx.seed, self.draws))

    def rng(self) -> random.Random:
        # stream distinct per check, stable across runs
        return random.Random(f"{self.ctx.seed}:{self.check.id}")


_CHECKS: dict[str, Check] = {}


def _check(id: str, criterion: int, doc: str, draws: int = 5, n: int = 0, tol: float = 0.0):
    def deco(fn):
        _CHECKS[id] = Check(id, criterion, doc, fn, draws, n, tol)
        return fn

    return deco


def _case(label: str, ok: bool, **extra) -> dict:
    return {"case": label, "ok": bool(ok), **extra}


def _lab(p: Params) -> str:
    return "A=(" + ", ".join(rat_to_json(v) for v in p.A) + ")"


def _pj(p: Params) -> dict:
    return p.to_json()


def _eq(p, q) -> bool:
    return equals_up_to_left_factor(p, q) is not None


# --- 1. identity web --------------------------------------------------------------------------


def _web(id: str, doc: str, lhs: Callable, rhs: Callable):
    @_check(id, 1, doc)
    def run(r: _Run):
        for p in r.params():
            yield _case(_lab(p), _eq(lhs(p), rhs(p)), params=_pj(p))


_web("ad1-K-L", "Ad(x^-A0) K(A) = L(A)", lambda p: cat.ad1(cat.k_op(p), p), cat.l_op)
_web("mc-L-ztilde", "mc_{1/2} L(A) = Ztilde(A)", lambda p: mc(cat.l_op(p), _HALF), cat.ztilde)
_web("mc-ztilde-L", "mc_{-1/2} Ztilde(A) = L(A)", lambda p: mc(cat.ztilde(p), -_HALF), cat.l_op)
_web("mc-ztilde-Q", "mc_{-1/2-A2} Ztilde(A) = Q(A)", lambda p: mc(cat.ztilde(p), -_HALF - p.A2), cat.q_op)
_web("ad3-Q-R", "Ad(x^{A0+A2}(x-1)^{A1+A2}) Q(A) = R(A)", lambda p: cat.ad3(cat.q_op(p), p), cat.r_op)
_web("R-DF", "R(A) = S(a,b,c,g) at the forward parameter map", cat.r_op, lambda p: cat.df_op(p.to_df()))
_web("mc-L-Q", "mc_{-A2} L(A) = Q(A)", lambda p: mc(cat.l_op(p), -p.A2), cat.q_op)
_web(
    "composite-R-K",
    "Ad1^-1 mc_{A2} Ad3^-1 R(A) = K(A)",
    lambda p: cat.ad1(mc(cat.ad3(cat.r_op(p), p, True), p.A2), p, True),
    cat.k_op,
)
_web("zt-ztilde", "Ztilde is Z(a) conjugated and moved to x", cat.ztilde_from_zt, cat.ztilde)


@_check("symmetry-ztilde", 1, "x -> 1-x with A0 <-> A1 maps Ztilde(A) to itself")
def _sym_z(r: _Run):
    for p in r.params():
        A0, A1, A2, A3 = p.A
        moved = change_var(cat.ztilde(Params(A1, A0, A2, A3)), VarMap.affine(-1, 1))
        yield _case(_lab(p), _eq(moved, cat.ztilde(p)))


@_check("symmetry-Q", 1, "x -> 1/x with A0 <-> A3 maps Q(A) to Ad(x^{1+2A2}) Q(A)")
def _sym_q(r: _Run):
    for p in r.params():
        A0, A1, A2, A3 = p.A
        moved = change_var(cat.q_op(Params(A3, A1, A2, A0)), VarMap.reciprocal())
        target, _ = ad_conjugate(cat.q_op(p), [(rat(0), 1 + 2 * A2)])
        yield _case(_lab(p), _eq(moved, target))


@_check("df-parameter-roundtrip", 1, "A -> (a,b,c,g) -> A is the identity")
def _df_roundtrip(r: _Run):
    for p in r.params():
        yield _case(_lab(p), p.to_df().to_A() == p, df=p.to_df().to_json())


# --- 2. Riemann schemes -----------------------------------------------------------------------


def _scheme(name: str):
    @_check(f"scheme-{name}", 2, f"local exponents of {name} equal the tabulated scheme")
    def run(r: _Run):
        for p in r.params():
            if name == "DF":
                vals = p.to_df().as_dict()
            else:
                vals = p.as_dict()
            res = compare_scheme(cat.make(name, vals), expected_scheme(name), vals)
            yield _case(_lab(p), all(v["match"] for v in res.values()), points=res)


for _name in ("Z", "Zt", "Ztilde", "L", "Q", "R", "DF"):
    _scheme(_name)


# --- 3. self-adjointness ----------------------------------------------------------------------


@_check("self-adjoint-ztilde", 3, "adjoint(Ztilde) = Ztilde and theta3 vanishes")
def _selfadj(r: _Run):
    for p in r.params():
        z = cat.ztilde(p)
        th3 = theta_invariants(z)[0]
        yield _case(
            _lab(p),
            adjoint(z) == z and th3.is_zero() and is_self_adjoint(z),
            adjoint_equal=adjoint(z) == z,
            theta3_zero=th3.is_zero(),
        )


# --- 4. recurrences ---------------------------------------------------------------------------

_REC_SOURCES = {
    "Rc0": (cat.z_x, 0, lambda p: rat(0)),
    "RcInf": (cat.z_x, INF, lambda p: 1 - p.A0 + p.A2),
    "Rc1": (cat.z_x, 0, lambda p: p.A0 - _HALF),
    "RcQ00": (cat.q_op, 0, lambda p: rat(0)),
    "RcQ0plus": (cat.q_op, 0, lambda p: p.A0 - p.A2),
}


def _rec(name: str):
    build, point, rho = _REC_SOURCES[name]

    @_check(f"recurrence-{name}", 4, f"recurrence_at reproduces the displayed {name}")
    def run(r: _Run):
        for p in r.params():
            got = from_recurrence(recurrence_at(build(p), point, rho(p)))
            want = displayed_recurrences(name, p)
            yield _case(_lab(p), got == want, recurrence=got.to_json())


for _name in _REC_SOURCES:
    _rec(_name)


@_check("invariant-H0", 4, "H(A0) of Rc0 equals the closed form")
def _h0(r: _Run):
    for p in r.params():
        A0, A1, A2, A3 = p.A
        got = invariant(displayed_recurrences("Rc0", p))(A0)
        want = -((A0**2 - A1**2 + A2**2 + A3**2 - 1) ** 2) / (4 * A0**2 * A2**2 * A3**2)
        yield _case(_lab(p), got == want, value=rat_to_json(got))


@_check("invariant-RcInf-symmetry", 4, "the invariant of RcInf(A) equals that of Rc0(-A2,A1,A0,A3)")
def _hinf(r: _Run):
    for p in r.params():
        A0, A1, A2, A3 = p.A
        got = invariant(displayed_recurrences("RcInf", p))
        want = invariant(displayed_recurrences("Rc0", Params(-A2, A1, A0, A3)))
        yield _case(_lab(p), got == want)


# --- 5. difference-equation matching ----------------------------------------------------------


def _hat_eq(list_name: str, h: HypParams, kind: str):
    return rc0_hat(h) if kind == "rc0" else rc1_hat(h)


def _mutate(h: HypParams) -> HypParams:
    third = rat(1, 3)
    return h.shift(((0, 0, third, 0), (0, 0, third)))


for _rec_name, _list_name, _kind in MATCHES:

    def _make(rec_name=_rec_name, list_name=_list_name, kind=_kind):
        @_check(f"match-{rec_name}-{list_name}", 5, f"{rec_name} is essentially the equation of {list_name}")
        def run(r: _Run):
            for p in r.params():
                h = hat_list(list_name, p)
                yield _case(_lab(p), essentially_same(displayed_recurrences(rec_name, p), _hat_eq(list_name, h, kind)))

    _make()


@_check("rc1-symmetries", 5, "the three parameter symmetries leave the inhomogeneous family's equation unchanged")
def _rc1_sym(r: _Run):
    for p in r.params():
        for list_name in ("sol1_rc1", "sol3_rc1"):
            h = hat_list(list_name, p)
            base = rc1_hat(h)
            for key, sym in RC1_SYMMETRIES.items():
                g = rc1_hat(sym(h))
                yield _case(f"{_lab(p)} {list_name} {key}", g.p1 == base.p1 and g.p2 == base.p2)


_CONTROLS = {"Rc0": "sol1_rc0", "RcInf": "sol1_rcinf", "Rc1": "sol1_rc1", "RcQ00": "sol1_rcq"}


def _control(rec_name: str, list_name: str):
    kind = "rc1" if rec_name == "Rc1" else "rc0"

    @_check(f"match-control-{rec_name}", 5, f"a mutated {list_name} does not match {rec_name}")
    def run(r: _Run):
        for p in r.params():
            h = _mutate(hat_list(list_name, p))
            yield _case(_lab(p), not essentially_same(displayed_recurrences(rec_name, p), _hat_eq(list_name, h, kind)))


for _rec_name, _list_name in _CONTROLS.items():
    _control(_rec_name, _list_name)


# --- 6. closed-form solution families ---------------------------------------------------------


def _family_ops(p: Params) -> dict:
    return {"Z": cat.z_x(p), "Q": cat.q_op(p), "DF": cat.df_op(p.to_df())}


def _family(name: str):
    @_check(f"family-{name}", 6, f"expressions of {name} agree and solve the operator", draws=3, n=40)
    def run(r: _Run):
        f = family(name)
        for p in r.params():
            prm = p.to_df() if f.kind == "DF" else p
            op = _family_ops(p)[f.operator]
            first = None
            for key in f.exprs:
                s = f.series(prm, r.n, key)
                same = first is None or s.coeffs == first
                first = first or s.coeffs
                yield _case(f"{_lab(p)} {key}", same and series_ok(op, s), agrees=same)


for _name in family_names():
    _family(_name)


@_check("pfaff-Q", 6, "Pfaff transforms of the two Q families at 0 hold coefficientwise", draws=3, n=40)
def _pfaffq(r: _Run):
    for p in r.params():
        for which in ("0", "+"):
            ok, c = pfaff_q(p, r.n, which)
            yield _case(f"{_lab(p)} {which}", ok, constant=rat_to_json(c))


@_check("pfaff-DF", 6, "Pfaff transform of the DF family at 0 holds coefficientwise", draws=3, n=40)
def _pfaffdf(r: _Run):
    for p in r.params():
        yield _case(_lab(p), pfaff_df(p.to_df(), r.n))


# --- 7. 4F3 relation layer --------------------------------------------------------------------


def _balanced_terminating(rng: random.Random, m: int, body: Callable) -> tuple[HypParams, tuple]:
    """Draw an admissible balanced ``(-m, a1, a2, a3; b1, b2, b3)`` and evaluate ``body``.

    Draws where a relation denominator vanishes or a lower parameter hits a
    pole before termination are redrawn.
    """
    for _ in range(200):
        a1, a2, a3, b1, b2 = (random_rat(rng) for _ in range(5))
        b3 = 1 - m + a1 + a2 + a3 - b1 - b2
        h = HypParams.of(-m, a1, a2, a3, b1, b2, b3)
        if any(b.denominator == 1 for b in h.betas) or any(a.denominator == 1 for a in h.alphas[1:]):
            continue
        try:
            return h, body(h)
        except (DegenerateDenominator, PoleBeforeTermination):
            continue
    raise DegenerateParams(f"no admissible draw at n={m}")


def _sum(h: HypParams):
    """Direct summation; ``1`` once the terminating index reaches 0."""
    return terminating_4f3_at1(h)


def _layer(id: str, doc: str, body: Callable[[HypParams], tuple[bool, dict]], min_m: int = 1):
    @_check(id, 7, doc, draws=10, n=20)
    def run(r: _Run):
        rng = r.rng()
        for d in range(r.draws):
            for m in range(min_m, r.n + 1):
                h, (ok, extra) = _balanced_terminating(rng, m, body)
                if not ok:
                    yield _case(f"draw {d} n={m}", False, **extra)
                    return
            yield _case(f"draw {d} n={min_m}..{r.n}", True)


def _uv0_rel(h):
    U1, V1, U2, V2 = uv0(h)
    f = _sum(h)
    return f == U1 * _sum(h.shift(E1)) + V1 * _sum(h.shift(E12)) and f == U2 * _sum(h.shift(E2)) + V2 * _sum(h.shift(E12)), {}


def _three_term(h):
    q1, q2 = q0_coeffs(h)
    return _sum(h) == q1 * _sum(h.shift(E12)) + q2 * _sum(h.shift(E12x2)), {}


def _transform(h):
    pre, h2 = transform_4f3(h)
    return _sum(h) == pre * _sum(h2), {}


_layer("4f3-contiguous", "the two contiguous relations by direct summation", _uv0_rel)
_layer("4f3-three-term", "the three-term relation in steps of e12", _three_term, min_m=2)
_layer("4f3-transformation", "the terminating balanced transformation", _transform)


@_check("4f3-convolution", 7, "coefficients of 2F1 * 2F1 equal the 4F3 convolution form", draws=10, n=20)
def _conv(r: _Run):
    rng = r.rng()
    for d in range(r.draws):
        inner = GaussParams(*(random_rat(rng) for _ in range(3)))
        outer = GaussParams(*(random_rat(rng) for _ in range(3)))
        ok = all(product_2f1_coeff(inner, outer, k) == convolution_4f3_form(inner, outer, k) for k in range(r.n + 1))
        yield _case(f"draw {d}", ok)


# --- 8. non-terminating layer -----------------------------------------------------------------

_RC1_LISTS = ("sol1_rc1", "sol2_rc1", "sol3_rc1", "sol4_rc1")
# (list index k, i, j) of the gauge-weighted differences W_{k,ij}
W_PAIRS = ((1, 0, 1), (1, 0, 2), (1, 0, 3), (1, 5, 4), (2, 0, 3), (2, 5, 4), (3, 0, 1), (4, 6, 7))


def _rel(lhs: float, *terms: float) -> float:
    scale = abs(lhs) + sum(abs(t) for t in terms)
    return abs(lhs - sum(terms)) / scale if scale else 0.0


@_check("y-relations", 8, "each y_i satisfies the two inhomogeneous contiguous relations", draws=3, tol=1e-8)
def _yrel(r: _Run):
    for p in r.params():
        h = hat_list("sol1_rc1", p)
        U1, V1, U2, V2, c1, c2 = (float(v) for v in uv1(h))
        for i in range(8):
            y = y_family(h, i)
            y1, y2, y12 = y_family(h.shift(E1), i), y_family(h.shift(E2), i), y_family(h.shift(E12), i)
            e1 = _rel(y, U1 * y1, V1 * y12, c1)
            e2 = _rel(y, U2 * y2, V2 * y12, c2)
            yield _case(f"{_lab(p)} y{i}", max(e1, e2) < r.tol, error=max(e1, e2))


@_check("rc1-annihilates-differences", 8, "the homogeneous equation kills y_i - y_j along (n; alpha)", draws=3, n=15, tol=1e-8)
def _rc1_diff(r: _Run):
    for p in r.params():
        h = hat_list("sol1_rc1", p)
        eq = rc1_hat(h)
        for i, j in ((0, 1), (0, 4), (2, 7)):
            d = [y_family(h.at(k), i) - y_family(h.at(k), j) for k in range(r.n + 1)]
            worst = max(
                _rel(d[k], float(eq.p1(k)) * d[k - 1], float(eq.p2(k)) * d[k - 2]) for k in range(2, r.n + 1)
            )
            yield _case(f"{_lab(p)} D{i}{j}", worst < r.tol, error=worst)


W_INDEPENDENT = (((1, 0, 1), (1, 0, 2)), ((1, 0, 3), (1, 5, 4)), ((2, 0, 3), (2, 5, 4)))
_COMPOSITE_TOL = 1e-6


def _w_table(p: Params, n: int) -> dict:
    return {key: w_solutions(p.A, key[0], key[1], key[2], n, hat_list(_RC1_LISTS[key[0] - 1], p)) for key in W_PAIRS}


@_check("w-solves-Rc1", 8, "gauge-weighted differences W_{k,ij} solve Rc1(A) and give Z(A)-solutions", draws=3, n=15, tol=1e-8)
def _wsol(r: _Run):
    composite_tol = r.ctx.tol if r.ctx.tol is not None else _COMPOSITE_TOL
    for p in r.params():
        rc1 = displayed_recurrences("Rc1", p)
        z = cat.z_x(p)
        table = _w_table(p, r.n)
        for (k, i, j), w in table.items():
            worst = max(
                _rel(w[m], float(rc1.p1(m)) * w[m - 1], float(rc1.p2(m)) * w[m - 2]) for m in range(2, r.n + 1)
            )
            zres = residual_float(z, 0, p.A0 - _HALF, w, min(12, r.n))
            yield _case(
                f"{_lab(p)} W{k},{i}{j}",
                worst < r.tol and zres < composite_tol,
                recurrence_error=worst,
                z_residual=zres,
            )
        for u, v in W_INDEPENDENT:
            a, b = table[u], table[v]
            det = a[0] * b[1] - a[1] * b[0]
            scale = (abs(a[0]) + abs(a[1])) * (abs(b[0]) + abs(b[1]))
            yield _case(f"{_lab(p)} independent {u} {v}", abs(det) > 1e-6 * scale, relative_det=abs(det) / scale)


# --- 9. tensor products -----------------------------------------------------------------------


def _case1_draws(r: _Run, euler: bool) -> list[cat.Case1Params]:
    rng = r.rng()
    out = []
    while len(out) < r.draws:
        a2, b2, c2, b1, m = (random_rat(rng) for _ in range(5))
        if euler:
            b1 = c2 - b2
        try:
            cp = cat.Case1Params(a2, b2, c2, b1, m)
            cp.lam
        except DegenerateParams:
            continue
        if euler or not cp.euler_locus:
            out.append(cp)
    return out


def _cp_json(cp) -> dict:
    return {k: rat_to_json(getattr(cp, k)) for k in ("a2", "b2", "c2", "b1", "m")}


@_check("tensor-gauss-K", 9, "the gauged tensor product of the Gauss pair is K(A); L follows", draws=3)
def _tensor_k(r: _Run):
    for p in r.params():
        g1, g2 = cat.gauss_pair(p)
        k = cat.tensor_product_gauss(g1, g2)
        yield _case(_lab(p), _eq(k, cat.k_op(p)) and _eq(cat.ad1(k, p), cat.l_op(p)))


@_check("tensor-product-series", 9, "the product of the two Gauss series solves K(A) to order N-4", draws=3, n=30)
def _tensor_series(r: _Run):
    for p in r.params():
        g1, g2 = cat.gauss_pair(p)
        s = FrobSeries(rat(0), tuple(cat.gauss_product_series(g1, g2, r.n)), rat(0))
        k = cat.tensor_product_gauss(g1, g2)
        res = verify_series(k, s)
        ok = series_ok(k, s) and series_ok(cat.k_op(p), s) and (res is None or res >= r.n - 4)
        yield _case(_lab(p), ok, first_residual_order=None if res is None else rat_to_json(res))


@_check("tensor-M6-Y-M5", 9, "M6 = Y o M5 with zero remainder", draws=3)
def _m6(r: _Run):
    for cp in _case1_draws(r, False):
        _, rem = ore_left_factor_divide(cat.m6_op(cp), cat.y_op(cp))
        m5 = cat.m5_op(cp)
        lead = _eq(DiffOp([m5.coeffs[5]]), DiffOp([RatFun(cat.u5_display(cp))]))
        yield _case(str(_cp_json(cp)), rem.is_zero() and m5.order == 5 and lead, params=_cp_json(cp))


@_check("tensor-M5-split", 9, "on b1 = c2 - b2, M5 = [1] o [4] up to a left factor", draws=3)
def _m5(r: _Run):
    for cp in _case1_draws(r, True):
        q, rem = ore_left_factor_divide(cat.m5_op(cp), cat.m5_split_left(cp.m))
        ok = rem.is_zero() and _eq(q, cat.m4_case1(cp.a2, cp.b2, cp.c2, cp.m))
        yield _case(str(_cp_json(cp)), ok, params=_cp_json(cp))


@_check("tensor-K13", 9, "K_{S1,S2} at A2 = 0 equals [1] o [3]", draws=3)
def _k13(r: _Run):
    direction = RatFun(Poly.const(1), Poly([0, -1, 1]))
    for p in r.params():
        p0 = p.replace(A2=rat(0))
        s1, _ = cat.gauss_pair_s(p0)
        disp = cat.k_s1s2_display(p0)
        limit = cat.tensor_product_limit(s1, direction)
        rhs = op_mul(cat.k13_one(), cat.k13_three(p0))
        yield _case(_lab(p0), _eq(disp, rhs) and _eq(limit, rhs))


@_check("tensor-KS1S2-display", 9, "the displayed K_{S1,S2} is the product operator of the pair", draws=3)
def _ks1s2(r: _Run):
    for p in r.params():
        s1, s2 = cat.gauss_pair_s(p)
        yield _case(_lab(p), _eq(cat.tensor_product(s1, s2), cat.k_s1s2_display(p)))


@_check("tensor-case2-ML4", 9, "second apparent-free case: mc_m L equals ML4 and ML4(1/2) = Ztilde", draws=3)
def _ml4(r: _Run):
    rng = r.rng()
    for p in r.params():
        m = random_rat(rng)
        b1, a2, b2, c = p.eps("-++-"), p.eps("----"), p.eps("--++"), 1 - p.A0
        l2 = cat.case2_l(b1, a2, b2, c)
        target = cat.ml4(b1, a2, b2, c, m)
        ok = _eq(theta_shift(l2, m), target) and _eq(cat.ml4_a(p, m), target) and _eq(cat.ml4_a(p, _HALF), cat.ztilde(p))
        yield _case(f"{_lab(p)} m={m}", ok)


@_check("polynomial-solutions-L", 9, "L(A) has a polynomial solution of degree m when A2 = m + 1", draws=3)
def _poly(r: _Run):
    for p in r.params():
        for m in range(4):
            q = p.replace(A2=rat(m + 1))
            s = polynomial_solution_L(q)
            yield _case(f"{_lab(q)} m={m}", verify_series(cat.l_op(q), s) is None and len(s.coeffs) == m + 1)


# --- 10. Pfaffian systems ---------------------------------------------------------------------


def _pfaff(id: str, build: Callable, size: int, mutation: tuple[int, int, int]):
    @_check(id, 10, f"the {size}x{size} Pfaffian form is integrable with nonzero d(omega)")
    def run(r: _Run):
        for p in r.params():
            w = build(p.a)
            printed = build(p.a, printed=True)
            ok = w.n == size and pf.check_integrability(w) and pf.d_omega_nonzero(w)
            flipped = not pf.check_integrability(pf.perturb(w, *mutation))
            yield _case(
                _lab(p),
                ok and flipped,
                integrable=pf.check_integrability(w),
                d_omega_nonzero=pf.d_omega_nonzero(w),
                mutation_breaks=flipped,
                printed_integrable=pf.check_integrability(printed),
            )


_pfaff("pfaffian-z3", pf.build_omega8, 8, (0, 0, 1))
_pfaff("pfaffian-z2", pf.build_omega6, 6, (0, 0, 1))


@_check("pfaffian-spot", 10, "the rank-eight form is integrable at 20 random points", draws=2)
def _spot(r: _Run):
    for p in r.params():
        yield _case(_lab(p), pf.spot_check(pf.build_omega8(p.a), 20, seed=r.ctx.seed))


@_check("system-restrictions", 10, "b-form, t3 = 1 restriction and the diagonal restriction agree with the displays")
def _systems(r: _Run):
    for p in r.params():
        e1, e2, e3 = sy.z3_operators(p)
        b_ok = sy.b_form(p) == sy.b_form_display(p)
        p1, p2 = sy.z2_operators(p)
        t1, t2, _ = (MPoly.var(i) for i in range(3))
        combo = (e1.d(0) + e2.d(1)).scale((t1 - t2) * 2) - (e1 - e2).scale(2 + p.a[0])
        r1 = sy.restrict_coordinate(e3, 2, 1) == p1
        r2 = sy.restrict_coordinate(combo, 2, 1) == p2
        diag = _eq(sy.diagonal_restriction(p1), cat.diag2(p))
        yield _case(_lab(p), b_ok and r1 and r2 and diag, b_form=b_ok, t3_restriction=r1 and r2, diagonal=diag)


# --- 11. Riemann-Liouville --------------------------------------------------------------------


def _normalised(coeffs) -> tuple:
    c0 = coeffs[0]
    return tuple(c / c0 for c in coeffs)


@_check("rl-origin", 11, "I^{1/2} maps x^-A0 (2F1 * 2F1) solving L(A) to f(0,0) of Z(A)", draws=3, n=40)
def _rl0(r: _Run):
    for p in r.params():
        g1, g2 = cat.gauss_pair(p)
        u = FrobSeries(-p.A0, tuple(cat.gauss_product_series(g1, g2, r.n)), rat(0))
        t = riemann_liouville(u, _HALF)
        f00 = family("Z:f(0,0)").series(p, r.n, "z_0")
        direct = series(cat.ztilde(p), 0, _HALF - p.A0, r.n)
        ok = (
            series_ok(cat.l_op(p), u)
            and t.rho == _HALF - p.A0
            and _normalised(t.coeffs) == _normalised(f00.coeffs)
            and _normalised(t.coeffs) == _normalised(direct.coeffs)
        )
        yield _case(_lab(p), ok)


@_check("rl-infinity", 11, "at infinity coefficients scale by (rho-mu)_k/(rho)_k", draws=3, n=40)
def _rlinf(r: _Run):
    for p in r.params():
        rho = 1 - p.A2
        s = series(cat.l_op(p), INF, rho, r.n)
        t = riemann_liouville(s, _HALF)
        direct = series(cat.ztilde(p), INF, rho - _HALF, r.n)
        ratios = all(
            t.coeffs[k] == s.coeffs[k] * pochhammer_ratio(rho - _HALF, rho, k) for k in range(len(s.coeffs))
        )
        ok = ratios and series_ok(cat.ztilde(p), t) and _normalised(t.coeffs) == _normalised(direct.coeffs)
        yield _case(_lab(p), ok)


# --- registry API ----------------------------------------------------------------------------

CRITERIA = {
    1: "identity web",
    2: "Riemann schemes",
    3: "self-adjointness",
    4: "recurrence extraction",
    5: "difference-equation matching",
    6: "solution formulas",
    7: "4F3 relation layer",
    8: "non-terminating layer",
    9: "tensor products",
    10: "Pfaffian integrability",
    11: "Riemann-Liouville",
}


def check_ids(criterion: int | None = None) -> list[str]:
    return sorted(k for k, c in _CHECKS.items() if criterion is None or c.criterion == criterion)


def get_check(id: str) -> Check:
    if id not in _CHECKS:
        raise UnknownName(f"unknown check {id!r}")
    return _CHECKS[id]


def run_check(id: str, ctx: Context = Context()) -> dict:
    check = get_check(id)
    run = _Run(check, ctx)
    cases: list[dict] = []
    error = None
    try:
        for c in check.fn(run):
            cases.append(c)
    except (FuchsiaError, ArithmeticError, ValueError) as ex:
        error = f"{type(ex).__name__}: {ex}"
    ok = error is None and bool(cases) and all(c["ok"] for c in cases)
    out = {
        "id": id,
        "criterion": check.criterion,
        "doc": check.doc,
        "status": "pass" if ok else "fail",
        "draws": run.draws,
        "tolerance": "exact" if not run.tol else run.tol,
        "cases": cases,
    }
    if run.n:
        out["n"] = run.n
    if error:
        out["error"] = error
    return out


def run_checks(ids: Iterable[str], ctx: Context = Context()) -> list[dict]:
    return [run_check(i, ctx) for i in sorted(set(ids))]
