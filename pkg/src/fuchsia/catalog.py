"""Named operators with explicit polynomial coefficients.

Every explicit operator formula lives here behind ``make``.  Coefficient
lists are ordered by the power of ``D``: ``[c0, c1, ..., cd]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import DegenerateParams, DivisionDegenerate, MissingParam, UnknownName
from .exact_algebra import Poly, Rat, RatFun, as_ratfun, rat
from .middle_convolution import theta_shift
from .ore import DiffOp, VarMap, ad_conjugate, change_var, op_mul, ore_left_factor_divide
from .params import DFParams, GaussParams, Params

__all__ = [
    "make",
    "names",
    "signature",
    "z_t",
    "z_x",
    "ztilde",
    "k_op",
    "l_op",
    "q_op",
    "r_op",
    "df_op",
    "gauss",
    "diag2",
    "ad1",
    "ad3",
    "ztilde_from_zt",
    "gauss_pair",
    "gauss_s",
    "gauss_pair_s",
    "tensor_square",
    "tensor_product",
    "tensor_product_limit",
    "tensor_product_gauss",
    "apparent_quadratic",
    "gauss_product_series",
    "Case1Params",
    "case1_l",
    "m6_op",
    "y_op",
    "m5_op",
    "m6_display",
    "u5_display",
    "m5_split_left",
    "m4_case1",
    "case2_gauss",
    "case2_l",
    "ml4",
    "ml4_a",
    "k_s1s2_display",
    "k13_one",
    "k13_three",
    "register",
    "describe",
]

x = Poly.x()
_half = rat(1) / 2


def _op(*coeffs) -> DiffOp:
    return DiffOp.from_polys([Poly.const(c) if not isinstance(c, Poly) else c for c in coeffs])


# --- Zagier restriction and its symmetric form ---------------------------------


def z_t(p: Params) -> DiffOp:
    """The fourth-order restriction ``Z(a)`` in the variable ``t``."""
    a0, a1, a2, a3 = p.a
    t = x
    p0 = 2 * (t + 1) ** 2 * (t - 1) ** 3
    p1 = -4 * (t + 1) * (t - 1) ** 2 * ((2 + a0) + (a0 - 2) * t)
    p2 = 2 * (t - 1) * (
        (a0**2 - 2 * a1 + 6 * a0 + 2 + a2 + a3)
        + (3 * a0**2 + 4 * a0 - 4 + 2 * a1) * t
        + (a0**2 - 4 * a0 + 2 - a2 - a3) * t**2
    )
    p3 = (
        (-4 * a0**2 - 8 * a0 + 4 * a0 * a1 + 4 * a1 - (2 * a0 + 4) * (a2 + a3))
        + (-2 * a0**3 - 6 * a0**2 - 4 * a0 * a1 - 4 * a1 + 4 * (a2 + a3)) * t
        + 2 * a0 * (a0 + a2 + a3) * t**2
    )
    p4 = 2 * a2 * a3 * t + (a1 - a2 - a3) * (a0 + 2) ** 2 - 2 * a2 * a3
    return _op(p4, p3, p2, p1, p0)


def z_x(p: Params) -> DiffOp:
    """``Z(A)`` written in ``x = (1 - t)/2``."""
    A0, A1, A2, A3 = p.A
    p0 = x**3 * (x - 1) ** 2
    p1 = -2 * x**2 * (x - 1) * (2 * A0 * x - 2 * A0 - 5 * x + 3)
    p22 = 6 * A0**2 - A2**2 - A3**2 - 24 * A0 + 25
    p21 = -11 * A0**2 - A1**2 + A2**2 + A3**2 + 36 * A0 - rat(59) / 2
    p20 = (10 * A0 - 9) * (2 * A0 - 3) / 4
    p2 = x * (p22 * x**2 + p21 * x + p20)
    p32 = -(2 * A0 - 3) * (2 * A0**2 - A2**2 - A3**2 - 6 * A0 + 5)
    p31 = (A0 - 1) * (6 * A0**2 + 2 * A1**2 - 2 * A2**2 - 2 * A3**2 - 16 * A0 + 11)
    p30 = -((2 * A0 - 3) * (2 * A0 - 1) ** 2) / 4
    p3 = p32 * x**2 + p31 * x + p30
    p41 = (A0 - 1 + A3) * (A0 - 1 - A3) * (A0 - 1 + A2) * (A0 - 1 - A2)
    p40 = -((2 * A0 - 1) ** 2) * (A0**2 + A1**2 - A2**2 - A3**2 - 2 * A0 + 1) / 4
    p4 = p41 * x + p40
    return _op(p4, p3, p2, p1, p0)


def ztilde(p: Params) -> DiffOp:
    A0, A1, A2, A3 = p.A
    m1 = 4 * (x - 1) * x * (2 * x - 1)
    m2 = (
        4 * A0**2 * x
        - 4 * A0**2
        - 4 * A1**2 * x
        - 4 * A2**2 * x**2
        + 4 * A2**2 * x
        - 4 * A3**2 * x**2
        + 4 * A3**2 * x
        + 58 * x**2
        - 58 * x
        + 9
    ) / 4
    m3 = (2 * A0**2 - 2 * A1**2 - 4 * A2**2 * x + 2 * A2**2 - 4 * A3**2 * x + 2 * A3**2 + 10 * x - 5) / 2
    m4 = (A2 - _half) * (A2 + _half) * (A3 - _half) * (A3 + _half)
    return _op(m4, m3, m2, m1, x**2 * (x - 1) ** 2)


def ztilde_from_zt(p: Params) -> DiffOp:
    """Conjugate ``Z(a)`` by ``(t-1)^(1/2-A0)``, drop ``2(t-1)`` and set ``t = 1 - 2x``."""
    conj, _ = ad_conjugate(z_t(p), [(rat(1), _half - p.A0)])
    return change_var(conj, VarMap.affine(-2, 1)).normalize()


# --- tensor product of two Gauss equations and its addition ---------------------


def k_op(p: Params) -> DiffOp:
    A0, A1, A2, A3 = p.A
    k1 = (1 - x) * x**2 * (4 * A0 * x - 4 * A0 - 10 * x + 5)
    k2 = x * (
        6 * A0**2 * x**2
        - 11 * A0**2 * x
        + 5 * A0**2
        - 24 * A0 * x**2
        + 33 * A0 * x
        - 9 * A0
        - A1**2 * x
        - A2**2 * x**2
        + A2**2 * x
        - A3**2 * x**2
        + A3**2 * x
        + 25 * x**2
        - 25 * x
        + 4
    )
    k3 = (
        -8 * A0**3 * x**2
        + 12 * A0**3 * x
        - 4 * A0**3
        + 36 * A0**2 * x**2
        - 39 * A0**2 * x
        + 6 * A0**2
        + 4 * A0 * A1**2 * x
        + 4 * A0 * A2**2 * x**2
        - 4 * A0 * A2**2 * x
        + 4 * A0 * A3**2 * x**2
        - 4 * A0 * A3**2 * x
        - 56 * A0 * x**2
        + 42 * A0 * x
        - 2 * A0
        - 3 * A1**2 * x
        - 6 * A2**2 * x**2
        + 3 * A2**2 * x
        - 6 * A3**2 * x**2
        + 3 * A3**2 * x
        + 30 * x**2
        - 15 * x
    ) / 2
    k4 = (
        2 * A0**4 * x
        - 2 * A0**4
        - 8 * A0**3 * x
        + 5 * A0**3
        - 2 * A0**2 * A1**2
        - 2 * A0**2 * A2**2 * x
        + 2 * A0**2 * A2**2
        - 2 * A0**2 * A3**2 * x
        + 2 * A0**2 * A3**2
        + 12 * A0**2 * x
        - 4 * A0**2
        + A0 * A1**2
        + 4 * A0 * A2**2 * x
        - A0 * A2**2
        + 4 * A0 * A3**2 * x
        - A0 * A3**2
        - 8 * A0 * x
        + A0
        + 2 * A2**2 * A3**2 * x
        - 2 * A2**2 * x
        - 2 * A3**2 * x
        + 2 * x
    ) / 2
    return _op(k4, k3, k2, k1, x**3 * (x - 1) ** 2)


def l_op(p: Params) -> DiffOp:
    A0, A1, A2, A3 = p.A
    l1 = 5 * (x - 1) * x * (2 * x - 1)
    l2 = (
        A0**2 * x
        - A0**2
        - A1**2 * x
        - A2**2 * x**2
        + A2**2 * x
        - A3**2 * x**2
        + A3**2 * x
        + 25 * x**2
        - 25 * x
        + 4
    )
    l3 = -rat(3) / 2 * (-(A0**2) + A1**2 + 2 * A2**2 * x - A2**2 + 2 * A3**2 * x - A3**2 - 10 * x + 5)
    l4 = (A2 - 1) * (A2 + 1) * (A3 - 1) * (A3 + 1)
    return _op(l4, l3, l2, l1, x**2 * (x - 1) ** 2)


# --- third-order operators ----------------------------------------------------


def q_op(p: Params) -> DiffOp:
    A0, A1, A2, A3 = p.A
    q1 = (2 * A2 + 3) * (x - 1) * x * (2 * x - 1)
    q2 = (
        A0**2 * x
        - A0**2
        - A1**2 * x
        + 5 * A2**2 * x**2
        - 5 * A2**2 * x
        + A2**2
        + 12 * A2 * x**2
        - 12 * A2 * x
        + 2 * A2
        - A3**2 * x**2
        + A3**2 * x
        + 7 * x**2
        - 7 * x
        + 1
    )
    q3 = (
        (2 * A2 + 1)
        * (A0**2 - A1**2 + 2 * A2**2 * x - A2**2 + 4 * A2 * x - 2 * A2 - 2 * A3**2 * x + A3**2 + 2 * x - 1)
        / 2
    )
    return _op(q3, q2, q1, x**2 * (x - 1) ** 2)


def r_op(p: Params) -> DiffOp:
    A0, A1, A2, A3 = p.A
    r1 = (1 - x) * x * (3 * A0 * x - 3 * A0 + 3 * A1 * x + 2 * A2 * x - A2 - 6 * x + 3)
    r2 = (
        3 * A0**2 * x**2
        - 5 * A0**2 * x
        + 2 * A0**2
        + 6 * A0 * A1 * x**2
        - 6 * A0 * A1 * x
        + 4 * A0 * A2 * x**2
        - 6 * A0 * A2 * x
        + 2 * A0 * A2
        - 9 * A0 * x**2
        + 12 * A0 * x
        - 3 * A0
        + 3 * A1**2 * x**2
        - A1**2 * x
        + 4 * A1 * A2 * x**2
        - 2 * A1 * A2 * x
        - 9 * A1 * x**2
        + 6 * A1 * x
        + A2**2 * x**2
        - A2**2 * x
        - 6 * A2 * x**2
        + 6 * A2 * x
        - A2
        - A3**2 * x**2
        + A3**2 * x
        + 7 * x**2
        - 7 * x
        + 1
    )
    r3 = (
        -(2 * A0 * x - 2 * A0 + 2 * A1 * x - 2 * x + 1)
        * (A0 + A1 + A2 - A3 - 1)
        * (A0 + A1 + A2 + A3 - 1)
        / 2
    )
    return _op(r3, r2, r1, x**2 * (x - 1) ** 2)


def df_op(q: DFParams) -> DiffOp:
    """The Dotsenko-Fateev operator ``S(a, b, c, g)``."""
    a, b, c, g = q.a, q.b, q.c, q.g
    s1 = -(x - 1) * x * (3 * a * x + 3 * b * x + 6 * c * x + 2 * g * x - 3 * a - 3 * c - g)
    s2 = (
        (2 * a**2 + 4 * a * b + 12 * a * c + 3 * a * g + 2 * b**2 + 12 * b * c + 3 * b * g + 12 * c**2 + 8 * c * g + g**2)
        * x**2
        + (-4 * a**2 - 4 * a * b - 16 * a * c - 4 * a * g - 8 * b * c - 2 * b * g - 12 * c**2 - 8 * c * g - g**2) * x
        + (a + b + 6 * c + g) * x**2
        + (-2 * a - 6 * c - g) * x
        + (2 * a**2 + 4 * a * c + a * g + 2 * c**2 + c * g + a + c)
    )
    s3 = (
        -c
        * (2 * a + 2 + 2 * b + 2 * c + g)
        * (2 * a * x + 2 * b * x + 4 * c * x + 2 * g * x - 2 * a - 2 * c - g + 2 * x - 1)
    )
    return _op(s3, s2, s1, x**2 * (x - 1) ** 2)


def gauss(g: GaussParams) -> DiffOp:
    """``x(x-1) D^2 + ((a+b+1)x - c) D + ab``."""
    return _op(g.a * g.b, (g.a + g.b + 1) * x - g.c, x * (x - 1))


def diag2(p: Params) -> DiffOp:
    """Diagonal restriction ``(1 - t^2) D^2 + a0 t D + a3`` of the two-variable system."""
    a0, _, _, a3 = p.a
    return _op(a3, a0 * x, 1 - x**2)


# --- additions used in the identity web ----------------------------------------


def ad1(op: DiffOp, p: Params, inverse: bool = False) -> DiffOp:
    """``Ad(x^{-A0})`` (or its inverse)."""
    lam = p.A0 if inverse else -p.A0
    return ad_conjugate(op, [(rat(0), lam)])[0]


def ad3(op: DiffOp, p: Params, inverse: bool = False) -> DiffOp:
    """``Ad(x^{A0+A2} (x-1)^{A1+A2})`` (or its inverse)."""
    s = -1 if inverse else 1
    return ad_conjugate(op, [(rat(0), s * (p.A0 + p.A2)), (rat(1), s * (p.A1 + p.A2))])[0]


def gauss_pair(p: Params) -> tuple[GaussParams, GaussParams]:
    """The two Gauss equations whose tensor product is ``K(A)``."""
    c = 1 - p.A0
    return (
        GaussParams(p.eps("-+-+"), p.eps("-++-"), c),
        GaussParams(p.eps("----"), p.eps("--++"), c),
    )


# --- tensor products of second-order equations ------------------------------


def gauss_s(g: GaussParams) -> RatFun:
    """``S`` of the normal form ``z'' = S z`` of the Gauss equation."""
    p = RatFun(g.c - (g.a + g.b + 1) * x, x * (1 - x))
    q = RatFun(-g.a * g.b * Poly.const(1), x * (1 - x))
    return -q + p * p / 4 + p.derivative() / 2


def tensor_square(s: RatFun) -> DiffOp:
    """``K_S = D^3 - 4 S D - 2 S'``, annihilating squares of solutions of ``z'' = S z``."""
    return DiffOp([-2 * s.derivative(), -4 * s, 0, 1])


def tensor_product(s1: RatFun, s2: RatFun) -> DiffOp:
    """Operator annihilating ``z1 z2`` for ``z1'' = S1 z1`` and ``z2'' = S2 z2``."""
    s1, s2 = as_ratfun(s1), as_ratfun(s2)
    if s1 == s2:
        return tensor_square(s1)
    d1, d2 = s1.derivative(), s2.derivative()
    diff = s1 - s2
    f3 = -(d1 - d2) / diff
    f2 = -2 * (s1 + s2)
    f1 = -(s1 * d1 - s2 * d2 + 5 * (s1 * d2 - d1 * s2)) / diff
    f0 = -s1.derivative(2) - s2.derivative(2) + diff * diff + (d1 * d1 - d2 * d2) / diff
    return DiffOp([f0, f1, f2, f3, 1])


def tensor_product_limit(s: RatFun, t: RatFun) -> DiffOp:
    """Limit of ``K_{S + eps T, S}`` as ``eps -> 0``; equals ``(D - T'/T) o K_S``."""
    s, t = as_ratfun(s), as_ratfun(t)
    return op_mul(DiffOp([-t.derivative() / t, 1]), tensor_square(s))


def _gauss_gauge(g: GaussParams) -> list[tuple[Rat, Rat]]:
    """Factors of ``x^{-c/2} (x-1)^{(c-a-b-1)/2}``."""
    return [(rat(0), -g.c / 2), (rat(1), (g.c - g.a - g.b - 1) / 2)]


def _merge(*factor_lists) -> list[tuple[Rat, Rat]]:
    acc: dict[Rat, Rat] = {}
    for fl in factor_lists:
        for c, lam in fl:
            acc[c] = acc.get(c, rat(0)) + lam
    return sorted(acc.items())


def tensor_product_gauss(g1: GaussParams, g2: GaussParams) -> DiffOp:
    """``Ad(lambda1 lambda2) K_{S1,S2}``: annihilates products of Gauss solutions."""
    k = tensor_product(gauss_s(g1), gauss_s(g2))
    return ad_conjugate(k, _merge(_gauss_gauge(g1), _gauss_gauge(g2)))[0]


def apparent_quadratic(g1: GaussParams, g2: GaussParams) -> Poly:
    """Quadratic whose roots are the extra singular points of the tensor product."""
    a1, b1, c1 = g1.a, g1.b, g1.c
    a2, b2, c2 = g2.a, g2.b, g2.c
    q2 = (a1 + a2 - b1 - b2) * (a1 - a2 - b1 + b2)
    q1 = 2 * (2 * a1 * b1 - 2 * a2 * b2 + (1 - a1 - b1) * c1 - (1 - a2 - b2) * c2)
    q0 = (c1 - c2) * (c1 + c2 - 2)
    return Poly([q0, q1, q2])


def gauss_product_series(g1: GaussParams, g2: GaussParams, N: int) -> list[Rat]:
    """Coefficients of ``2F1(a1,b1;c1;x) 2F1(a2,b2;c2;x)`` up to ``x^N``."""

    def f(g):
        out = [rat(1)]
        for k in range(N):
            out.append(out[-1] * (g.a + k) * (g.b + k) / ((g.c + k) * (k + 1)))
        return out

    u, v = f(g1), f(g2)
    return [sum((u[i] * v[n - i] for i in range(n + 1)), rat(0)) for n in range(N + 1)]


# --- tensor product without apparent singularities, first case ------------------


@dataclass(frozen=True)
class Case1Params:
    """Free parameters ``(a2, b2, c2, b1, m)``; ``c1 = c2`` and ``a1`` is eliminated."""

    a2: Rat
    b2: Rat
    c2: Rat
    b1: Rat
    m: Rat = rat(0)

    def __post_init__(self):
        for name in ("a2", "b2", "c2", "b1", "m"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if 2 * self.b1 == self.c2:
            raise DegenerateParams("2 b1 = c2 leaves a1 undefined")

    @property
    def a1(self) -> Rat:
        a2, b2, c2, b1 = self.a2, self.b2, self.c2, self.b1
        return (2 * a2 * b2 - a2 * c2 + b1 * c2 - b2 * c2) / (2 * b1 - c2)

    def gauss(self) -> tuple[GaussParams, GaussParams]:
        return GaussParams(self.a1, self.b1, self.c2), GaussParams(self.a2, self.b2, self.c2)

    @property
    def euler_locus(self) -> bool:
        """``b1 = c2 - b2`` (hence ``a1 = c2 - a2``): both factors share ``S``."""
        return self.b1 + self.b2 == self.c2

    @property
    def lam(self) -> Rat | None:
        """``lambda``; ``None`` on the Euler locus where it is infinite."""
        d = (self.b1 - self.c2 + self.b2) * (self.b1 - self.c2 + self.a2)
        if d == 0:
            return None
        return -(2 * self.b1 - self.c2) / d


def case1_l(cp: Case1Params) -> DiffOp:
    """``Ad(x^{c-1}) K`` for the first apparent-free case.

    On the Euler locus ``S1 = S2`` and the order-four operator is the limit
    along the family, whose direction there is ``T = (x-1)^-2``.
    """
    g1, g2 = cp.gauss()
    if cp.euler_locus:
        k = tensor_product_limit(gauss_s(g1), RatFun(Poly.const(1), (x - 1) ** 2))
    else:
        k = tensor_product(gauss_s(g1), gauss_s(g2))
    gauge = _merge(_gauss_gauge(g1), _gauss_gauge(g2), [(rat(0), cp.c2 - 1)])
    return ad_conjugate(k, gauge)[0]


def m6_op(cp: Case1Params) -> DiffOp:
    """Theta shift ``theta -> theta - m`` of ``D^2 o L``, before any division."""
    return theta_shift(case1_l(cp), cp.m).normalize()


def y_op(cp: Case1Params) -> DiffOp:
    """``theta + 1 - m + x/(x + (m-1) lambda)``; the last term drops on the Euler locus."""
    c0 = RatFun(Poly.const(1 - cp.m))
    if cp.lam is not None:
        c0 = c0 + RatFun(x, x + (cp.m - 1) * cp.lam)
    return DiffOp([c0, RatFun(x)])


def m5_op(cp: Case1Params) -> DiffOp:
    """Right factor of ``M6 = Y o M5``; raises if the division leaves a remainder."""
    q, r = ore_left_factor_divide(m6_op(cp), y_op(cp))
    if not r.is_zero():
        raise DivisionDegenerate("M6 is not left-divisible by Y")
    return q.normalize()


def m6_display(cp: Case1Params) -> dict[str, Poly]:
    """Displayed coefficients ``cm6``, ``cm5`` and ``cm0`` of ``M6``."""
    a2, b2, c2, b1, m = cp.a2, cp.b2, cp.c2, cp.b1, cp.m
    e = 2 * b1 - c2
    cm6 = e**2 * x**3 * (x - 1) ** 3
    cm5 = (
        x**2
        * (x - 1) ** 2
        * e
        * (
            4 * x * b1**2
            - 8 * x * b1 * c2
            + 4 * x * a2 * b1
            + 44 * x * b1
            - 12 * x * b1 * m
            + 4 * x * b2 * b1
            + 4 * c2**2 * x
            + 4 * a2 * b2 * x
            - 4 * c2 * b2 * x
            - 4 * c2 * a2 * x
            - 22 * c2 * x
            + 6 * x * m * c2
            - 20 * b1
            + 6 * b1 * m
            + 10 * c2
            - 3 * m * c2
        )
    )
    cm0 = (
        (m - 1)
        * (m - 2)
        * (b1 + b2 - c2 + 1 - m)
        * (b1 + a2 - c2 + 1 - m)
        * (-2 * b1 * m + m * c2 + 2 * b1 - c2 - b1 * c2 + c2**2 + 2 * a2 * b1 - 2 * c2 * a2 + 2 * a2 * b2 - c2 * b2)
        * (-2 * b1 * m + m * c2 + 2 * b1 - c2 - b1 * c2 + c2**2 - c2 * a2 + 2 * b2 * b1 - 2 * c2 * b2 + 2 * a2 * b2)
    )
    return {"cm6": cm6, "cm5": cm5, "cm0": Poly.const(cm0)}


def u5_display(cp: Case1Params) -> Poly:
    """Displayed leading coefficient of ``M5`` (off the Euler locus)."""
    a2, b2, c2, b1, m = cp.a2, cp.b2, cp.c2, cp.b1, cp.m
    lam = cp.lam
    if lam is None:
        raise DegenerateParams("lambda is infinite on the Euler locus")
    e = 2 * b1 - c2
    return e**2 * x**2 * (x - 1) ** 3 * (b1 - c2 + b2) * (b1 - c2 + a2) * (x + (m - 1) * lam)


def m5_split_left(m: Rat) -> DiffOp:
    """``[1] = -x (x-1)^2 (x(x-1) D - (m-6) x - 2)`` on the Euler locus."""
    m = rat(m)
    pre = -x * (x - 1) ** 2
    return _op(pre * (-(m - 6) * x - 2), pre * x * (x - 1))


def m4_case1(a2, b2, c2, m) -> DiffOp:
    """``x^2 (x-1)^2 [4]``: right factor of ``M5`` on the Euler locus."""
    a2, b2, c2, m = rat(a2), rat(b2), rat(c2), rat(m)
    m3 = -x * (2 * x - 1) * (x - 1) * (2 * m - 5)
    m2 = (
        2 * c2 * b2 * x
        + 2 * a2 * b2 * x**2
        + 2 * c2 * a2 * x
        + 3
        + 25 * x**2
        - x**2 * b2**2
        - 24 * m * x**2
        - x**2 * a2**2
        + 6 * m**2 * x**2
        - 2 * c2 * x
        - 4 * a2 * b2 * x
        - c2**2
        + 2 * c2
        - 4 * m
        + m**2
        - 24 * x
        - 6 * m**2 * x
        + 24 * m * x
    )
    m1 = (-3 + 2 * m) * (
        -2 * m**2 * x
        + m**2
        - 3 * m
        + 6 * m * x
        - c2 * b2
        + x * a2**2
        - c2 * a2
        + 2
        - 2 * a2 * b2 * x
        + 2 * a2 * b2
        + c2
        + x * b2**2
        - 5 * x
    )
    m0 = -((-1 + m) ** 2) * (a2 - 1 + m - b2) * (a2 + 1 - m - b2)
    return _op(m0, m1, m2, m3, x**2 * (x - 1) ** 2)


# --- second case: the middle convolution ML4(m) ----------------------------------


def case2_gauss(b1, a2, b2, c) -> tuple[GaussParams, GaussParams]:
    """``c1 = c2 = c`` and ``a1 = -b1 + 2c - a2 - b2``."""
    b1, a2, b2, c = rat(b1), rat(a2), rat(b2), rat(c)
    return GaussParams(-b1 + 2 * c - a2 - b2, b1, c), GaussParams(a2, b2, c)


def case2_l(b1, a2, b2, c) -> DiffOp:
    g1, g2 = case2_gauss(b1, a2, b2, c)
    k = tensor_product_gauss(g1, g2)
    return ad_conjugate(k, [(rat(0), rat(c) - 1)])[0]


def ml4(b1, a2, b2, c, m) -> DiffOp:
    """Displayed ``ML4(m)`` in Gauss parameters."""
    b1, a2, b2, c, m = (rat(v) for v in (b1, a2, b2, c, m))
    l3 = -x * (2 * x - 1) * (x - 1) * (2 * m - 5)
    l2 = (
        3
        + 2 * b1 * x * b2
        + 2 * b1 * x * a2
        + 25 * x**2
        - 24 * x
        + 2 * c
        - c**2
        - 4 * m
        + 2 * x * b1**2
        + 2 * c * a2 * x**2
        + 2 * c * b2 * x**2
        - 2 * a2 * b2 * x
        - 2 * c * x
        + 2 * c**2 * x
        - 2 * x**2 * b1**2
        - x**2 * a2**2
        - x**2 * b2**2
        - 2 * c**2 * x**2
        - 4 * c * b1 * x
        + 6 * m**2 * x**2
        - 24 * m * x**2
        - 6 * m**2 * x
        + 24 * m * x
        + m**2
        - 2 * x**2 * b1 * b2
        - 2 * x**2 * b1 * a2
        + 4 * x**2 * b1 * c
    )
    l1 = (-3 + 2 * m) * (
        m**2
        - 2 * m**2 * x
        - 3 * m
        + 6 * m * x
        + 2
        + 2 * c**2 * x
        + 2 * b1 * x * a2
        + 2 * b1 * x * b2
        + c
        - c**2
        + a2 * b2
        - 5 * x
        - b1**2
        + 2 * x * b1**2
        - 2 * c * a2 * x
        + 2 * b1 * c
        - 2 * c * b2 * x
        - b1 * a2
        - b1 * b2
        - 4 * c * b1 * x
        + x * b2**2
        + x * a2**2
    )
    l0 = (b1 - 1 + m + b2 - c) * (b1 + 1 - m + b2 - c) * (b1 + 1 - c - m + a2) * (b1 - 1 - c + m + a2)
    return _op(l0, l1, l2, l3, x**2 * (x - 1) ** 2)


def ml4_a(p: Params, m) -> DiffOp:
    """Displayed ``ML4(m)`` of ``L(A)`` in the ``A`` parameters."""
    A0, A1, A2, A3 = p.A
    k = rat(m) - _half
    l3 = -2 * x * (2 * x - 1) * (x - 1) * (-2 + k)
    l2 = (
        rat(29, 2) * x**2
        - rat(29, 2) * x
        - 3 * k
        + rat(9, 4)
        - 6 * x * k**2
        + 18 * x * k
        + 6 * x**2 * k**2
        - 18 * x**2 * k
        + k**2
        - A0**2
        + x * A0**2
        + x * A3**2
        - x * A1**2
        + x * A2**2
        - x**2 * A2**2
        - x**2 * A3**2
    )
    l1 = (
        -_half
        * (-1 + k)
        * (
            10 * x
            + 8 * k
            - 5
            + 8 * x * k**2
            - 16 * x * k
            - 4 * k**2
            + 2 * A0**2
            + 2 * A3**2
            + 2 * A2**2
            - 2 * A1**2
            - 4 * x * A3**2
            - 4 * x * A2**2
        )
    )
    l0 = (2 * A2 - 1 + 2 * k) * (-2 * A2 - 1 + 2 * k) * (-2 * A3 - 1 + 2 * k) * (2 * A3 - 1 + 2 * k) / 16
    return _op(l0, l1, l2, l3, x**2 * (x - 1) ** 2)


# --- the product K_{S1,S2} of the Gauss pair and its [13] split -------------------


def k_s1s2_display(p: Params) -> DiffOp:
    """Displayed ``K_{S1,S2}`` for the Gauss pair of ``K(A)``."""
    A0, A1, A2, A3 = p.A
    f3 = RatFun(2 * x - 1, x * (x - 1))
    f2 = RatFun(
        -(A2**2) * x**2 - A3**2 * x**2 + A0**2 * x - A1**2 * x + A2**2 * x + A3**2 * x - A0**2 + x**2 - x + 1,
        x**2 * (x - 1) ** 2,
    )
    f1 = RatFun(
        -(
            -2 * A2**2 * x**3
            - 2 * A3**2 * x**3
            + 5 * A0**2 * x**2
            - 5 * A1**2 * x**2
            + 3 * A2**2 * x**2
            + 3 * A3**2 * x**2
            - 9 * A0**2 * x
            + A1**2 * x
            - A2**2 * x
            - A3**2 * x
            + 2 * x**3
            + 4 * A0**2
            - 3 * x**2
            + 9 * x
            - 4
        ),
        2 * x**3 * (x - 1) ** 3,
    )
    f0 = RatFun(
        2 * A2**2 * A3**2 * x**4
        - 4 * A2**2 * A3**2 * x**3
        + 2 * A2**2 * A3**2 * x**2
        - 2 * A2**2 * x**4
        - 2 * A3**2 * x**4
        + 6 * A0**2 * x**3
        - 6 * A1**2 * x**3
        + 4 * A2**2 * x**3
        + 4 * A3**2 * x**3
        - 15 * A0**2 * x**2
        + 3 * A1**2 * x**2
        - 3 * A2**2 * x**2
        - 3 * A3**2 * x**2
        + 2 * x**4
        + 13 * A0**2 * x
        - A1**2 * x
        + A2**2 * x
        + A3**2 * x
        - 4 * x**3
        - 4 * A0**2
        + 15 * x**2
        - 13 * x
        + 4,
        2 * x**4 * (x - 1) ** 4,
    )
    return DiffOp([f0, f1, f2, f3, 1])


def k13_one() -> DiffOp:
    """``[1] = D + (2x-1)/(x(x-1))``."""
    return DiffOp([RatFun(2 * x - 1, x * (x - 1)), 1])


def k13_three(p: Params) -> DiffOp:
    """Third-order right factor of ``K_{S1,S2}`` when ``A2 = 0``."""
    A0, A1, _, A3 = p.A
    c1 = RatFun(-(A3**2) * x**2 + A0**2 * x - A1**2 * x + A3**2 * x - A0**2 + x**2 - x + 1, x**2 * (x - 1) ** 2)
    c0 = -RatFun(
        -2 * A3**2 * x**3
        + 3 * A0**2 * x**2
        - 3 * A1**2 * x**2
        + 3 * A3**2 * x**2
        - 5 * A0**2 * x
        + A1**2 * x
        - A3**2 * x
        + 2 * x**3
        + 2 * A0**2
        - 3 * x**2
        + 5 * x
        - 2,
        2 * x**3 * (x - 1) ** 3,
    )
    return DiffOp([c0, c1, 0, 1])


def gauss_pair_s(p: Params) -> tuple[RatFun, RatFun]:
    g1, g2 = gauss_pair(p)
    return gauss_s(g1), gauss_s(g2)


# --- registry -----------------------------------------------------------------

_A_KEYS = ("A0", "A1", "A2", "A3")
_DF_KEYS = ("a", "b", "c", "g")
_GAUSS_KEYS = ("a", "b", "c")


def _need(params: Mapping, keys) -> None:
    missing = [k for k in keys if k not in params]
    if missing:
        raise MissingParam(f"missing parameters: {', '.join(missing)}")


def _from_A(fn: Callable[[Params], DiffOp]):
    def build(params: Mapping) -> DiffOp:
        _need(params, _A_KEYS)
        return fn(Params.from_mapping(params))

    return build


def _build_df(params: Mapping) -> DiffOp:
    _need(params, _DF_KEYS)
    return df_op(DFParams.from_mapping(params))


def _build_gauss(params: Mapping) -> DiffOp:
    _need(params, _GAUSS_KEYS)
    return gauss(GaussParams(params["a"], params["b"], params["c"]))


_REGISTRY: dict[str, tuple[tuple[str, ...], Callable[[Mapping], DiffOp], str]] = {}


def register(name: str, keys: tuple[str, ...], builder, doc: str) -> None:
    _REGISTRY[name] = (keys, builder, doc)


register("Z", _A_KEYS, _from_A(z_x), "fourth-order restriction in x = (1-t)/2")
register("Zt", _A_KEYS, _from_A(z_t), "fourth-order restriction in t")
register("Ztilde", _A_KEYS, _from_A(ztilde), "symmetric form of Z, self-adjoint")
register("K", _A_KEYS, _from_A(k_op), "tensor product of two Gauss equations")
register("L", _A_KEYS, _from_A(l_op), "Ad(x^{-A0}) K")
register("Q", _A_KEYS, _from_A(q_op), "third-order middle convolution of Ztilde")
register("R", _A_KEYS, _from_A(r_op), "Ad(x^{A0+A2}(x-1)^{A1+A2}) Q")
register("DF", _DF_KEYS, _build_df, "Dotsenko-Fateev operator S(a,b,c,g)")
register("Gauss", _GAUSS_KEYS, _build_gauss, "Gauss hypergeometric operator E(a,b;c)")
register("Diag2", _A_KEYS, _from_A(diag2), "diagonal restriction (1-t^2)D^2 + a0 t D + a3")


_CASE1_KEYS = ("a2", "b2", "c2", "b1", "m")
_ML4_KEYS = ("b1", "a2", "b2", "c", "m")


def _keyed(keys: tuple[str, ...], fn):
    def build(params: Mapping) -> DiffOp:
        _need(params, keys)
        return fn(*(rat(params[k]) for k in keys))

    return build


def _case1(fn):
    return _keyed(_CASE1_KEYS, lambda *v: fn(Case1Params(*v)))


def _k13_three(A0, A1, A3) -> DiffOp:
    return k13_three(Params.of(A0, A1, 0, A3))


register("ML4", _ML4_KEYS, _keyed(_ML4_KEYS, ml4), "middle convolution of the second apparent-free tensor product")
register("ML4A", _A_KEYS + ("m",), _keyed(_A_KEYS + ("m",), lambda *v: ml4_a(Params.of(*v[:4]), v[4])), "ML4(m) of L(A)")
register("M6", _CASE1_KEYS, _case1(m6_op), "theta shift of D^2 o L in the first apparent-free case")
register("Y", _CASE1_KEYS, _case1(y_op), "first-order left factor of M6")
register("M5", _CASE1_KEYS, _case1(m5_op), "right factor of M6 = Y o M5")
register("M4case1", ("a2", "b2", "c2", "m"), _keyed(("a2", "b2", "c2", "m"), m4_case1), "x^2(x-1)^2 [4], right factor of M5 on b1 = c2 - b2")
register("M1case1", ("m",), _keyed(("m",), m5_split_left), "[1], left factor of M5 on b1 = c2 - b2")
register("KS1S2", _A_KEYS, _from_A(k_s1s2_display), "product operator of the Gauss pair of K(A) before the gauge")
register("K13one", (), lambda params: k13_one(), "[1], left factor of K_{S1,S2} at A2 = 0")
register("K13three", ("A0", "A1", "A3"), _keyed(("A0", "A1", "A3"), _k13_three), "[3], right factor of K_{S1,S2} at A2 = 0")


def names() -> list[str]:
    return sorted(_REGISTRY)


def signature(name: str) -> tuple[str, ...]:
    if name not in _REGISTRY:
        raise UnknownName(f"unknown operator {name!r}")
    return _REGISTRY[name][0]


def describe(name: str) -> str:
    signature(name)
    return _REGISTRY[name][2]


def make(name: str, params: Mapping) -> DiffOp:
    """Build the named operator at instantiated parameters, normalised."""
    if name not in _REGISTRY:
        raise UnknownName(f"unknown operator {name!r}")
    return _REGISTRY[name][1](params).normalize()
