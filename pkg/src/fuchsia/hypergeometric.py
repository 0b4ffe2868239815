"""Pochhammer symbols, terminating and balanced 4F3(1), contiguous relations.

Parameter arithmetic is duck-typed: a ``HypParams`` may hold rationals or
rational functions of ``n``, so the same relation code yields both exact
numbers and the symbolic difference equations in ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import gammaln, gammasgn

from .difference import DiffEq2, invariant
from .errors import (
    BalanceViolation,
    DegenerateDenominator,
    GammaPole,
    NonConvergent,
    PoleBeforeTermination,
    PoleInCoefficient,
)
from .exact_algebra import Poly, Rat, RatFun, rat
from .params import GaussParams

__all__ = [
    "HypParams",
    "E1",
    "E2",
    "E12",
    "pochhammer",
    "terminating_4f3_at1",
    "uv0",
    "q0_coeffs",
    "rc0_hat",
    "transform_4f3",
    "gauss_coeffs",
    "product_2f1_coeff",
    "product_2f1_coeffs",
    "convolution_4f3_form",
    "f4t3_at1",
    "Y_INDICES",
    "y_family",
    "uv1",
    "q1_coeffs",
    "rc1_hat",
    "RC1_SYMMETRIES",
    "W_GAUGES",
    "w_solutions",
]

_N = Poly.x()


def _is_zero(v) -> bool:
    if isinstance(v, (RatFun, Poly)):
        return v.is_zero()
    return v == 0


def _check(*dens) -> None:
    for d in dens:
        if _is_zero(d):
            raise DegenerateDenominator("a relation coefficient has a vanishing denominator")


@dataclass(frozen=True)
class HypParams:
    """``(alpha_0..alpha_3; beta_1..beta_3)`` of a 4F3 at unit argument."""

    alphas: tuple
    betas: tuple

    def __post_init__(self):
        if len(self.alphas) != 4 or len(self.betas) != 3:
            raise ValueError("need four upper and three lower parameters")
        conv = lambda v: v if isinstance(v, (RatFun, Poly)) else rat(v)  # noqa: E731
        object.__setattr__(self, "alphas", tuple(conv(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(conv(b) for b in self.betas))

    @classmethod
    def of(cls, a0, a1, a2, a3, b1, b2, b3) -> "HypParams":
        return cls((a0, a1, a2, a3), (b1, b2, b3))

    def __iter__(self):
        yield from self.alphas
        yield from self.betas

    @property
    def excess(self):
        """``sum(beta) - sum(alpha)``; equal to 1 when balanced."""
        return sum(self.betas, rat(0)) - sum(self.alphas, rat(0))

    def is_balanced(self) -> bool:
        return self.excess == 1

    def is_terminating(self) -> bool:
        a0 = self.alphas[0]
        return not isinstance(a0, (RatFun, Poly)) and a0.denominator == 1 and a0 <= 0

    def shift(self, vec: tuple) -> "HypParams":
        da, db = vec
        return HypParams(
            tuple(a + d for a, d in zip(self.alphas, da)),
            tuple(b + d for b, d in zip(self.betas, db)),
        )

    def at(self, n) -> "HypParams":
        """``(n; alpha) = alpha - n e12``; ``n`` may be an integer or a polynomial."""
        a0, a1, a2, a3 = self.alphas
        b1, b2, b3 = self.betas
        return HypParams((a0 - n, a1 - n, a2, a3), (b1 - n, b2 - n, b3))

    def symbolic(self) -> "HypParams":
        """``(n; alpha)`` with ``n`` an indeterminate."""
        return self.at(RatFun(_N))

    def swap(self) -> "HypParams":
        """``alpha_2 <-> alpha_3`` and ``beta_1 <-> beta_2``."""
        a0, a1, a2, a3 = self.alphas
        b1, b2, b3 = self.betas
        return HypParams((a0, a1, a3, a2), (b2, b1, b3))

    def swap01(self) -> "HypParams":
        """``alpha_0 <-> alpha_1`` and ``beta_1 <-> beta_2``."""
        a0, a1, a2, a3 = self.alphas
        b1, b2, b3 = self.betas
        return HypParams((a1, a0, a2, a3), (b2, b1, b3))

    def as_floats(self) -> tuple[list[float], list[float]]:
        return [float(a) for a in self.alphas], [float(b) for b in self.betas]


E1 = ((1, 0, 0, 0), (1, 0, 0))
E2 = ((0, 1, 0, 0), (0, 1, 0))
E12 = ((1, 1, 0, 0), (1, 1, 0))
E12x2 = ((2, 2, 0, 0), (2, 2, 0))


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n``; the empty product is 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = rat(1) if not isinstance(a, (RatFun, Poly)) else RatFun(1)
    for k in range(n):
        out = out * (a + k)
    return out


# --- terminating sums -------------------------------------------------------------------


def _terminating_sum(uppers: Sequence[Rat], lowers: Sequence[Rat], terms: int, reverse: bool = False) -> Rat:
    vals = []
    t = rat(1)
    for k in range(terms):
        vals.append(t)
        num = rat(1)
        den = rat(k + 1)
        for a in uppers:
            num *= a + k
        for b in lowers:
            den *= b + k
        if num == 0:
            break
        t = t * num / den
    if reverse:
        vals.reverse()
    return sum(vals, rat(0))


def terminating_4f3_at1(h: HypParams, reverse: bool = False) -> Rat:
    """Exact finite sum of a terminating 4F3 at 1 (``alpha_0`` in ``0, -1, -2, ...``)."""
    if not h.is_terminating():
        raise ValueError("alpha_0 must be a nonpositive integer")
    m = int(-h.alphas[0])
    for b in h.betas:
        if b.denominator == 1 and h.alphas[0] + 1 <= b <= 0:
            raise PoleBeforeTermination(f"lower parameter {b} vanishes before termination")
    return _terminating_sum(h.alphas, h.betas, m + 1, reverse)


# --- three-term relations for the terminating family -----------------------------------------


def uv0(h: HypParams):
    """Coefficients ``(U1, V1, U2, V2)`` of the two contiguous relations."""
    a0, a1, a2, a3 = h.alphas
    b1, b2, b3 = h.betas
    d1 = b1 * (b3 - a0 - 1)
    d2 = b2 * (b3 - a1 - 1)
    dd = b1 * b2
    _check(d1, d2, dd * (b3 - a0 - 1), dd * (b3 - a1 - 1))
    s = b1 + b2 - a2 - a3
    U1 = -(b1 - a1) * s / d1
    V1 = -a1 * (b2 - a2) * (b2 - a3) / (dd * (b3 - a0 - 1))
    U2 = -(b2 - a0) * s / d2
    V2 = -a0 * (b1 - a2) * (b1 - a3) / (dd * (b3 - a1 - 1))
    return U1, V1, U2, V2


def q0_coeffs(h: HypParams):
    """``(q1, q2)`` with ``F(a) = q1 F(a + e12) + q2 F(a + 2 e12)``."""
    U1, V1, _, _ = uv0(h)
    _, _, U2e, V2e = uv0(h.shift(E1))
    U1s, V1s, _, _ = uv0(h.shift(E12))
    _check(U1s)
    q1 = U1 * U2e + V1 + U1 * V2e / U1s
    q2 = -U1 * V1s * V2e / U1s
    return q1, q2


def rc0_hat(h: HypParams) -> DiffEq2:
    """Difference equation satisfied by ``D_n = 4F3((n; h); 1)``."""
    q1, q2 = q0_coeffs(h.symbolic())
    return DiffEq2(q1, q2)


def transform_4f3(h: HypParams):
    """``(prefactor, h')`` with ``4F3(h) = prefactor * 4F3(h')`` for terminating balanced ``h``.

    ``h = (-n, a, b, c; d, e, f)`` maps to ``(-n, a, d-b, d-c; d, a+1-n-e, a+1-n-f)``.
    """
    if not h.is_terminating():
        raise ValueError("transformation needs a terminating series")
    if not h.is_balanced():
        raise BalanceViolation(f"excess {h.excess} != 1")
    m, a, b, c = h.alphas
    d, e, f = h.betas
    n = int(-m)
    pre = pochhammer(e - a, n) * pochhammer(f - a, n) / (pochhammer(e, n) * pochhammer(f, n))
    return pre, HypParams((m, a, d - b, d - c), (d, a + 1 - n - e, a + 1 - n - f))


# --- products of Gauss series -------------------------------------------------------------


def gauss_coeffs(g: GaussParams, N: int) -> list[Rat]:
    """``[X^k] 2F1(a, b; c; X)`` for ``k = 0..N``."""
    out = [rat(1)]
    for k in range(N):
        den = (g.c + k) * (k + 1)
        if den == 0:
            raise PoleInCoefficient(f"lower parameter {g.c} hits a pole at k={k}")
        out.append(out[-1] * (g.a + k) * (g.b + k) / den)
    return out


def product_2f1_coeffs(g1: GaussParams, g2: GaussParams, N: int) -> list[Rat]:
    """``[X^n]`` of the product of two Gauss series, ``n = 0..N``."""
    s1 = gauss_coeffs(g1, N)
    s2 = gauss_coeffs(g2, N)
    return [sum((s1[k] * s2[n - k] for k in range(n + 1)), rat(0)) for n in range(N + 1)]


def product_2f1_coeff(g1: GaussParams, g2: GaussParams, n: int) -> Rat:
    return product_2f1_coeffs(g1, g2, n)[n]


def convolution_4f3_form(inner: GaussParams, outer: GaussParams, n: int) -> Rat:
    """Right side of the product identity: ``(a)_n (b)_n / ((c)_n n!) * 4F3(...)``.

    ``inner = (alpha, beta; gamma)`` and ``outer = (a, b; c)``.
    """
    al, be, ga = inner.a, inner.b, inner.c
    a, b, c = outer.a, outer.b, outer.c
    pre = pochhammer(a, n) * pochhammer(b, n) / (pochhammer(c, n) * math.factorial(n))
    uppers = (rat(-n), 1 - c - n, al, be)
    lowers = (1 - a - n, 1 - b - n, ga)
    for lo in lowers:
        if lo.denominator == 1 and -n + 1 <= lo <= 0:
            raise PoleBeforeTermination(f"lower parameter {lo} vanishes before termination")
    return pre * _terminating_sum(uppers, lowers, n + 1)


# --- non-terminating values ---------------------------------------------------------------


def _nonpos_int(x: float) -> bool:
    return x <= 0 and abs(x - round(x)) < 1e-12


def f4t3_at1(uppers: Sequence, lowers: Sequence, base: int = 512, levels: int = 8, rtol: float = 1e-11):
    """``sum_k prod Gamma(a_i+k) / prod Gamma(b_j+k)`` with four upper and four lower parameters.

    Partial sums at ``base * 2^j`` terms are extrapolated to the limit with a
    Richardson table in powers of ``1/N``; returns ``(value, error_estimate)``.
    """
    ups = [float(a) for a in uppers]
    lows = [float(b) for b in lowers]
    excess = sum(lows) - sum(ups)
    if excess <= 1:
        raise NonConvergent(f"parameter excess {excess} <= 1; the series diverges at 1")
    total = base * 2 ** (levels - 1)
    k = np.arange(total, dtype=float)
    logt = np.zeros(total)
    sign = np.ones(total)
    alive = np.ones(total, dtype=bool)
    for a in ups:
        if _nonpos_int(a):
            raise GammaPole(f"upper parameter {a} is a Gamma pole")
        logt += gammaln(a + k)
        sign *= gammasgn(a + k)
    for b in lows:
        if b <= 0 and abs(b - round(b)) < 1e-12:
            # reciprocal Gamma vanishes while b + k <= 0
            alive &= (b + k) > 0.5
            arg = np.where(alive, b + k, 1.0)
        else:
            arg = b + k
        logt -= gammaln(arg)
        sign *= gammasgn(arg)
    terms = np.where(alive, sign * np.exp(logt), 0.0)
    if not np.all(np.isfinite(terms)):
        raise NonConvergent("term overflow")
    partial = [math.fsum(terms[: base * 2**j]) for j in range(levels)]
    table = [partial]
    for j in range(1, levels):
        prev = table[-1]
        f = 2.0**j
        table.append([(f * prev[i + 1] - prev[i]) / (f - 1) for i in range(len(prev) - 1)])
    value = table[-1][0]
    err = abs(table[-1][0] - table[-2][-1])
    if not math.isfinite(value) or err > rtol * max(abs(value), 1e-300) * 1e3:
        raise NonConvergent(f"extrapolation did not settle (estimate {err:.3e})")
    return value, err


Y_INDICES = tuple(range(8))


def _y_params(h: HypParams, i: int) -> tuple[list, list, float]:
    a = list(h.alphas)
    b = list(h.betas)
    if i == 0:
        return a, [rat(1), *b], 1.0
    if 1 <= i <= 3:
        bi = b[i - 1]
        return [x + 1 - bi for x in a], [2 - bi, *(x + 1 - bi for x in b)], 1.0
    if 4 <= i <= 7:
        ai = a[i - 4]
        return [ai, *(ai + 1 - x for x in b)], [ai + 1 - x for x in a], -1.0
    raise ValueError(f"y index {i} outside 0..7")


def y_family(h: HypParams, i: int) -> float:
    """``y_i(alpha)`` for balanced ``alpha``, in double precision."""
    if not h.is_balanced():
        raise BalanceViolation(f"excess {h.excess} != 1")
    ups, lows, sgn = _y_params(h, i)
    value, _ = f4t3_at1(ups, lows)
    return sgn * value


# --- the inhomogeneous family ---------------------------------------------------------------


def uv1(h: HypParams):
    """``(U1, V1, U2, V2, c1, c2)`` of the inhomogeneous contiguous relations."""
    a0, a1, a2, a3 = h.alphas
    b1, b2, b3 = h.betas
    d1 = a0 * (b3 - a0 - 1)
    d2 = a1 * (b3 - a1 - 1)
    _check(d1, d2)
    U1 = -(b1 - a1) * (b1 + b2 - a2 - a3) / d1
    V1 = -(b2 - a2) * (b2 - a3) / d1
    U2 = -(b2 - a0) * (b2 + b1 - a2 - a3) / d2
    V2 = -(b1 - a2) * (b1 - a3) / d2
    return U1, V1, U2, V2, 1 / d1, 1 / d2


def q1_coeffs(h: HypParams):
    """``(q1, q2, q0)`` of the inhomogeneous three-term equation."""
    a0, a1, a2, a3 = h.alphas
    b1, b2, b3 = h.betas
    U1, V1, _, _, _, _ = uv1(h)
    _, _, U2e, V2e, _, _ = uv1(h.shift(E1))
    U1s, V1s, _, _, _, _ = uv1(h.shift(E12))
    _check(U1s)
    q1 = U1 * U2e + V1 + U1 * V2e / U1s
    q2 = -U1 * V1s * V2e / U1s
    s = b1 + b2 - a2 - a3
    den = a0 * a1 * (b3 - a0 - 1) * (b3 - a1 - 1)
    _check(den, s + 2)
    q0 = (b1 - a2 + 1) * (b1 - a3 + 1) * s / (den * (s + 2)) + (a0 * a1 - b1 * s) / den
    return q1, q2, q0


def rc1_hat(h: HypParams) -> DiffEq2:
    """Homogeneous equation satisfied by differences ``y_i - y_j`` along ``(n; alpha)``."""
    q1, q2, _ = q1_coeffs(h.symbolic())
    return DiffEq2(q1, q2)


def _sym_swap(h: HypParams) -> HypParams:
    a0, a1, a2, a3 = h.alphas
    b1, b2, b3 = h.betas
    return HypParams((a1, a0, a3, a2), (b2, b1, b3))


def _sym_shift(h: HypParams) -> HypParams:
    d = 1 - h.betas[2]
    a0, a1, a2, a3 = h.alphas
    b1, b2, _ = h.betas
    return HypParams((a0 + d, a1 + d, a2 + d, a3 + d), (b1 + d, b2 + d, 1 + d))


def _sym_reflect(h: HypParams) -> HypParams:
    a0, a1, a2, a3 = h.alphas
    b1, b2, b3 = h.betas
    c = a0 + 1
    return HypParams((a0, c - b3, c - b1, c - b2), (c - a2, c - a3, c - a1))


# Parameter maps leaving the homogeneous equation of the inhomogeneous family unchanged.
RC1_SYMMETRIES = {"swap": _sym_swap, "shift": _sym_shift, "reflect": _sym_reflect}


# Gauge prefactors (as (ups, downs) of Pochhammer symbols) for the four parameter lists.
def _w_gauge(k: int, A):
    A0, _, A2, A3 = A
    h = rat(1, 2)
    if k == 1:
        return [h], []
    if k == 2:
        return [h, h - A2, h + A2], [h - A0, h + A0]
    if k == 3:
        return [h - A2, h + A2], [h]
    if k == 4:
        return [h - A2, h + A2, h - A3, h + A3], [h, h - A0, h + A0]
    raise ValueError(f"k must be 1..4, got {k}")


W_GAUGES = (1, 2, 3, 4)


def gauge_value(ups, downs, n: int) -> Rat:
    """``prod (u)_n / (n! prod (d)_n)``."""
    out = rat(1) / math.factorial(n)
    for u in ups:
        out *= pochhammer(u, n)
    for d in downs:
        out /= pochhammer(d, n)
    return out


def w_solutions(A, k: int, i: int, j: int, N: int, alphas: HypParams) -> list[float]:
    """Gauge-weighted ``y_i - y_j`` along ``(n; alpha)`` for ``n = 0..N``."""
    if i == j:
        raise ValueError("need i != j")
    ups, downs = _w_gauge(k, A)
    out = []
    for n in range(N + 1):
        hn = alphas.at(n)
        d = y_family(hn, i) - y_family(hn, j)
        out.append(float(gauge_value(ups, downs, n)) * d)
    return out


def h0_reduction_check(h: HypParams) -> bool:
    """The inhomogeneous invariant at ``alpha_0 = 0`` equals the terminating one."""
    a = HypParams((rat(0), *h.alphas[1:]), h.betas)
    return invariant(rc1_hat(a)) == invariant(rc0_hat(a))
