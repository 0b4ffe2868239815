"""Frobenius series at regular singular points.

Local coordinates: ``u = x`` at 0, ``u = 1 - x`` at 1 and ``u = 1/x`` at
infinity.  A series with exponent ``rho`` is ``u^rho * sum c_n u^n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegenerateParams, NonGenericExponent, ResonanceObstruction
from .exact_algebra import Poly, Rat, RatFun, rat, rat_to_json
from .local_analysis import INF, shift_coeffs
from .ore import DiffOp, VarMap, change_var
from .params import Params

__all__ = [
    "Recurrence",
    "FrobSeries",
    "local_operator",
    "recurrence_at",
    "series",
    "verify_series",
    "series_ok",
    "residual_float",
    "riemann_liouville",
    "pochhammer_ratio",
    "polynomial_solution_L",
    "l_bands",
]

_N = Poly.x()


def local_operator(p: DiffOp, point) -> DiffOp:
    """Rewrite ``p`` in the local coordinate at ``point``."""
    if point == INF:
        return change_var(p, VarMap.reciprocal()).normalize()
    point = rat(point)
    if point == 0:
        return p.normalize()
    if point == 1:
        return change_var(p, VarMap.affine(-1, 1)).normalize()
    return change_var(p, VarMap.affine(1, point)).normalize()


@dataclass(frozen=True)
class Recurrence:
    """``r0(n) C_n = sum_i r_i(n) C_{n-i}`` with polynomial ``r_i``."""

    r0: Poly
    rs: tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.rs)

    def ratios(self) -> tuple[RatFun, ...]:
        """``p_i = r_i / r0`` as rational functions of ``n``."""
        return tuple(RatFun(r, self.r0) for r in self.rs)

    def step(self, n: int, prev: Sequence[Rat]) -> tuple[Rat, Rat]:
        """``(r0(n), rhs)`` where ``prev[-i]`` is ``C_{n-i}``."""
        rhs = rat(0)
        for i, r in enumerate(self.rs, start=1):
            if n - i < 0:
                continue
            c = prev[n - i]
            if c:
                rhs += r(n) * c
        return self.r0(n), rhs

    def to_json(self) -> dict:
        return {"r0": self.r0.to_json(), "rs": [r.to_json() for r in self.rs]}


@dataclass(frozen=True)
class FrobSeries:
    """``u^rho sum_{n<=N} coeffs[n] u^n`` at ``point``."""

    rho: Rat
    coeffs: tuple[Rat, ...]
    point: object = rat(0)
    free: tuple[int, ...] = field(default=())

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def to_json(self) -> dict:
        pt = self.point if self.point == INF else rat_to_json(self.point)
        return {
            "point": pt,
            "rho": rat_to_json(self.rho),
            "coeffs": [rat_to_json(c) for c in self.coeffs],
            "free_indices": list(self.free),
        }


def recurrence_at(p: DiffOp, point, rho) -> Recurrence:
    """Coefficient recurrence for a Frobenius series with exponent ``rho``."""
    rho = rat(rho)
    e = shift_coeffs(local_operator(p, point))
    dmin = min(e)
    dmax = max(e)
    r0 = e[dmin].shift(rho)
    rs = []
    for i in range(1, dmax - dmin + 1):
        ei = e.get(dmin + i)
        rs.append(-ei.shift(rho - i) if ei is not None else Poly())
    while rs and rs[-1].is_zero():
        rs.pop()
    return Recurrence(r0, tuple(rs))


def series(p: DiffOp, point, rho, N: int, init: Sequence = (1,)) -> FrobSeries:
    """Exact coefficients ``c_0..c_N``; resonant indices consume ``init`` in order."""
    rec = recurrence_at(p, point, rho)
    if rec.r0(0) != 0:
        raise NonGenericExponent(f"{rho} is not a local exponent at {point}")
    init = [rat(v) for v in init]
    if not init:
        raise ValueError("need at least the leading coefficient")
    coeffs = [init[0]]
    used = 1
    free = [0]
    for n in range(1, N + 1):
        r0n, rhs = rec.step(n, coeffs)
        if r0n == 0:
            if rhs != 0:
                raise ResonanceObstruction(f"logarithmic term forced at n={n}")
            if used >= len(init):
                raise ValueError(f"resonance at n={n} needs an initial value")
            coeffs.append(init[used])
            used += 1
            free.append(n)
        else:
            coeffs.append(rhs / r0n)
    return FrobSeries(rat(rho), tuple(coeffs), point if point == INF else rat(point), tuple(free))


def _residual(p: DiffOp, s: FrobSeries) -> dict[int, Rat]:
    e = shift_coeffs(local_operator(p, s.point))
    out: dict[int, Rat] = {}
    for n, c in enumerate(s.coeffs):
        if not c:
            continue
        for d, ed in e.items():
            v = ed(s.rho + n) * c
            if v:
                out[n + d] = out.get(n + d, rat(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def verify_series(p: DiffOp, s: FrobSeries) -> Rat | None:
    """Lowest ``u``-order with a nonzero residual, or ``None`` if ``p s == 0`` exactly."""
    res = _residual(p, s)
    if not res:
        return None
    return s.rho + min(res)


def series_ok(p: DiffOp, s: FrobSeries) -> bool:
    """True when the residual starts no earlier than the truncation allows."""
    e = shift_coeffs(local_operator(p, s.point))
    bound = s.rho + s.N + 1 + min(e)
    got = verify_series(p, s)
    return got is None or got >= bound


def residual_float(p: DiffOp, point, rho, coeffs: Sequence[float], orders: int) -> float:
    """Largest relative residual over the first ``orders`` local orders.

    Each residual coefficient is scaled by the sum of absolute values of
    the terms that contribute to it.
    """
    e = shift_coeffs(local_operator(p, point))
    dmin = min(e)
    rho = rat(rho)
    worst = 0.0
    for k in range(dmin, dmin + orders):
        total = 0.0
        scale = 0.0
        for d, ed in e.items():
            n = k - d
            if 0 <= n < len(coeffs):
                v = float(ed(rho + n)) * coeffs[n]
                total += v
                scale += abs(v)
        if scale:
            worst = max(worst, abs(total) / scale)
    return worst


# --- Riemann-Liouville transform ---------------------------------------------------


def pochhammer_ratio(a, b, n: int) -> Rat:
    """``(a)_n / (b)_n``."""
    a, b = rat(a), rat(b)
    out = rat(1)
    for k in range(n):
        out = out * (a + k) / (b + k)
    return out


def riemann_liouville(s: FrobSeries, mu) -> FrobSeries:
    """Image of a local series under the fractional integral of order ``mu``.

    At a finite point the base point is the lower limit and
    ``u^(rho+n) -> Gamma(1+rho+n)/Gamma(1+rho+mu+n) u^(rho+mu+n)``.  At
    infinity the integral runs over ``[x, oo)`` and
    ``x^-(rho+k) -> Gamma(rho+k-mu)/Gamma(rho+k) x^-(rho-mu+k)``.  The
    constant Gamma prefactor is dropped.
    """
    mu = rat(mu)
    if mu == 0:
        return s
    rho = s.rho
    if s.point == INF:
        if (rho - mu).denominator == 1 and rho - mu <= 0 or rho.denominator == 1 and rho <= 0:
            raise NonGenericExponent("Gamma pole in the transformed series")
        coeffs = tuple(c * pochhammer_ratio(rho - mu, rho, k) for k, c in enumerate(s.coeffs))
        return FrobSeries(rho - mu, coeffs, INF)
    if rho.denominator == 1 or mu.denominator == 1:
        raise NonGenericExponent("exponent and order must be non-integral")
    coeffs = tuple(c * pochhammer_ratio(1 + rho, 1 + rho + mu, n) for n, c in enumerate(s.coeffs))
    return FrobSeries(rho + mu, coeffs, s.point)


# --- polynomial solutions of L(A) ----------------------------------------------------


def l_bands(p: Params, k: int) -> tuple[Rat, Rat, Rat]:
    """``(p_k, q_{k-1}, r_{k-2})`` with ``L x^k = p_k x^k + q_{k-1} x^{k-1} + r_{k-2} x^{k-2}``."""
    A0, A1, A2, A3 = p.A
    alpha = (A1**2 - A0**2 - A2**2 - A3**2 + 5) / 2
    pk = ((k + 1) ** 2 - A2**2) * ((k + 1) ** 2 - A3**2)
    qk = -k * (2 * k + 1) * (k * k + k - 2 + alpha)
    rk = k * (k - 1) * (k * k - A0**2)
    return pk, qk, rk


def polynomial_solution_L(p: Params) -> FrobSeries:
    """Degree-``m`` polynomial solution of ``L(A)`` when ``A2 = +-(m+1)``."""
    A2 = p.A2
    if A2.denominator != 1 or A2 == 0:
        raise DegenerateParams("A2 must be a nonzero integer")
    if p.A3.denominator == 1:
        raise DegenerateParams("A3 must not be an integer")
    m = int(abs(A2)) - 1
    a = [rat(0)] * (m + 1)
    a[m] = rat(1)
    for k in range(m - 1, -1, -1):
        # a_k p_k + a_{k+1} q_k + a_{k+2} r_k = 0
        pk = l_bands(p, k)[0]
        qk = l_bands(p, k + 1)[1]
        rk = l_bands(p, k + 2)[2] if k + 2 <= m else rat(0)
        rhs = a[k + 1] * qk + (a[k + 2] * rk if k + 2 <= m else 0)
        a[k] = -rhs / pk
    return FrobSeries(rat(0), tuple(a), rat(0))
