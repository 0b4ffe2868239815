"""Order-two linear difference equations, their invariant and gauge factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NonLinearFactor, UnknownName
from .exact_algebra import Poly, Rat, RatFun, as_ratfun, rat, rat_to_json, rational_roots
from .frobenius import Recurrence
from .params import Params

__all__ = [
    "DiffEq2",
    "GaugeFactor",
    "invariant",
    "essentially_same",
    "gauge_factor",
    "from_recurrence",
    "displayed_recurrences",
    "recurrence_names",
    "conjugate",
]

n = Poly.x()


@dataclass(frozen=True)
class DiffEq2:
    """``C_n = p1(n) C_{n-1} + p2(n) C_{n-2}``."""

    p1: RatFun
    p2: RatFun

    def __post_init__(self):
        object.__setattr__(self, "p1", as_ratfun(self.p1))
        object.__setattr__(self, "p2", as_ratfun(self.p2))
        if self.p2.is_zero():
            raise ValueError("p2 must not vanish identically")

    def solve(self, init: Sequence, N: int) -> list[Rat]:
        """``C_0..C_N`` from ``(C_{-1}, C_0)``."""
        prev, cur = rat(init[0]), rat(init[1])
        out = [cur]
        for k in range(1, N + 1):
            prev, cur = cur, self.p1(k) * cur + self.p2(k) * prev
            out.append(cur)
        return out

    def residual(self, seq: Sequence, start: int = 2) -> list:
        """``C_n - p1 C_{n-1} - p2 C_{n-2}`` for ``n >= start`` (index = n)."""
        return [seq[k] - self.p1(k) * seq[k - 1] - self.p2(k) * seq[k - 2] for k in range(start, len(seq))]

    def to_json(self) -> dict:
        return {"p1": self.p1.to_json(), "p2": self.p2.to_json()}


def invariant(d: DiffEq2) -> RatFun:
    """``H(n) = p1(n) p1(n+1) / p2(n+1)``."""
    return d.p1 * d.p1.shift(1) / d.p2.shift(1)


def essentially_same(d1: DiffEq2, d2: DiffEq2) -> bool:
    """Equal invariants, i.e. the solution spaces differ by a gauge factor."""
    return invariant(d1) == invariant(d2)


def conjugate(d: DiffEq2, lam_ratio: RatFun) -> DiffEq2:
    """Equation for ``lambda(n) D_n`` where ``lambda(n)/lambda(n-1) = lam_ratio(n)``."""
    r = as_ratfun(lam_ratio)
    return DiffEq2(d.p1 * r, d.p2 * r * r.shift(-1))


@dataclass(frozen=True)
class GaugeFactor:
    """``lambda(n) = w^-(n+1) prod Gamma(n+v_j+1) / prod Gamma(n+u_i+1)``.

    Solutions map as ``C_n = lambda(n) D_n``; normalised to ``lambda(0) = 1``
    this is ``w^-n prod (v_j+1)_n / prod (u_i+1)_n``.
    """

    w: Rat
    ups: tuple[Rat, ...]
    downs: tuple[Rat, ...]

    def ratio(self) -> RatFun:
        """``lambda(n) / lambda(n-1)``."""
        num = Poly.const(1)
        den = Poly.const(self.w)
        for v in self.downs:
            num = num * (n + v)
        for u in self.ups:
            den = den * (n + u)
        return RatFun(num, den)

    def value(self, k: int) -> Rat:
        out = rat(1)
        for m in range(1, k + 1):
            t = rat(1) / self.w
            for v in self.downs:
                t *= m + v
            for u in self.ups:
                t /= m + u
            out *= t
        return out

    def apply(self, seq: Sequence) -> list:
        return [self.value(k) * c for k, c in enumerate(seq)]

    def to_json(self) -> dict:
        return {
            "w": rat_to_json(self.w),
            "ups": [rat_to_json(u) for u in self.ups],
            "downs": [rat_to_json(v) for v in self.downs],
        }


def _linear_factors(p: Poly) -> tuple[Rat, list[Rat]]:
    roots, residual = rational_roots(p)
    if residual.degree > 0:
        raise NonLinearFactor(f"irreducible factor {residual.to_str('n')} in the gauge ratio")
    shifts: list[Rat] = []
    for r, m in roots:
        shifts.extend([-r] * m)
    # the residual is monic, so the constant is the leading coefficient of p
    return p.lc, sorted(shifts)


def gauge_factor(src: DiffEq2, dst: DiffEq2) -> GaugeFactor:
    """Gauge turning solutions of ``dst`` into solutions of ``src``."""
    ratio = dst.p1 / src.p1
    wn, ups = _linear_factors(ratio.num)
    wd, downs = _linear_factors(ratio.den)
    # cancel common shifts, which RatFun reduction already guarantees
    return GaugeFactor(wn / wd, tuple(ups), tuple(downs))


def from_recurrence(rec: Recurrence) -> DiffEq2:
    """View a two-step coefficient recurrence as a ``DiffEq2``."""
    rs = list(rec.rs)
    if len(rs) > 2:
        raise ValueError(f"recurrence has {len(rs)} steps")
    while len(rs) < 2:
        rs.append(Poly())
    return DiffEq2(RatFun(rs[0], rec.r0), RatFun(rs[1], rec.r0))


# --- literal recurrences ----------------------------------------------------------


def _rc0(p: Params) -> DiffEq2:
    A0, A1, A2, A3 = p.A
    den = n * (n - 2 * A0) * (2 * n - 2 * A0 - 1) * (2 * n - 2 * A0 + 1)
    num1 = (2 * (n - A0) - 1) ** 2 * (2 * n * n - 4 * A0 * n + A0**2 + A1**2 - A2**2 - A3**2 + 1 - 2 * (n - A0))
    num2 = -4 * (n - A0 - A2 - 1) * (n - A0 + A2 - 1) * (n - A0 - A3 - 1) * (n - A0 + A3 - 1)
    return DiffEq2(RatFun(num1, den), RatFun(num2, den))


def _rcinf(p: Params) -> DiffEq2:
    A0, A1, A2, A3 = p.A
    den = 4 * n * (n + 2 * A2) * (n + A2 + A3) * (n + A2 - A3)
    num1 = (2 * (n + A2) - 1) ** 2 * (2 * n * n + 4 * A2 * n - A0**2 + A1**2 + A2**2 - A3**2 + 1 - 2 * (n + A2))
    num2 = -(2 * n + 2 * A2 - 1) * (2 * n + 2 * A2 - 3) * (n + A0 + A2 - 1) * (n - A0 + A2 - 1)
    return DiffEq2(RatFun(num1, den), RatFun(num2, den))


def _rc1(p: Params) -> DiffEq2:
    A0, A1, A2, A3 = p.A
    h = rat(1, 2)
    den = n * (n - 1) * (n + A0 - h) * (n - A0 - h)
    num1 = (n - 1) ** 2 * (2 * n * n - 4 * n - A0**2 + A1**2 - A2**2 - A3**2 + rat(5, 2))
    t = rat(3, 2)
    num2 = -(n + A2 - t) * (n - A2 - t) * (n + A3 - t) * (n - A3 - t)
    return DiffEq2(RatFun(num1, den), RatFun(num2, den))


def _rcq00(p: Params) -> DiffEq2:
    A0, A1, A2, A3 = p.A
    h = rat(1, 2)
    den = n * (n + A0 + A2) * (n - A0 + A2)
    num1 = (n + A2 - h) * (2 * n * n + 2 * (2 * A2 - 1) * n - A0**2 + A1**2 + A2**2 - A3**2 - 2 * A2 + 1)
    num2 = -(n + 2 * A2 - 1) * (n + A2 + A3 - 1) * (n + A2 - A3 - 1)
    return DiffEq2(RatFun(num1, den), RatFun(num2, den))


def _rcq0plus(p: Params) -> DiffEq2:
    A0, A1, A2, A3 = p.A
    h = rat(1, 2)
    den = n * (n + 2 * A0) * (n + A0 - A2)
    num1 = (n + A0 - h) * (2 * n * n + 2 * (2 * A0 - 1) * n + A0**2 + A1**2 - A2**2 - A3**2 - 2 * A0 + 1)
    num2 = -(n + A0 + A2 - 1) * (n + A0 + A3 - 1) * (n + A0 - A3 - 1)
    return DiffEq2(RatFun(num1, den), RatFun(num2, den))


_RECURRENCES: dict[str, Callable[[Params], DiffEq2]] = {
    "Rc0": _rc0,
    "Rc1": _rc1,
    "RcInf": _rcinf,
    "RcQ00": _rcq00,
    "RcQ0plus": _rcq0plus,
}


def recurrence_names() -> list[str]:
    return sorted(_RECURRENCES)


def displayed_recurrences(name: str, p: Params) -> DiffEq2:
    """Literal transcribed recurrence at instantiated parameters."""
    if name not in _RECURRENCES:
        raise UnknownName(f"unknown recurrence {name!r}; choose from {', '.join(recurrence_names())}")
    return _RECURRENCES[name](p)
