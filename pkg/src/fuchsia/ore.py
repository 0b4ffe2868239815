"""Linear ordinary differential operators with rational coefficients.

An operator ``sum_j c_j(x) D^j`` is a ``DiffOp`` holding the list of
``RatFun`` coefficients.  Composition follows the Leibniz rule
``D f = f D + f'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import DivisionDegenerate, ShapeError
from .exact_algebra import Poly, RatFun, Rat, as_ratfun, poly_gcd, rat, rat_to_json

__all__ = [
    "DiffOp",
    "ThetaForm",
    "op_mul",
    "adjoint",
    "ad_conjugate",
    "ad_raw",
    "conjugate_logderiv",
    "change_var",
    "to_theta",
    "from_theta",
    "left_divide_by_d",
    "weyl_left_divide_by_d",
    "ore_left_factor_divide",
    "equals_up_to_left_factor",
    "D",
    "X",
]

_X = Poly.x()


class DiffOp:
    """``sum_j coeffs[j] * D**j`` with ``coeffs[-1] != 0``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_ratfun(a) for a in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs: list[RatFun] = c

    # construction --------------------------------------------------------
    @classmethod
    def from_polys(cls, polys: Sequence) -> "DiffOp":
        return cls([RatFun(p) if isinstance(p, Poly) else p for p in polys])

    @classmethod
    def d(cls) -> "DiffOp":
        return cls([0, 1])

    @classmethod
    def mul_by(cls, f) -> "DiffOp":
        return cls([f])

    # queries -------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> RatFun:
        return self.coeffs[-1]

    def coeff(self, j: int) -> RatFun:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else RatFun(0)

    def has_poly_coeffs(self) -> bool:
        return all(c.is_poly() for c in self.coeffs)

    def poly_coeffs(self) -> list[Poly]:
        if not self.has_poly_coeffs():
            raise ShapeError("operator has non-polynomial coefficients")
        return [c.num * c.den.lc ** -1 if c.den.lc != 1 else c.num for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"DiffOp({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.order, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            d = "" if j == 0 else ("D" if j == 1 else f"D^{j}")
            s = f"({c.to_str(var)})"
            parts.append(s + (f"*{d}" if d else ""))
        return " + ".join(parts)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp([self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def lmul(self, f) -> "DiffOp":
        """Left multiplication by a function: ``f * P``."""
        f = as_ratfun(f)
        return DiffOp([f * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return op_mul(self, other)
        return self.lmul(other)

    def __rmul__(self, other):
        return self.lmul(other)

    def __pow__(self, k: int) -> "DiffOp":
        result = DiffOp([1])
        for _ in range(k):
            result = op_mul(result, self)
        return result

    def apply(self, f: RatFun) -> RatFun:
        """Apply to a rational function."""
        f = as_ratfun(f)
        total = RatFun(0)
        g = f
        for j, c in enumerate(self.coeffs):
            if j:
                g = g.derivative()
            total = total + c * g
        return total

    # normalisation -------------------------------------------------------
    def normalize_with_factor(self) -> tuple["DiffOp", RatFun]:
        """Return ``(N, f)`` with ``self == f * N``.

        ``N`` has polynomial coefficients without a common polynomial
        factor, integral primitive content, and positive leading
        coefficient of its top coefficient.
        """
        if not self.coeffs:
            return self, RatFun(1)
        den = Poly.const(1)
        for c in self.coeffs:
            if c.den.degree > 0:
                den = den * (c.den // poly_gcd(den, c.den))
        polys = [c.num * (den // c.den) for c in self.coeffs]
        g = Poly()
        for p in polys:
            if not p.is_zero():
                g = p.monic() if g.is_zero() else poly_gcd(g, p)
                if g.degree == 0:
                    break
        if g.degree > 0:
            polys = [p // g for p in polys]
        else:
            g = Poly.const(1)
        from functools import reduce
        from math import gcd, lcm

        nonzero = [p for p in polys if not p.is_zero()]
        num = reduce(gcd, (int(a.numerator) for p in nonzero for a in p.coeffs))
        dd = reduce(lcm, (int(a.denominator) for p in nonzero for a in p.coeffs))
        content = rat(num) / dd
        if polys[-1].lc < 0:
            content = -content
        polys = [p / content for p in polys]
        factor = RatFun(g * content, den)
        return DiffOp([RatFun(p, Poly.const(1), reduced=True) for p in polys]), factor

    def normalize(self) -> "DiffOp":
        return self.normalize_with_factor()[0]

    def monic(self) -> "DiffOp":
        inv = self.lc.inverse()
        return DiffOp([inv * c for c in self.coeffs])

    # serialization -------------------------------------------------------
    def to_json(self) -> dict:
        den = Poly.const(1)
        for c in self.coeffs:
            if c.den.degree > 0:
                den = den * (c.den // poly_gcd(den, c.den))
        pairs = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            p = c.num * (den // c.den)
            pairs.append([j, p.to_json()])
        return {"order": self.order, "coeffs": pairs, "den": den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "DiffOp":
        den = Poly.from_json(data.get("den", ["1"]))
        order = int(data["order"])
        coeffs: list = [RatFun(0)] * (order + 1)
        for j, p in data["coeffs"]:
            coeffs[int(j)] = RatFun(Poly.from_json(p), den)
        return cls(coeffs)


D = DiffOp.d()
X = DiffOp([RatFun(_X)])


def op_mul(p: DiffOp, q: DiffOp) -> DiffOp:
    """Composition ``p o q`` in the Weyl algebra over Q(x)."""
    if p.is_zero() or q.is_zero():
        return DiffOp()
    n = p.order
    # derivatives of q's coefficients up to order n
    ders = []
    for b in q.coeffs:
        row = [b]
        for _ in range(n):
            row.append(row[-1].derivative())
        ders.append(row)
    out = [RatFun(0)] * (p.order + q.order + 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j, row in enumerate(ders):
            for k in range(i + 1):
                bk = row[k]
                if bk.is_zero():
                    continue
                out[i - k + j] = out[i - k + j] + a * bk * comb(i, k)
    return DiffOp(out)


def _d_power_times(j: int, c: RatFun) -> list[RatFun]:
    """Coefficients of ``D^j o c`` as an operator."""
    out = [RatFun(0)] * (j + 1)
    g = c
    for k in range(j + 1):
        if k:
            g = g.derivative()
        out[j - k] = g * comb(j, k)
    return out


def adjoint(p: DiffOp) -> DiffOp:
    """Formal adjoint ``sum_j (-D)^j o c_j``."""
    out = [RatFun(0)] * (p.order + 1)
    for j, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        sign = -1 if j % 2 else 1
        for i, t in enumerate(_d_power_times(j, c)):
            out[i] = out[i] + t * sign
    return DiffOp(out)


def ad_conjugate(p: DiffOp, factors: Sequence[tuple]) -> tuple[DiffOp, RatFun]:
    """Conjugate ``f o p o f^{-1}`` for ``f = prod (x - c_i)^{lam_i}``.

    ``factors`` is a sequence of ``(c_i, lam_i)``.  Returns the normalised
    operator and the common left factor removed by normalisation.
    """
    return ad_raw(p, factors).normalize_with_factor()


def ad_raw(p: DiffOp, factors: Sequence[tuple]) -> DiffOp:
    """Like ``ad_conjugate`` but without normalisation."""
    g = RatFun(0)
    for c, lam in factors:
        lam = rat(lam)
        if lam != 0:
            g = g + RatFun(Poly.const(lam), Poly([-rat(c), 1]))
    return conjugate_logderiv(p, g)


def conjugate_logderiv(p: DiffOp, h) -> DiffOp:
    """``f o p o f^{-1}`` where ``f'/f = h``; substitutes ``D -> D - h``."""
    shifted = DiffOp([-as_ratfun(h), 1])
    total = DiffOp()
    power = DiffOp([1])
    for j, c in enumerate(p.coeffs):
        if j:
            power = op_mul(power, shifted)
        if not c.is_zero():
            total = total + power.lmul(c)
    return total


@dataclass(frozen=True)
class VarMap:
    """Change of variable ``x_old = a*y + b`` or ``x_old = 1/y``."""

    kind: str
    a: Rat = rat(1)
    b: Rat = rat(0)

    @classmethod
    def affine(cls, a, b) -> "VarMap":
        a = rat(a)
        if a == 0:
            raise ValueError("degenerate affine map")
        return cls("affine", a, rat(b))

    @classmethod
    def reciprocal(cls) -> "VarMap":
        return cls("reciprocal")


def _compose_ratfun(f: RatFun, m: VarMap) -> RatFun:
    if m.kind == "affine":
        lin = Poly([m.b, m.a])
        return RatFun(f.num.compose(lin), f.den.compose(lin))
    dn, dd = f.num.degree, f.den.degree
    if f.num.is_zero():
        return f
    num = f.num.reverse()
    den = f.den.reverse()
    if dd > dn:
        num = num * Poly.monomial(dd - dn)
    elif dn > dd:
        den = den * Poly.monomial(dn - dd)
    return RatFun(num, den)


def change_var(p: DiffOp, m: VarMap) -> DiffOp:
    """Rewrite ``p`` in the new variable ``y`` (returned in the same symbol)."""
    coeffs = [_compose_ratfun(c, m) for c in p.coeffs]
    if m.kind == "affine":
        inv = 1 / m.a
        return DiffOp([c * inv**j for j, c in enumerate(coeffs)])
    # d/dx = -y^2 d/dy
    dx = DiffOp([0, RatFun(Poly([0, 0, -1]))])
    total = DiffOp()
    power = DiffOp([1])
    for j, c in enumerate(coeffs):
        if j:
            power = op_mul(power, dx)
        if not c.is_zero():
            total = total + power.lmul(c)
    return total


# ---------------------------------------------------------------------------
# theta forms
# ---------------------------------------------------------------------------


def falling(k: int) -> Poly:
    """``t (t-1) ... (t-k+1)`` as a polynomial in ``t``."""
    p = Poly.const(1)
    for i in range(k):
        p = p * Poly([-i, 1])
    return p


@dataclass
class ThetaForm:
    """``sum_k c[k](theta) D^k`` with ``theta = x D`` and ``k >= 0``."""

    c: dict[int, Poly] = field(default_factory=dict)

    def clean(self) -> "ThetaForm":
        return ThetaForm({k: v for k, v in self.c.items() if not v.is_zero()})

    def shift(self, s) -> "ThetaForm":
        """Substitute ``theta -> theta + s``."""
        return ThetaForm({k: v.shift(s) for k, v in self.c.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThetaForm):
            return NotImplemented
        return self.clean().c == other.clean().c


def to_theta(p: DiffOp) -> ThetaForm:
    """Rewrite ``p`` (polynomial coefficients, every ``x^i D^j`` with
    ``i <= j``) as ``sum_k c_k(theta) D^k``."""
    polys = p.poly_coeffs()
    out: dict[int, Poly] = {}
    for j, pj in enumerate(polys):
        for i, a in enumerate(pj.coeffs):
            if a == 0:
                continue
            if i > j:
                raise ShapeError(f"term x^{i} D^{j} has positive degree {i - j}")
            k = j - i
            out[k] = out.get(k, Poly()) + falling(i) * a
    return ThetaForm(out).clean()


def _stirling2_rows(m: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, m + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + k * (prev[k] if k < len(prev) else 0)
        rows.append(row)
    return rows


def from_theta(t: ThetaForm) -> DiffOp:
    """Inverse of ``to_theta``: ``theta^m = sum_i S(m,i) x^i D^i``."""
    deg = max((v.degree for v in t.c.values()), default=0)
    s2 = _stirling2_rows(max(deg, 0))
    top = max((k + v.degree for k, v in t.c.items() if not v.is_zero()), default=0)
    coeffs = [Poly() for _ in range(top + 1)]
    for k, v in t.c.items():
        for m, a in enumerate(v.coeffs):
            if a == 0:
                continue
            for i, s in enumerate(s2[m]):
                if s:
                    coeffs[i + k] = coeffs[i + k] + Poly.monomial(i, a * s)
    return DiffOp([RatFun(c) for c in coeffs])


def left_divide_by_d(t: ThetaForm) -> tuple[ThetaForm, int]:
    """Strip left factors of ``D`` visible in theta form (``c_0 == 0``).

    Uses ``sum_{k>=1} c_k(theta) D^k = D o sum_k c_k(theta-1) D^{k-1}``.
    Returns the quotient and the number of factors removed.
    """
    t = t.clean()
    count = 0
    while t.c and 0 not in t.c:
        t = ThetaForm({k - 1: v.shift(-1) for k, v in t.c.items()})
        count += 1
    return t, count


def weyl_left_divide_by_d(p: DiffOp) -> tuple[DiffOp, bool]:
    """Try to write ``p = D o q`` with polynomial coefficients.

    Returns ``(q, True)`` on success and ``(p, False)`` otherwise.
    """
    polys = p.poly_coeffs()
    d = len(polys) - 1
    if d < 1:
        return p, False
    r = [Poly() for _ in range(d)]
    r[d - 1] = polys[d]
    for j in range(d - 1, 0, -1):
        r[j - 1] = polys[j] - r[j].derivative()
    if polys[0] - r[0].derivative() != Poly():
        return p, False
    return DiffOp([RatFun(c) for c in r]), True


def ore_left_factor_divide(p: DiffOp, y: DiffOp) -> tuple[DiffOp, DiffOp]:
    """Left Euclidean division ``p = y o q + r`` with ``order(r) < order(y)``."""
    if y.is_zero() or y.lc.is_zero():
        raise DivisionDegenerate("divisor has vanishing leading coefficient")
    e = y.order
    inv_lead = y.lc.inverse()
    rem = p
    q_coeffs: list[RatFun] = [RatFun(0)] * max(p.order - e + 1, 1)
    while not rem.is_zero() and rem.order >= e:
        k = rem.order - e
        a = rem.lc * inv_lead
        q_coeffs[k] = q_coeffs[k] + a
        step = op_mul(y, DiffOp([RatFun(0)] * k + [a]))
        rem = rem - step
        # guard against cancellation failure
        if not rem.is_zero() and rem.order >= e + k + 1:  # pragma: no cover
            raise DivisionDegenerate("leading term did not cancel")
    return DiffOp(q_coeffs), rem


def equals_up_to_left_factor(p: DiffOp, q: DiffOp) -> RatFun | None:
    """Return ``f`` with ``p == f * q`` or ``None``."""
    if p.is_zero() or q.is_zero():
        return RatFun(0) if p.is_zero() and q.is_zero() else None
    if p.order != q.order:
        return None
    f = p.lc / q.lc
    for a, b in zip(p.coeffs, q.coeffs):
        if a != f * b:
            return None
    return f
