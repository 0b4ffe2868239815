"""Indicial equations, local exponents, Riemann schemes and invariants."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import IrregularSingular, UnknownOperator
from .exact_algebra import Poly, Rat, RatFun, rat, rat_to_json, rational_roots
from .ore import DiffOp, VarMap, adjoint, change_var, equals_up_to_left_factor, falling

__all__ = [
    "INF",
    "ExponentForm",
    "RiemannScheme",
    "shift_coeffs",
    "localize",
    "indicial_polynomial",
    "local_exponents",
    "singular_points",
    "normal_form_q",
    "theta_invariants",
    "is_self_adjoint",
    "expected_scheme",
    "fuchs_defect",
    "compare_scheme",
    "scheme_names",
]

INF = "inf"

_SYMBOLS = ("A0", "A1", "A2", "A3", "a", "b", "c", "g", "m")
_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(A[0-3]|[abcgm])?\s*")


@dataclass(frozen=True)
class ExponentForm:
    """``constant + sum coeff[s] * s`` over the parameter symbols."""

    constant: Rat
    coeffs: tuple[tuple[str, Rat], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "ExponentForm":
        pos = 0
        const = rat(0)
        co: dict[str, Rat] = {}
        text = text.strip()
        if not text:
            raise ValueError("empty exponent form")
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse exponent form {text!r} at {pos}")
            sign = -1 if m.group(1) == "-" else 1
            num = rat(m.group(2)) if m.group(2) else rat(1)
            if m.group(3):
                co[m.group(3)] = co.get(m.group(3), rat(0)) + sign * num
            else:
                const += sign * num
            pos = m.end()
        return cls(const, tuple(sorted((k, v) for k, v in co.items() if v != 0)))

    def evaluate(self, values: Mapping[str, Rat]) -> Rat:
        total = self.constant
        for s, c in self.coeffs:
            total += c * rat(values[s])
        return total

    def __str__(self) -> str:
        parts = []
        for s, c in self.coeffs:
            if c == 1:
                parts.append(f"+{s}")
            elif c == -1:
                parts.append(f"-{s}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{rat_to_json(abs(c))}{s}")
        if self.constant != 0 or not parts:
            c = self.constant
            parts.insert(0, f"{'-' if c < 0 else ''}{rat_to_json(abs(c))}")
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


@dataclass(frozen=True)
class RiemannScheme:
    """``point -> exponent forms``; points are rationals or ``INF``."""

    entries: tuple[tuple[object, tuple[ExponentForm, ...]], ...]

    @classmethod
    def of(cls, table: Mapping[object, Sequence[str]]) -> "RiemannScheme":
        return cls(tuple((pt, tuple(ExponentForm.parse(e) for e in exps)) for pt, exps in table.items()))

    @property
    def points(self) -> list:
        return [pt for pt, _ in self.entries]

    def instantiate(self, values: Mapping[str, Rat]) -> dict[object, list[Rat]]:
        return {pt: sorted(e.evaluate(values) for e in exps) for pt, exps in self.entries}

    def to_json(self) -> dict[str, list[str]]:
        return {_pt_key(pt): [str(e) for e in exps] for pt, exps in self.entries}


def _pt_key(pt) -> str:
    return pt if pt == INF else rat_to_json(pt)


# --- local data ----------------------------------------------------------------


def shift_coeffs(p: DiffOp) -> dict[int, Poly]:
    """``e_d`` with ``p x^m = sum_d e_d(m) x^(m+d)``."""
    out: dict[int, Poly] = {}
    for j, c in enumerate(p.poly_coeffs()):
        fj = None
        for i, a in enumerate(c.coeffs):
            if a == 0:
                continue
            if fj is None:
                fj = falling(j)
            d = i - j
            out[d] = out.get(d, Poly()) + fj * a
    return {d: e for d, e in sorted(out.items()) if not e.is_zero()}


def localize(p: DiffOp, point) -> DiffOp:
    """Move ``point`` to the origin: ``x = y + point`` or ``x = 1/y``."""
    if point == INF:
        return change_var(p, VarMap.reciprocal()).normalize()
    point = rat(point)
    if point == 0:
        return p.normalize()
    return change_var(p, VarMap.affine(1, point)).normalize()


def indicial_polynomial(p: DiffOp, point) -> Poly:
    """Indicial polynomial at ``point`` (exponent ``rho`` at infinity means ``x^-rho``)."""
    e = shift_coeffs(localize(p, point))
    dmin = min(e)
    ind = e[dmin]
    if ind.degree < p.order:
        raise IrregularSingular(f"indicial degree {ind.degree} < order {p.order} at {point}")
    return ind


def local_exponents(p: DiffOp, point) -> tuple[list[Rat], Poly]:
    """Rational local exponents with multiplicity, plus the residual factor."""
    roots, residual = rational_roots(indicial_polynomial(p, point))
    out: list[Rat] = []
    for r, mult in roots:
        out.extend([r] * mult)
    return sorted(out), residual


def singular_points(p: DiffOp) -> tuple[list[Rat], Poly]:
    """Rational finite singular points (roots of the leading coefficient)."""
    roots, residual = rational_roots(p.normalize().poly_coeffs()[-1])
    return [r for r, _ in roots], residual


def fuchs_defect(p: DiffOp) -> Rat:
    """Sum of exponents over the singular points and infinity minus the Fuchs baseline.

    Zero for an operator whose singularities are all listed; a positive
    integer counts the contribution of apparent singular points.
    """
    pts, residual = singular_points(p)
    if residual.degree > 0:
        raise IrregularSingular("irrational singular points are not supported")
    n = p.order
    total = rat(0)
    for pt in [*pts, INF]:
        exps, res = local_exponents(p, pt)
        if res.degree > 0:
            # sum of roots of the residual factor from its two top coefficients
            total += -res.coeff(res.degree - 1) / res.lc
        total += sum(exps, rat(0))
    k = len(pts) + 1
    return total - rat(n * (n - 1) * (k - 2)) / 2


# --- normal form and invariants -------------------------------------------------


def normal_form_q(p: DiffOp) -> tuple[RatFun, RatFun, RatFun]:
    """``(q2, q3, q4)`` after removing the third-order term of a monic quartic."""
    if p.order != 4:
        raise ValueError("normal form requires order 4")
    m = p.monic()
    Q1, Q2, Q3, Q4 = m.coeffs[3], m.coeffs[2], m.coeffs[1], m.coeffs[0]
    d1 = Q1.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    q2 = Q2 - d1 * rat(3, 2) - Q1 * Q1 * rat(3, 8)
    q3 = Q3 - Q1 * Q2 / 2 + Q1**3 / 8 - d2
    q4 = (
        Q4
        - Q1 * Q3 / 4
        + Q1**2 * Q2 / 16
        - Q1**4 * rat(3, 256)
        - Q2 * d1 / 4
        + Q1**2 * d1 * rat(3, 32)
        + d1 * d1 * rat(3, 16)
        - d3 / 4
    )
    return q2, q3, q4


def theta_invariants(p: DiffOp) -> tuple[RatFun, RatFun]:
    """Densities of the two fundamental invariants of a quartic operator."""
    q2, q3, q4 = normal_form_q(p)
    th3 = q3 - q2.derivative()
    th4 = q4 - q3.derivative() / 2 - q2 * q2 * rat(9, 100) + q2.derivative(2) / 5
    return th3, th4


def is_self_adjoint(p: DiffOp) -> bool:
    """``adjoint(p) == p`` up to a scalar left factor."""
    f = equals_up_to_left_factor(adjoint(p), p)
    return f is not None and f.is_poly() and f.num.degree == 0


# --- tabulated schemes ------------------------------------------------------------

_SCHEMES: dict[str, dict[object, tuple[str, ...]]] = {
    "Z": {
        rat(0): ("0", "A0-1/2", "A0+1/2", "2A0"),
        rat(1): ("1/2-A1", "0", "1", "1/2+A1"),
        INF: ("1-A0+A2", "1-A0-A2", "1-A0+A3", "1-A0-A3"),
    },
    "Zt": {
        rat(1): ("0", "A0-1/2", "A0+1/2", "2A0"),
        rat(-1): ("1/2-A1", "0", "1", "1/2+A1"),
        INF: ("1-A0+A2", "1-A0-A2", "1-A0+A3", "1-A0-A3"),
    },
    "Ztilde": {
        rat(0): ("1/2-A0", "0", "1", "1/2+A0"),
        rat(1): ("1/2-A1", "0", "1", "1/2+A1"),
        INF: ("1/2+A2", "1/2-A2", "1/2+A3", "1/2-A3"),
    },
    "K": {
        rat(0): ("0", "A0", "A0+1", "2A0"),
        rat(1): ("0", "-A1", "A1", "1"),
        INF: ("1-A0-A2", "1-A0+A3", "1-A0-A3", "1-A0+A2"),
    },
    "L": {
        rat(0): ("-A0", "0", "1", "A0"),
        rat(1): ("-A1", "0", "1", "A1"),
        INF: ("1+A2", "1-A3", "1+A3", "1-A2"),
    },
    "Q": {
        rat(0): ("0", "-A0-A2", "A0-A2"),
        rat(1): ("0", "-A1-A2", "A1-A2"),
        INF: ("1+2A2", "1+A2-A3", "1+A2+A3"),
    },
    "R": {
        rat(0): ("0", "2A0", "A0+A2"),
        rat(1): ("0", "2A1", "A1+A2"),
        INF: ("1-A0-A1", "1-A0-A1-A2-A3", "1-A0-A1-A2+A3"),
    },
    "DF": {
        rat(0): ("0", "a+c+1", "2a+2c+g+2"),
        rat(1): ("0", "b+c+1", "2b+2c+g+2"),
        INF: ("-2c", "-a-b-2c-g-1", "-2a-2b-2c-g-2"),
    },
    "Gauss": {
        rat(0): ("0", "1-c"),
        rat(1): ("0", "c-a-b"),
        INF: ("a", "b"),
    },
    "Diag2": {
        rat(1): ("0", "A0-1/2"),
        rat(-1): ("0", "A0-1/2"),
        INF: ("1-A0+A3", "1-A0-A3"),
    },
}


def expected_scheme(name: str) -> RiemannScheme:
    """Tabulated Riemann scheme of a catalog operator."""
    if name not in _SCHEMES:
        raise UnknownOperator(f"no tabulated scheme for {name!r}")
    return RiemannScheme.of(_SCHEMES[name])


def scheme_names() -> list[str]:
    return sorted(_SCHEMES)


def compare_scheme(p: DiffOp, scheme: RiemannScheme, values: Mapping[str, Rat]) -> dict[str, dict]:
    """Per-point comparison of computed and tabulated exponents."""
    expected = scheme.instantiate(values)
    out: dict[str, dict] = {}
    for pt, exps in expected.items():
        got, residual = local_exponents(p, pt)
        out[_pt_key(pt)] = {
            "expected": [rat_to_json(e) for e in exps],
            "computed": [rat_to_json(e) for e in got],
            "residual_degree": residual.degree,
            "match": Counter(got) == Counter(exps) and residual.degree <= 0,
        }
    return out
