"""Partial differential operators of the rank-eight system in ``t1, t2, t3``.

These are descriptors: coefficient maps from derivative multi-indices to
trivariate polynomials.  They support composition with ``D_i``,
substitution of a coordinate and restriction to the diagonal
``t1 = t2``, which is enough to check the displayed relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .exact_algebra import MPoly, Poly, Rat, RatFun, rat, rat_to_json
from .exact_algebra import _pack, _unpack  # packed monomial keys
from .ore import DiffOp
from .params import Params

__all__ = [
    "PDOp",
    "z3_operators",
    "b_form",
    "b_form_display",
    "z2_operators",
    "restrict_coordinate",
    "diagonal_restriction",
]

Index = tuple[int, int, int]


def _subs_var(p: MPoly, i: int, value) -> MPoly:
    value = rat(value)
    out = MPoly()
    for k, c in p.terms.items():
        e = list(_unpack(k))
        power = e[i]
        e[i] = 0
        out = out + MPoly({_pack(e): c * value**power})
    return out


@dataclass(frozen=True)
class PDOp:
    """``sum_alpha c_alpha(t) D^alpha`` with ``D^alpha = D1^a1 D2^a2 D3^a3``."""

    terms: Mapping[Index, MPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if not v.is_zero()})

    @classmethod
    def of(cls, items: Sequence[tuple[Index, object]]) -> "PDOp":
        acc: dict[Index, MPoly] = {}
        for idx, c in items:
            c = c if isinstance(c, MPoly) else MPoly.const(c)
            acc[idx] = acc.get(idx, MPoly()) + c
        return cls(acc)

    def coeff(self, idx: Index) -> MPoly:
        return self.terms.get(tuple(idx), MPoly())

    @property
    def order(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def __add__(self, other: "PDOp") -> "PDOp":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, MPoly()) + v
        return PDOp(acc)

    def __neg__(self) -> "PDOp":
        return PDOp({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "PDOp") -> "PDOp":
        return self + (-other)

    def scale(self, f) -> "PDOp":
        """Left multiplication by a polynomial or scalar."""
        f = f if isinstance(f, MPoly) else MPoly.const(f)
        return PDOp({k: f * v for k, v in self.terms.items()})

    def d(self, i: int) -> "PDOp":
        """``D_i o self``."""
        acc: dict[Index, MPoly] = {}
        for k, v in self.terms.items():
            up = list(k)
            up[i] += 1
            up = tuple(up)
            acc[up] = acc.get(up, MPoly()) + v
            dv = v.partial(i)
            if not dv.is_zero():
                acc[k] = acc.get(k, MPoly()) + dv
        return PDOp(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PDOp):
            return NotImplemented
        return (self - other).terms == {}

    def __hash__(self):
        return hash(frozenset((k, hash(v)) for k, v in self.terms.items()))

    def to_json(self) -> list[dict]:
        return [{"d": list(k), "coeff": v.to_json()} for k, v in sorted(self.terms.items())]


def _a(p: Params | Sequence) -> tuple[Rat, Rat, Rat, Rat]:
    if isinstance(p, Params):
        return p.a
    return tuple(rat(v) for v in p)


def z3_operators(a) -> tuple[PDOp, PDOp, PDOp]:
    """``E1, E2, E3`` at ``a = (a0, a1, a2, a3)`` (or a ``Params``)."""
    a0, a1, a2, a3 = _a(a)
    t1, t2, t3 = MPoly.gens()
    one = MPoly.const(1)
    e1 = PDOp.of(
        [
            ((0, 2, 0), one - t2 * t2),
            ((0, 1, 1), (t1 - t2 * t3) * 2),
            ((0, 0, 2), one - t3 * t3),
            ((0, 1, 0), t2 * a0),
            ((0, 0, 1), t3 * a0),
            ((0, 0, 0), a1),
        ]
    )
    e2 = PDOp.of(
        [
            ((0, 0, 2), one - t3 * t3),
            ((1, 0, 1), (t2 - t3 * t1) * 2),
            ((2, 0, 0), one - t1 * t1),
            ((0, 0, 1), t3 * a0),
            ((1, 0, 0), t1 * a0),
            ((0, 0, 0), a2),
        ]
    )
    e3 = PDOp.of(
        [
            ((2, 0, 0), one - t1 * t1),
            ((1, 1, 0), (t3 - t1 * t2) * 2),
            ((0, 2, 0), one - t2 * t2),
            ((1, 0, 0), t1 * a0),
            ((0, 1, 0), t2 * a0),
            ((0, 0, 0), a3),
        ]
    )
    return e1, e2, e3


def b_form(a) -> tuple[PDOp, PDOp, PDOp]:
    """``-(E_j + E_k - E_i)/2`` for ``{i, j, k} = {1, 2, 3}``."""
    e = z3_operators(a)
    half = rat(1, 2)
    return tuple((e[i] - e[(i + 1) % 3] - e[(i + 2) % 3]).scale(half) for i in range(3))


def b_form_display(a) -> tuple[PDOp, PDOp, PDOp]:
    """The system written with ``b_i = (a1+a2+a3)/2 - a_i``, moved to one side."""
    a0, a1, a2, a3 = _a(a)
    s = (a1 + a2 + a3) / 2
    b = (s - a1, s - a2, s - a3)
    t = MPoly.gens()
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        ti, tj, tk = t[i], t[j], t[k]

        def idx(*pos):
            e = [0, 0, 0]
            for q in pos:
                e[q] += 1
            return tuple(e)

        out.append(
            PDOp.of(
                [
                    (idx(i, i), ti * ti - 1),
                    (idx(i, j), -(tk - ti * tj)),
                    (idx(i, k), -(tj - tk * ti)),
                    (idx(j, k), ti - tj * tk),
                    (idx(i), ti * (-a0)),
                    (idx(), -b[i]),
                ]
            )
        )
    return tuple(out)


def z2_operators(a) -> tuple[PDOp, PDOp]:
    """``P1, P2`` generating the restricted system on ``t3 = 1``."""
    a0, a1, a2, a3 = _a(a)
    t1, t2, _ = MPoly.gens()
    one = MPoly.const(1)
    p1 = PDOp.of(
        [
            ((2, 0, 0), one - t1 * t1),
            ((1, 1, 0), (one - t1 * t2) * 2),
            ((0, 2, 0), one - t2 * t2),
            ((1, 0, 0), t1 * a0),
            ((0, 1, 0), t2 * a0),
            ((0, 0, 0), a3),
        ]
    )
    inner = PDOp.of(
        [
            ((1, 2, 0), one - t2 * t2),
            ((1, 1, 0), t2 * a0),
            ((1, 0, 0), a1),
            ((2, 1, 0), one - t1 * t1),
            ((1, 1, 0), t1 * a0),
            ((0, 1, 0), a2),
        ]
    )
    outer = PDOp.of(
        [
            ((0, 2, 0), one - t2 * t2),
            ((0, 1, 0), t2 * a0),
            ((0, 0, 0), a1),
            ((2, 0, 0), t1 * t1 - 1),
            ((1, 0, 0), t1 * (-a0)),
            ((0, 0, 0), -a2),
        ]
    )
    p2 = inner.scale((t1 - t2) * 2) - outer.scale(2 + a0)
    return p1, p2


def restrict_coordinate(op: PDOp, i: int, value) -> PDOp:
    """Substitute ``t_i = value`` in every coefficient."""
    return PDOp({k: _subs_var(v, i, value) for k, v in op.terms.items()})


def diagonal_restriction(op: PDOp) -> DiffOp:
    """Ordinary operator in ``t`` from ``t1 = t, t2 = t + s`` at ``s = 0``.

    With ``D1 = D_t - D_s`` and ``D2 = D_s`` only the pure ``D1^k`` terms
    survive.  Coefficients must not involve ``t3``.
    """
    coeffs: dict[int, Poly] = {}
    for (k1, k2, k3), v in op.terms.items():
        if k2 or k3:
            continue
        poly = Poly()
        for key, c in v.terms.items():
            e1, e2, e3 = _unpack(key)
            if e3:
                raise ValueError("coefficient depends on t3")
            poly = poly + Poly.monomial(e1 + e2, c)
        coeffs[k1] = coeffs.get(k1, Poly()) + poly
    top = max(coeffs, default=0)
    return DiffOp([RatFun(coeffs.get(j, Poly())) for j in range(top + 1)])


def describe(op: PDOp) -> dict[str, str]:
    """Readable ``{"D^(i,j,k)": coefficient}`` map."""
    return {f"D^{k}": repr(v) for k, v in sorted(op.terms.items())}


def params_a_json(a) -> list[str]:
    return [rat_to_json(v) for v in _a(a)]
