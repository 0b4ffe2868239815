"""Matrix one-forms of the rank-eight and rank-six systems and their integrability.

A form is ``omega = sum_i M_i dt_i`` with ``M_i = A_i / (h_i c)``: ``A_i`` is
a polynomial matrix, ``h_i`` a per-matrix factor and ``c`` a factor shared
by all matrices.  Integrability ``d omega = omega ^ omega`` is checked as a
polynomial identity after clearing ``h_i^2 h_j^2 c^2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .exact_algebra import MPoly, MRatFun, Rat, rat
from .params import Params

__all__ = [
    "PfaffianForm",
    "build_omega8",
    "build_omega6",
    "check_integrability",
    "integrability_defects",
    "d_omega_nonzero",
    "spot_check",
    "perturb",
    "sigma12",
    "sigma13",
    "sigma23",
    "omega8_polys",
    "frame_determinant",
]

Matrix = list[list[MPoly]]
Entry = Callable[..., MPoly]


@dataclass(frozen=True)
class PfaffianForm:
    """``M_i = A[i] / (h[i] * c)`` for ``i < k``."""

    A: tuple[Matrix, ...]
    h: tuple[MPoly, ...]
    c: MPoly
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.A[0])

    @property
    def k(self) -> int:
        return len(self.A)

    def denominator(self, i: int) -> MPoly:
        return self.h[i] * self.c

    def entry(self, i: int, r: int, col: int) -> MRatFun:
        """``M_i[r][col]`` (0-based) as a rational function."""
        return MRatFun(self.A[i][r][col], self.denominator(i))

    def evaluate(self, i: int, point: Sequence) -> list[list[Rat]]:
        g = self.denominator(i).subs(point)
        return [[e.subs(point) / g for e in row] for row in self.A[i]]


# --- permutations of (t1, t2, t3, b1, b2, b3) ----------------------------------


def sigma12(f: Entry) -> Entry:
    return lambda t1, t2, t3, b1, b2, b3, a0: f(t2, t1, t3, b2, b1, b3, a0)


def sigma13(f: Entry) -> Entry:
    return lambda t1, t2, t3, b1, b2, b3, a0: f(t3, t2, t1, b3, b2, b1, a0)


def sigma23(f: Entry) -> Entry:
    return lambda t1, t2, t3, b1, b2, b3, a0: f(t1, t3, t2, b1, b3, b2, a0)


def frame_determinant(t1, t2, t3):
    """``D = -1 + t1^2 + t2^2 + t3^2 - 2 t1 t2 t3``."""
    return t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 * 2 - 1


# --- transcribed entries of M1 ----------------------------------------------------


def p152(t1, t2, t3, b1, b2, b3, a0):
    return -(t1 * t2 - t3) * b2 + t1 * (t1 * t3 - t2) * b3


def p153(t1, t2, t3, b1, b2, b3, a0):
    return (t2 * t2 - 1) * b1 - t1 * (t2 * t3 - t1) * (b1 + b3)


def p154(t1, t2, t3, b1, b2, b3, a0):
    return (t2 * t3 - t1) * b2 - t3 * (t1 * t3 - t2) * b1


def p155(t1, t2, t3, b1, b2, b3, a0):
    return -(t1 * t1 - 1) * (t2 * t3 - t1) * a0 + (t1 * t2 - t3) * (t1 * t3 - t2)


def p157(t1, t2, t3, b1, b2, b3, a0):
    return -(t2 * t3 - t1) * (t1 * t3 - t2) * (1 + a0)


p162 = sigma23(p152)
p163 = sigma23(p154)
p164 = sigma23(p153)
p166 = sigma23(p155)
p167 = sigma23(p157)


def m181(t1, t2, t3, b1, b2, b3, a0):
    return -(t1 * t1 - 1) * (t2 * t3 - t1) * (b2 * b3) + (t1 * t2 - t3) * (t1 * t3 - t2) * (b1 * (b2 + b3))


def m182(t1, t2, t3, b1, b2, b3, a0):
    return (1 - t3 * t3) * b3 + (1 - t2 * t2) * b2


def m183(t1, t2, t3, b1, b2, b3, a0):
    return (
        t2 * (t1 * t2 - t3) * (t1 * t3 - t2) * (a0 * b1)
        - (t1 * t3 - t2) * (t2 * t3 - t1) * (a0 * b3)
        + t3 * (t1 * t1 - 1) * (t2 * t2 - 1) * b1
    )


def m184(t1, t2, t3, b1, b2, b3, a0):
    return (
        t3 * (t1 * t3 - t2) * (t1 * t2 - t3) * (a0 * b1)
        - (t1 * t2 - t3) * (t2 * t3 - t1) * (a0 * b2)
        + t2 * (t1 * t1 - 1) * (t3 * t3 - 1) * b1
    )


def m185(t1, t2, t3, b1, b2, b3, a0):
    return (t2 - t3 * t1) * a0 + (t2 - t3 * t1) * b3 + (t2 * t1 * t1 - t3 * t1) * b2


def m186(t1, t2, t3, b1, b2, b3, a0):
    return (t3 - t1 * t2) * a0 + (t1 * t1 * t3 - t1 * t2) * b3 + (t3 - t1 * t2) * b2


def m187(t1, t2, t3, b1, b2, b3, a0):
    d = frame_determinant(t1, t2, t3)
    return (
        (t2 * t3 - t1) * (t1 * t3 - t2) * (t1 * t2 - t3) * (a0 * a0)
        - t1 * (t2 * t3 - t1) * d * (a0 + b2 + b3)
        + (t1 * t1 - 1) * d * b1
        + (t1 * t1 - 1) * (t2 * t2 - 1) * (t3 * t3 - 1)
    )


def m188(t1, t2, t3, b1, b2, b3, a0):
    return (-t1 * t2 * t2 + t2 * t3 * 2 - t3 * t3 * t1 + t1 * t1 * t1 - t1) * a0


def m188_printed(t1, t2, t3, b1, b2, b3, a0):
    """Printed entry; it exceeds ``m188`` by ``-(t1^2-1) dD/dt1`` and breaks integrability."""
    return m188(t1, t2, t3, b1, b2, b3, a0) + (t1 * t1 - 1) * (t2 * t3 - t1) * 2


OMEGA8_POLYS: dict[str, Entry] = {
    "p152": p152,
    "p153": p153,
    "p154": p154,
    "p155": p155,
    "p157": p157,
    "p162": p162,
    "p163": p163,
    "p164": p164,
    "p166": p166,
    "p167": p167,
    "m181": m181,
    "m182": m182,
    "m183": m183,
    "m184": m184,
    "m185": m185,
    "m186": m186,
    "m187": m187,
    "m188": m188,
    "m188_printed": m188_printed,
}


def omega8_polys() -> dict[str, Entry]:
    """Named entry polynomials of ``M1`` as functions of ``(t1, t2, t3, b1, b2, b3, a0)``."""
    return dict(OMEGA8_POLYS)


# Each row is a list of (column, numerator, denominator tag); tags: "" for 1,
# "T" for t_i^2 - 1, "D" for D and "TD" for their product.


def _const(v) -> Entry:
    return lambda t1, t2, t3, b1, b2, b3, a0: MPoly.const(1) * v


def _rows_m1(m88: Entry) -> list[list[tuple[int, Entry, str]]]:
    one = _const(1)
    return [
        [(1, one, "")],
        [
            (0, lambda t1, t2, t3, b1, b2, b3, a0: MPoly.const(b1), "T"),
            (1, lambda t1, t2, t3, b1, b2, b3, a0: t1 * a0, "T"),
            (4, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t2 - t3), "T"),
            (5, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t3 - t2), "T"),
            (6, lambda t1, t2, t3, b1, b2, b3, a0: t2 * t3 - t1, "T"),
        ],
        [(4, one, "")],
        [(5, one, "")],
        [
            (1, p152, "TD"),
            (2, p153, "TD"),
            (3, p154, "TD"),
            (4, p155, "TD"),
            (5, one, "T"),
            (6, p157, "TD"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: t2 - t3 * t1, "TD"),
        ],
        [
            (1, p162, "TD"),
            (2, p163, "TD"),
            (3, p164, "TD"),
            (4, one, "T"),
            (5, p166, "TD"),
            (6, p167, "TD"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t2 - t3), "TD"),
        ],
        [(7, one, "D")],
        [
            (0, m181, "TD"),
            (1, m182, "D"),
            (2, m183, "TD"),
            (3, m184, "TD"),
            (4, m185, "T"),
            (5, m186, "T"),
            (6, m187, "TD"),
            (7, m88, "TD"),
        ],
    ]


def _rows_m2(m88: Entry) -> list[list[tuple[int, Entry, str]]]:
    one = _const(1)
    s = sigma12
    return [
        [(2, one, "")],
        [(4, one, "")],
        [
            (0, lambda t1, t2, t3, b1, b2, b3, a0: MPoly.const(b2), "T"),
            (2, lambda t1, t2, t3, b1, b2, b3, a0: t2 * a0, "T"),
            (4, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t2 - t3), "T"),
            (5, lambda t1, t2, t3, b1, b2, b3, a0: t1 * t3 - t2, "T"),
            (6, lambda t1, t2, t3, b1, b2, b3, a0: -(t2 * t3 - t1), "T"),
        ],
        [(6, one, "")],
        [
            (1, s(p153), "TD"),
            (2, s(p152), "TD"),
            (3, s(p154), "TD"),
            (4, s(p155), "TD"),
            (5, s(p157), "TD"),
            (6, one, "T"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: -(t2 * t3 - t1), "TD"),
        ],
        [(7, one, "D")],
        [
            (1, s(p163), "TD"),
            (2, s(p162), "TD"),
            (3, s(p164), "TD"),
            (4, one, "T"),
            (5, s(p167), "TD"),
            (6, s(p166), "TD"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t2 - t3), "TD"),
        ],
        [
            (0, s(m181), "TD"),
            (1, s(m183), "TD"),
            (2, s(m182), "D"),
            (3, s(m184), "TD"),
            (4, s(m185), "T"),
            (5, s(m187), "TD"),
            (6, s(m186), "T"),
            (7, s(m88), "TD"),
        ],
    ]


def _rows_m3(m88: Entry) -> list[list[tuple[int, Entry, str]]]:
    one = _const(1)
    s = sigma13
    return [
        [(3, one, "")],
        [(5, one, "")],
        [(6, one, "")],
        [
            (0, lambda t1, t2, t3, b1, b2, b3, a0: MPoly.const(b3), "T"),
            (3, lambda t1, t2, t3, b1, b2, b3, a0: t3 * a0, "T"),
            (4, lambda t1, t2, t3, b1, b2, b3, a0: t1 * t2 - t3, "T"),
            (5, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t3 - t2), "T"),
            (6, lambda t1, t2, t3, b1, b2, b3, a0: -(t2 * t3 - t1), "T"),
        ],
        [(7, one, "D")],
        [
            (1, s(p164), "TD"),
            (2, s(p163), "TD"),
            (3, s(p162), "TD"),
            (4, s(p167), "TD"),
            (5, s(p166), "TD"),
            (6, one, "T"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: -(t2 * t3 - t1), "TD"),
        ],
        [
            (1, s(p154), "TD"),
            (2, s(p153), "TD"),
            (3, s(p152), "TD"),
            (4, s(p157), "TD"),
            (5, one, "T"),
            (6, s(p155), "TD"),
            (7, lambda t1, t2, t3, b1, b2, b3, a0: -(t1 * t3 - t2), "TD"),
        ],
        [
            (0, s(m181), "TD"),
            (1, s(m184), "TD"),
            (2, s(m183), "TD"),
            (3, s(m182), "D"),
            (4, s(m187), "TD"),
            (5, s(m186), "T"),
            (6, s(m185), "T"),
            (7, s(m88), "TD"),
        ],
    ]


def _b_params(a) -> tuple[Rat, Rat, Rat, Rat]:
    """``(a0, b1, b2, b3)`` from ``a = (a0, a1, a2, a3)`` or a ``Params``."""
    if isinstance(a, Params):
        a = a.a
    a0, a1, a2, a3 = (rat(v) for v in a)
    return a0, (-a1 + a2 + a3) / 2, (a1 - a2 + a3) / 2, (a1 + a2 - a3) / 2


def _assemble(rows, n: int, args, factors: dict[str, MPoly], full: str) -> Matrix:
    """Polynomial matrix over the denominator whose tag is ``full``."""
    mat = [[MPoly() for _ in range(n)] for _ in range(n)]
    for r, row in enumerate(rows):
        for col, f, tag in row:
            mult = MPoly.const(1)
            for ch in full:
                if ch not in tag:
                    mult = mult * factors[ch]
            mat[r][col] = mat[r][col] + f(*args) * mult
    return mat


def build_omega8(a, printed: bool = False) -> PfaffianForm:
    """The ``8 x 8`` form on the frame ``(F, F1, F2, F3, F12, F13, F23, D F123)``.

    ``printed=True`` uses the tabulated ``m188`` verbatim, whose last
    diagonal entries are not integrable.
    """
    a0, b1, b2, b3 = _b_params(a)
    t1, t2, t3 = MPoly.gens()
    d = frame_determinant(t1, t2, t3)
    m88 = m188_printed if printed else m188
    mats, hs = [], []
    for rows, ti in ((_rows_m1(m88), t1), (_rows_m2(m88), t2), (_rows_m3(m88), t3)):
        tt = ti * ti - 1
        args = (t1, t2, t3, b1, b2, b3, a0)
        mats.append(_assemble(rows, 8, args, {"T": tt, "D": d}, "TD"))
        hs.append(tt)
    return PfaffianForm(tuple(mats), tuple(hs), d, "omega8")


def build_omega6(a, printed: bool = False) -> PfaffianForm:
    """The ``6 x 6`` form on the frame ``(F, F1, F2, u F11, u F12, u^2 F112)``, ``u = t1 - t2``.

    ``D2 (u F11) = (-u F11 + u^2 F112) / u`` fixes ``N2[3][5] = +1/u``;
    ``printed=True`` keeps the tabulated ``-1/u``.
    """
    a0, b1, b2, b3 = _b_params(a)
    t1, t2, _ = MPoly.gens()
    one = MPoly.const(1)
    u = t1 - t2
    T1 = t1 * t1 - 1
    T2 = t2 * t2 - 1

    n142 = -(t1 + t2) * a0 - t1 * (a0 * a0) + u * (b1 - b3)
    n144 = t1 * t1 + t1 * t2 * 2 - 3 + (t1 * t1 * 2 - t1 * t2 - 1) * a0
    n145 = T2 * 2 - (t1 * t1 - t1 * t2 * 2 + 1) * a0
    n161 = one * ((2 + a0) * b1 - (b1 + b2) * (b1 + b3))
    n162 = (
        t1 * u * (-a0 * (b1 + b3))
        + t1 * u * (a0 * (2 + a0))
        - (t1 * t1 - t1 * t2 * 2 + 1) * (a0 * b2)
        + T2 * (2 * b2)
        + u * u * (2 * b3)
    )
    n163 = (
        t2 * u * (-a0 * b3)
        + u * u * (2 * b3)
        + (one - t1 * t2 * 2 + t1 * t1) * (2 * b1)
        + (one - t1 * t2) * (a0 * b1)
    )
    n164 = (
        2 - t1 * t1 * 2
        + (one - t1 * t1) * a0
        + t1 * u * (2 * b3)
        + (one - t1 * t2 * 2 + t1 * t1) * b2
        - (one - t1 * t1) * b1
    )
    n165 = (
        2 - t2 * t2 * 2
        + (t1 * t1 * 3 - t1 * t2 * 4 - t2 * t2 + 2) * a0
        + (one - t1 * t2) * (a0 * a0)
        + (t1 * t1 - t2 * t2) * b3
        + (t1 * t1 + t2 * t2 - 2) * b1
    )
    n166 = -t1 * t1 * 2 + t1 * t2 * 4 - 2 + (t1 * t1 + t1 * t2 - 2) * a0

    n252 = t1 * ((2 + a0) * a0) + u * (b2 + b3)
    n255 = -t2 * t2 - t1 * t2 * 2 + 3 + (t1 * t1 - t2 * t2 + 1 - t1 * t2) * a0
    n261 = one * ((2 + a0) * a0 * b1 + (b1 + b3) * (b1 + b2))
    n262 = (
        t1 * u * ((2 + a0) * a0 * a0)
        + t1 * u * (a0 * b1)
        + (one - t1 * t2 * 2 + t1 * t1) * (a0 * b2)
        + (t1 * t1 * 2 - t1 * t2 * 3 + t2 * t2) * (a0 * b3)
        + (one - t2 * t2) * (2 * b2)
    )
    n263 = t1 * u * (a0 * b3) - (one - t2 * t2) * (2 * b1) + (t2 * t2 + t1 * t1 - 1 - t1 * t2) * (a0 * b1)
    n264 = (one - t1 * t1) * (2 * a0 + a0 * a0 + b1 + b3) - (one - t2 * t2) * (b2 + b3)
    n265 = (
        (t2 * t2 - t1 * t2 * 2 + 1) * a0
        + t1 * u * (a0 * a0)
        - t2 * u * (2 * b3)
        + (one - t1 * t2) * (2 * b1)
    )

    # entries as (row, col, numerator, tag) with tags over "T" (t_i^2-1) and "U" (t1-t2)
    n1 = [
        (0, 1, one, ""),
        (1, 3, one, "U"),
        (2, 4, one, "U"),
        (3, 0, one * (-b1 * (2 + a0)), "T"),
        (3, 1, n142, "T"),
        (3, 2, u * (-(b1 + b3)), "T"),
        (3, 3, n144, "TU"),
        (3, 4, n145, "TU"),
        (3, 5, one - t1 * t2 * 2 + t1 * t1, "TU"),
        (4, 4, one, "U"),
        (4, 5, one, "U"),
        (5, 0, n161, "T"),
        (5, 1, n162, "TU"),
        (5, 2, n163, "TU"),
        (5, 3, n164, "TU"),
        (5, 4, n165, "TU"),
        (5, 5, n166, "TU"),
    ]
    n2 = [
        (0, 2, one, ""),
        (1, 4, one, "U"),
        (2, 0, one * (b1 + b2), "T"),
        (2, 1, t1 * a0, "T"),
        (2, 2, t2 * a0, "T"),
        (2, 3, -T1, "TU"),
        (2, 4, (one - t1 * t2) * 2, "TU"),
        (3, 3, -one, "U"),
        (3, 5, -one if printed else one, "U"),
        (4, 0, one * (b1 * (2 + a0)), "T"),
        (4, 1, n252, "T"),
        (4, 2, u * (b1 + b3), "T"),
        (4, 3, T1 * (-(2 + a0)), "TU"),
        (4, 4, n255, "TU"),
        (4, 5, -T1, "TU"),
        (5, 0, n261, "T"),
        (5, 1, n262, "TU"),
        (5, 2, n263, "TU"),
        (5, 3, n264, "TU"),
        (5, 4, n265, "TU"),
        (5, 5, -T2 * 2 + (2 - t1 * t1 - t2 * t2) * a0, "TU"),
    ]
    mats = []
    for entries, tt in ((n1, T1), (n2, T2)):
        mat = [[MPoly() for _ in range(6)] for _ in range(6)]
        for r, col, num, tag in entries:
            mult = MPoly.const(1)
            if "T" not in tag:
                mult = mult * tt
            if "U" not in tag:
                mult = mult * u
            mat[r][col] = mat[r][col] + num * mult
        mats.append(mat)
    return PfaffianForm(tuple(mats), (T1, T2), u, "omega6")


# --- integrability ------------------------------------------------------------------


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for r in range(n):
        row = []
        nz = [(k, a[r][k]) for k in range(n) if not a[r][k].is_zero()]
        for c in range(n):
            acc = MPoly()
            for k, v in nz:
                w = b[k][c]
                if not w.is_zero():
                    acc = acc + v * w
            row.append(acc)
        out.append(row)
    return out


def _curl(w: PfaffianForm, i: int, j: int) -> Matrix:
    """``(d_i M_j - d_j M_i) * h_i^2 h_j^2 c^2`` as a polynomial matrix."""
    Ai, Aj = w.A[i], w.A[j]
    gi, gj = w.denominator(i), w.denominator(j)
    hi2, hj2 = w.h[i] * w.h[i], w.h[j] * w.h[j]
    dgj, dgi = gj.partial(i), gi.partial(j)
    n = w.n
    out = []
    for r in range(n):
        row = []
        for col in range(n):
            aj, ai = Aj[r][col], Ai[r][col]
            left = (aj.partial(i) * gj - aj * dgj) * hi2 if not aj.is_zero() else MPoly()
            right = (ai.partial(j) * gi - ai * dgi) * hj2 if not ai.is_zero() else MPoly()
            row.append(left - right)
        out.append(row)
    return out


def _bracket(w: PfaffianForm, i: int, j: int) -> Matrix:
    """``(M_i M_j - M_j M_i) * h_i^2 h_j^2 c^2`` as a polynomial matrix."""
    Ai, Aj = w.A[i], w.A[j]
    p, q = _matmul(Ai, Aj), _matmul(Aj, Ai)
    scale = w.h[i] * w.h[j]
    return [[(p[r][c] - q[r][c]) * scale for c in range(w.n)] for r in range(w.n)]


def integrability_defects(w: PfaffianForm) -> list[tuple[int, int, int, int]]:
    """Positions ``(i, j, row, col)`` where ``d omega != omega ^ omega``."""
    bad = []
    for i in range(w.k):
        for j in range(i + 1, w.k):
            cu, br = _curl(w, i, j), _bracket(w, i, j)
            for r in range(w.n):
                for col in range(w.n):
                    if cu[r][col] != br[r][col]:
                        bad.append((i, j, r, col))
    return bad


def check_integrability(w: PfaffianForm) -> bool:
    """Exact check of ``d_i M_j - d_j M_i = M_i M_j - M_j M_i`` for all ``i < j``."""
    return not integrability_defects(w)


def d_omega_nonzero(w: PfaffianForm) -> bool:
    """True iff some ``d_i M_j - d_j M_i`` is nonzero."""
    for i in range(w.k):
        for j in range(i + 1, w.k):
            if any(not e.is_zero() for row in _curl(w, i, j) for e in row):
                return True
    return False


def _eval_partial(w: PfaffianForm, i: int, var: int, point: Sequence) -> list[list[Rat]]:
    g = w.denominator(i)
    gv = g.subs(point)
    dg = g.partial(var).subs(point)
    return [[(e.partial(var).subs(point) * gv - e.subs(point) * dg) / (gv * gv) for e in row] for row in w.A[i]]


def spot_check(w: PfaffianForm, points: int = 20, seed: int = 0) -> bool:
    """Integrability evaluated at random rational points off the singular locus."""
    rng = random.Random(seed)
    done = 0
    while done < points:
        pt = [rat(rng.randint(-40, 40), rng.randint(1, 13)) for _ in range(3)]
        if any(w.denominator(i).subs(pt) == 0 for i in range(w.k)):
            continue
        done += 1
        mats = [w.evaluate(i, pt) for i in range(w.k)]
        for i in range(w.k):
            for j in range(i + 1, w.k):
                dij = _eval_partial(w, j, i, pt)
                dji = _eval_partial(w, i, j, pt)
                Mi, Mj = mats[i], mats[j]
                n = w.n
                for r in range(n):
                    for c in range(n):
                        lhs = dij[r][c] - dji[r][c]
                        rhs = sum((Mi[r][k] * Mj[k][c] - Mj[r][k] * Mi[k][c] for k in range(n)), rat(0))
                        if lhs != rhs:
                            return False
    return True


def perturb(w: PfaffianForm, i: int, r: int, col: int, delta=1) -> PfaffianForm:
    """Copy of ``w`` with ``M_i[r][col]`` increased by ``delta``."""
    A = [[list(row) for row in m] for m in w.A]
    A[i][r][col] = A[i][r][col] + w.denominator(i) * rat(delta)
    return PfaffianForm(tuple(A), w.h, w.c, w.name + "*")
