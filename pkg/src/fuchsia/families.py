"""Closed-form local solutions and the parameter lists that match recurrences.

Every family is a coefficient rule ``n -> C_n`` built from Pochhammer
ratios, terminating 4F3(1) sums and products of Gauss series.  A family
knows its operator, base point and exponent so it can be checked with the
residual oracle of :mod:`fuchsia.frobenius`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import DegenerateParams, PoleBeforeTermination, PoleInCoefficient, UnknownName
from .exact_algebra import Rat, rat
from .frobenius import FrobSeries
from .hypergeometric import HypParams, pochhammer, product_2f1_coeffs, terminating_4f3_at1
from .local_analysis import INF
from .params import DFParams, GaussParams, Params

__all__ = [
    "binomial_series",
    "series_mul",
    "pfaff_reexpand",
    "HAT_LISTS",
    "MATCHES",
    "hat_list",
    "Family",
    "family_names",
    "family",
    "solution_family",
    "expression_ids",
    "pfaff_q",
    "pfaff_df",
]

_H = rat(1, 2)


# --- formal series helpers -----------------------------------------------------------


def binomial_series(lam, N: int) -> list[Rat]:
    """Coefficients of ``(1 - x)^lam`` up to ``x^N``."""
    lam = rat(lam)
    out = [rat(1)]
    for k in range(N):
        out.append(out[-1] * (k - lam) / (k + 1))
    return out


def series_mul(a: Sequence[Rat], b: Sequence[Rat]) -> list[Rat]:
    N = min(len(a), len(b))
    return [sum((a[k] * b[m - k] for k in range(m + 1)), rat(0)) for m in range(N)]


def pfaff_reexpand(c: Sequence[Rat]) -> list[Rat]:
    """Coefficients in ``x`` of ``sum c_n (x/(x-1))^n``."""
    N = len(c)
    out = [rat(0)] * N
    for n_, cn in enumerate(c):
        if not cn:
            continue
        sgn = -1 if n_ % 2 else 1
        # (1-x)^(-n) = sum (n)_k / k! x^k
        t = rat(1)
        for k in range(N - n_):
            out[n_ + k] += sgn * cn * t
            t = t * (n_ + k) / (k + 1)
    return out


def _ratio(ups: Sequence, downs: Sequence, n: int) -> Rat:
    out = rat(1)
    for u in ups:
        out *= pochhammer(u, n)
    for d in downs:
        v = pochhammer(d, n)
        if v == 0:
            raise DegenerateParams(f"Pochhammer ({d})_{n} vanishes in a denominator")
        out /= v
    return out


def _hyp_rule(ups, downs, hat: HypParams) -> Callable[[int], list[Rat]]:
    """``C_n = prod(ups)_n / (n! prod(downs)_n) * 4F3((n; hat); 1)``."""

    def build(N: int) -> list[Rat]:
        out = []
        for k in range(N + 1):
            g = _ratio(ups, downs, k) / math.factorial(k)
            try:
                out.append(g * terminating_4f3_at1(hat.at(k)))
            except PoleBeforeTermination as ex:
                raise DegenerateParams(str(ex)) from ex
        return out

    return build


def _prod_rule(ups, downs, g1: GaussParams, g2: GaussParams) -> Callable[[int], list[Rat]]:
    """``C_n = prod(ups)_n / prod(downs)_n * [X^n] 2F1(g1) 2F1(g2)``."""

    def build(N: int) -> list[Rat]:
        try:
            prod = product_2f1_coeffs(g1, g2, N)
        except PoleInCoefficient as ex:
            raise DegenerateParams(str(ex)) from ex
        return [_ratio(ups, downs, k) * prod[k] for k in range(N + 1)]

    return build


def _G(a, b, c) -> GaussParams:
    return GaussParams(a, b, c)


# --- parameter lists matched to recurrences -------------------------------------------------


def _hat(*v) -> HypParams:
    return HypParams.of(*v)


def _lists(p: Params) -> dict[str, HypParams]:
    A0, A1, A2, A3 = p.A
    e = p.eps
    h = _H
    return {
        "sol1_rc0": _hat(0, A0, e("-+-+"), e("-++-"), e("++--"), e("++++"), 1 - A0),
        "sol2_rc0": _hat(0, A0 - A2, e("-+-+"), e("-+--"), e("++--"), e("++-+"), 1 - A0 - A2),
        "sol1_rcinf": _hat(0, -A2, e("-+++"), e("+++-"), e("-+--"), e("++-+"), 1 + A2),
        "sol2_rcinf": _hat(0, -A0 - A2, e("-+++"), e("-++-"), e("-+--"), e("-+-+"), 1 - A0 + A2),
        "sol3_rcinf": _hat(0, -A2 - A3, e("+++-"), e("-++-"), e("-+--"), e("++--"), 1 + A2 - A3),
        "sol1_rc1": _hat(h, A0 + h, e("+---"), e("+-++"), e("+--+") + h, e("+-+-") + h, A0 + 1),
        "sol2_rc1": _hat(h, A2 + h, e("--+-"), e("+-++"), e("--++") + h, e("+-+-") + h, A2 + 1),
        "sol3_rc1": _hat(A0 + h, A2 + h, e("+-++"), e("+-+-"), e("+-++") + h, e("+-+-") + h, A0 + A2 + 1),
        "sol4_rc1": _hat(A2 + h, A3 + h, e("+-++"), e("--++"), e("+-++") + h, e("--++") + h, A2 + A3 + 1),
        "sol1_rcq": _hat(0, A0 - A2, e("+-+-"), e("+-++"), e("+---"), e("+--+"), 1 + A0 + A2),
        "sol2_rcq": _hat(0, -A2 + A3, e("--++"), e("+-++"), e("---+"), e("+--+"), 1 + A2 + A3),
        "sol3_rcq": _hat(0, -A2, e("--++"), e("+-+-"), e("----"), e("+--+"), 1 + A2),
    }


HAT_LISTS = tuple(_lists(Params(1, 2, 3, 5)).keys())

# (recurrence, list, kind): kind "rc0" uses the terminating equation, "rc1" the
# homogeneous equation for differences of the non-terminating family.
MATCHES = (
    ("Rc0", "sol1_rc0", "rc0"),
    ("Rc0", "sol2_rc0", "rc0"),
    ("RcInf", "sol1_rcinf", "rc0"),
    ("RcInf", "sol2_rcinf", "rc0"),
    ("RcInf", "sol3_rcinf", "rc0"),
    ("Rc1", "sol1_rc1", "rc1"),
    ("Rc1", "sol2_rc1", "rc1"),
    ("Rc1", "sol3_rc1", "rc1"),
    ("Rc1", "sol4_rc1", "rc1"),
    ("RcQ00", "sol1_rcq", "rc0"),
    ("RcQ00", "sol2_rcq", "rc0"),
    ("RcQ00", "sol3_rcq", "rc0"),
)


def hat_list(name: str, p: Params) -> HypParams:
    lists = _lists(p)
    if name not in lists:
        raise UnknownName(f"unknown parameter list {name!r}")
    return lists[name]


# --- families --------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A named local solution with one or more coefficient expressions."""

    name: str
    operator: str
    point: object
    rho: Callable[[object], Rat]
    exprs: Mapping[str, Callable[[object, int], list[Rat]]]
    kind: str = "A"  # "A" for Params, "DF" for DFParams

    def series(self, params, N: int, expr: str | None = None) -> FrobSeries:
        key = expr or next(iter(self.exprs))
        if key not in self.exprs:
            raise UnknownName(f"{self.name} has no expression {key!r}")
        coeffs = self.exprs[key](params, N)
        pt = self.point if self.point == INF else rat(self.point)
        return FrobSeries(rat(self.rho(params)), tuple(coeffs), pt)


_FAMILIES: dict[str, Family] = {}


def _register(f: Family) -> Family:
    _FAMILIES[f.name] = f
    return f


# Z(A), holomorphic at 0


def _z00_rules(p: Params) -> dict[str, Callable[[int], list[Rat]]]:
    A0, A1, A2, A3 = p.A
    e = p.eps
    L = _lists(p)
    return {
        "z_0": _hyp_rule([e("----"), e("--++")], [rat(3, 2) - A0], L["sol1_rc0"]),
        "z_0_another": _hyp_rule(
            [1 - A0 - A2, e("--+-"), e("--++")], [1 - A0, rat(3, 2) - A0], L["sol2_rc0"]
        ),
        "z_1": _prod_rule(
            [1 - A0], [rat(3, 2) - A0], _G(e("-+-+"), e("-++-"), 1 - A0), _G(e("----"), e("--++"), 1 - A0)
        ),
        "z_1_another": _prod_rule(
            [1 - A0 - A2, 1 - A0 + A2],
            [1 - A0, rat(3, 2) - A0],
            _G(e("-+-+"), e("-+--"), 1 - A0 - A2),
            _G(e("--+-"), e("--++"), 1 - A0 + A2),
        ),
    }


def _lift(rules_of: Callable, key: str):
    return lambda p, N: rules_of(p)[key](N)


def _z00(p: Params, N: int) -> list[Rat]:
    return _z00_rules(p)["z_0"](N)


_register(
    Family(
        "Z:f(0,0)",
        "Z",
        rat(0),
        lambda p: rat(0),
        {k: _lift(_z00_rules, k) for k in ("z_0", "z_0_another", "z_1", "z_1_another")},
    )
)
_register(
    Family(
        "Z:f(0,2A0)",
        "Z",
        rat(0),
        lambda p: 2 * p.A0,
        {"sign_flip": lambda p, N: _z00(Params(-p.A0, p.A1, p.A2, p.A3), N)},
    )
)


def _z1(sign: int):
    def build(p: Params, N: int) -> list[Rat]:
        A0, A1, A2, A3 = p.A
        inner = _z00(Params(-sign * A1, A0, A2, A3), N)
        return series_mul(binomial_series(A0 - _H, N), inner)

    return build


_register(Family("Z:f(1,+A1)", "Z", rat(1), lambda p: _H + p.A1, {"from_origin": _z1(1)}))
_register(Family("Z:f(1,-A1)", "Z", rat(1), lambda p: _H - p.A1, {"from_origin": _z1(-1)}))


def _zinf_rules(p: Params) -> dict[str, Callable[[int], list[Rat]]]:
    A0, A1, A2, A3 = p.A
    e = p.eps
    L = _lists(p)
    h = _H
    return {
        "inf_4f3_1": _hyp_rule([h + A2, e("--+-"), e("+-++")], [1 + A2 - A3, 1 + A2 + A3], L["sol1_rcinf"]),
        "inf_4f3_2": _hyp_rule(
            [h + A2, 1 - A0 + A2, e("+-++"), e("+-+-")], [1 + A2, 1 + A2 - A3, 1 + A2 + A3], L["sol2_rcinf"]
        ),
        "inf_4f3_3": _hyp_rule([h + A2, e("--++"), e("+-++")], [1 + A2, 1 + A2 + A3], L["sol3_rcinf"]),
        "inf_prod_1": _prod_rule(
            [h + A2, 1 + A2],
            [1 + A2 - A3, 1 + A2 + A3],
            _G(e("-+++"), e("+++-"), 1 + A2),
            _G(e("+-++"), e("--+-"), 1 + A2),
        ),
        "inf_prod_2": _prod_rule(
            [h + A2, 1 - A0 + A2, 1 + A0 + A2],
            [1 + A2, 1 + A2 - A3, 1 + A2 + A3],
            _G(e("-+++"), e("-++-"), 1 - A0 + A2),
            _G(e("+-++"), e("+-+-"), 1 + A0 + A2),
        ),
        "inf_prod_3": _prod_rule(
            [h + A2],
            [1 + A2],
            _G(e("+++-"), e("-++-"), 1 + A2 - A3),
            _G(e("+-++"), e("--++"), 1 + A2 + A3),
        ),
    }


_ZINF_KEYS = ("inf_4f3_1", "inf_4f3_2", "inf_4f3_3", "inf_prod_1", "inf_prod_2", "inf_prod_3")
_register(
    Family(
        "Z:f(inf,+A2)",
        "Z",
        INF,
        lambda p: 1 - p.A0 + p.A2,
        {k: _lift(_zinf_rules, k) for k in _ZINF_KEYS},
    )
)


def _zinf_sym(mk: Callable[[Params], Params]):
    return lambda p, N: _zinf_rules(mk(p))["inf_4f3_1"](N)


_register(
    Family(
        "Z:f(inf,-A2)",
        "Z",
        INF,
        lambda p: 1 - p.A0 - p.A2,
        {"sign_flip": _zinf_sym(lambda p: Params(p.A0, p.A1, -p.A2, p.A3))},
    )
)
_register(
    Family(
        "Z:f(inf,+A3)",
        "Z",
        INF,
        lambda p: 1 - p.A0 + p.A3,
        {"swap": _zinf_sym(lambda p: Params(p.A0, p.A1, p.A3, p.A2))},
    )
)
_register(
    Family(
        "Z:f(inf,-A3)",
        "Z",
        INF,
        lambda p: 1 - p.A0 - p.A3,
        {"swap": _zinf_sym(lambda p: Params(p.A0, p.A1, -p.A3, p.A2))},
    )
)


# Q(A)


def _q00_rules(p: Params) -> dict[str, Callable[[int], list[Rat]]]:
    A0, A1, A2, A3 = p.A
    e = p.eps
    L = _lists(p)
    return {
        "q_4f3_1": _hyp_rule([1 + 2 * A2, e("-+++"), e("-++-")], [1 + A2, 1 - A0 + A2], L["sol1_rcq"]),
        "q_4f3_2": _hyp_rule(
            [1 + 2 * A2, 1 + A2 + A3, e("+++-"), e("-++-")], [1 + A2, 1 - A0 + A2, 1 + A0 + A2], L["sol2_rcq"]
        ),
        "q_4f3_3": _hyp_rule([1 + 2 * A2, e("++++"), e("-++-")], [1 - A0 + A2, 1 + A0 + A2], L["sol3_rcq"]),
        "q_prod_1": _prod_rule(
            [1 + 2 * A2],
            [1 + A2],
            _G(e("-+++"), e("-++-"), 1 - A0 + A2),
            _G(e("+-+-"), e("+-++"), 1 + A0 + A2),
        ),
        "q_prod_2": _prod_rule(
            [1 + 2 * A2, 1 + A2 + A3, 1 + A2 - A3],
            [1 + A2, 1 - A0 + A2, 1 + A0 + A2],
            _G(e("+++-"), e("-++-"), 1 + A2 - A3),
            _G(e("--++"), e("+-++"), 1 + A2 + A3),
        ),
        "q_prod_3": _prod_rule(
            [1 + A2, 1 + 2 * A2],
            [1 - A0 + A2, 1 + A0 + A2],
            _G(e("++++"), e("-++-"), 1 + A2),
            _G(e("--++"), e("+-+-"), 1 + A2),
        ),
    }


def _q0p_rules(p: Params) -> dict[str, Callable[[int], list[Rat]]]:
    A0, A1, A2, A3 = p.A
    e = p.eps
    return {
        "qp_prod_1": _prod_rule(
            [1 + A0 + A2],
            [1 + A0],
            _G(e("+--+"), e("+---"), 1 + A0 - A2),
            _G(e("++++"), e("+++-"), 1 + A0 + A2),
        ),
        "qp_prod_2": _prod_rule(
            [1 + A0 - A3, 1 + A0 + A3],
            [1 + A0, 1 + A0 - A2],
            _G(e("+--+"), e("+-++"), 1 + A0 + A3),
            _G(e("++--"), e("+++-"), 1 + A0 - A3),
        ),
        "qp_prod_3": _prod_rule(
            [1 + A0],
            [1 + A0 - A2],
            _G(e("+-+-"), e("+--+"), 1 + A0),
            _G(e("++--"), e("++++"), 1 + A0),
        ),
    }


_Q00_KEYS = ("q_4f3_1", "q_4f3_2", "q_4f3_3", "q_prod_1", "q_prod_2", "q_prod_3")
_Q0P_KEYS = ("qp_prod_1", "qp_prod_2", "qp_prod_3")


def _q00(p: Params, N: int) -> list[Rat]:
    return _q00_rules(p)["q_4f3_1"](N)


def _q0p(p: Params, N: int) -> list[Rat]:
    return _q0p_rules(p)["qp_prod_1"](N)


_register(Family("Q:f(0,0)", "Q", rat(0), lambda p: rat(0), {k: _lift(_q00_rules, k) for k in _Q00_KEYS}))
_register(Family("Q:f(0,+)", "Q", rat(0), lambda p: p.A0 - p.A2, {k: _lift(_q0p_rules, k) for k in _Q0P_KEYS}))
_register(
    Family(
        "Q:f(0,-)",
        "Q",
        rat(0),
        lambda p: -p.A0 - p.A2,
        {"sign_flip": lambda p, N: _q0p(Params(-p.A0, p.A1, p.A2, p.A3), N)},
    )
)
_register(
    Family(
        "Q:f(1,0)",
        "Q",
        rat(1),
        lambda p: rat(0),
        {"from_origin": lambda p, N: _q00(Params(p.A1, p.A0, p.A2, p.A3), N)},
    )
)
_register(
    Family(
        "Q:f(1,+)",
        "Q",
        rat(1),
        lambda p: p.A1 - p.A2,
        {"from_origin": lambda p, N: _q0p(Params(p.A1, p.A0, p.A2, p.A3), N)},
    )
)
_register(
    Family(
        "Q:f(1,-)",
        "Q",
        rat(1),
        lambda p: -p.A1 - p.A2,
        {"from_origin": lambda p, N: _q0p(Params(-p.A1, p.A0, p.A2, p.A3), N)},
    )
)
_register(
    Family(
        "Q:f(inf,0)",
        "Q",
        INF,
        lambda p: 1 + 2 * p.A2,
        {"from_origin": lambda p, N: _q00(Params(p.A3, p.A1, p.A2, p.A0), N)},
    )
)
_register(
    Family(
        "Q:f(inf,+)",
        "Q",
        INF,
        lambda p: 1 + p.A2 + p.A3,
        {"from_origin": lambda p, N: _q0p(Params(p.A3, p.A1, p.A2, p.A0), N)},
    )
)
_register(
    Family(
        "Q:f(inf,-)",
        "Q",
        INF,
        lambda p: 1 + p.A2 - p.A3,
        {"from_origin": lambda p, N: _q0p(Params(-p.A3, p.A1, p.A2, p.A0), N)},
    )
)


# Dotsenko-Fateev S(a, b, c, g)


def _df00_rules(q: DFParams) -> dict[str, Callable[[int], list[Rat]]]:
    a, b, c, g = q.a, q.b, q.c, q.g
    g2 = g / 2
    return {
        "df00_1": _prod_rule(
            [-a - c - g], [-a - c - g2], _G(-c, -a - b - c - g2 - 1, -a - c), _G(b + 1, -a - g2, -a - c - g)
        ),
        "df00_2": _prod_rule(
            [-2 * a - b - c - g - 1, b - c + 1],
            [-a - c, -a - c - g2],
            _G(-c, -c - g2, b - c + 1),
            _G(-a, -a - g2, -2 * a - b - c - g - 1),
        ),
        "df00_3": _prod_rule(
            [-a - c - g2], [-a - c], _G(-c, -a - b - c - g - 1, -a - c - g2), _G(b + 1, -a, -a - c - g2)
        ),
    }


def _df01_rules(q: DFParams) -> dict[str, Callable[[int], list[Rat]]]:
    a, b, c, g = q.a, q.b, q.c, q.g
    g2 = g / 2
    return {
        "df01_1": _prod_rule([1 - g], [1 - g2], _G(b + 1, -a - g2, -a - c - g), _G(a + 1, -b - g2, a + c + 2)),
        "df01_2": _prod_rule(
            [1 - g, a + b + 2, -a - b - g],
            [1 - g2, -a - c - g, a + c + 2],
            _G(c + 1, -a - g2, -a - b - g),
            _G(a + 1, -c - g2, a + b + 2),
        ),
        "df01_3": _prod_rule(
            [1 - g2, 1 - g],
            [-a - c - g, a + c + 2],
            _G(a + 1, -a - b - c - g - 1, 1 - g2),
            _G(b + 1, c + 1, 1 - g2),
        ),
    }


def _df01_pfaff_rules(q: DFParams) -> dict[str, Callable[[int], list[Rat]]]:
    a, b, c, g = q.a, q.b, q.c, q.g
    g2 = g / 2
    return {
        "df01_pfaff_1": _prod_rule(
            [1 - g], [1 - g2], _G(c + 1, -b - g2, a + c + 2), _G(b + 1, -c - g2, -a - c - g)
        ),
        "df01_pfaff_2": _prod_rule(
            [1 - g, b + c + 2, -b - c - g],
            [1 - g2, a + c + 2, -a - c - g],
            _G(c + 1, -a - g2, b + c + 2),
            _G(a + 1, -c - g2, -b - c - g),
        ),
        "df01_pfaff_3": _prod_rule(
            [1 - g2, 1 - g],
            [a + c + 2, -a - c - g],
            _G(a + 1, b + 1, 1 - g2),
            _G(c + 1, -a - b - c - g - 1, 1 - g2),
        ),
    }


def _df00(q: DFParams, N: int, key: str = "df00_1") -> list[Rat]:
    inner = _df00_rules(q)[key](N)
    return series_mul(binomial_series(q.b + q.c + 1, N), inner)


def _df01(q: DFParams, N: int, key: str = "df01_1") -> list[Rat]:
    inner = _df01_rules(q)[key](N)
    return series_mul(binomial_series(q.b + q.c + 1, N), inner)


def _df01_pfaff(q: DFParams, N: int, key: str) -> list[Rat]:
    inner = pfaff_reexpand(_df01_pfaff_rules(q)[key](N))
    return series_mul(binomial_series(q.b + q.c + q.g, N), inner)


def _df00_pfaff(q: DFParams, N: int) -> list[Rat]:
    a, b, c, g = q.a, q.b, q.c, q.g
    inner = pfaff_reexpand(_df00(DFParams(a, -a - b - c - g - 2, c, g), N))
    return series_mul(binomial_series(2 * c, N), inner)


def _df02_args(q: DFParams) -> DFParams:
    a, b, c, g = q.a, q.b, q.c, q.g
    return DFParams(-c - g / 2 - 1, a + b + c + g / 2 + 1, -a - g / 2 - 1, g)


_register(
    Family(
        "DF:f(0,0)",
        "DF",
        rat(0),
        lambda q: rat(0),
        {
            **{k: (lambda q, N, k=k: _df00(q, N, k)) for k in ("df00_1", "df00_2", "df00_3")},
            "df00_pfaff": _df00_pfaff,
        },
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(0,1)",
        "DF",
        rat(0),
        lambda q: q.a + q.c + 1,
        {
            **{k: (lambda q, N, k=k: _df01(q, N, k)) for k in ("df01_1", "df01_2", "df01_3")},
            **{k: (lambda q, N, k=k: _df01_pfaff(q, N, k)) for k in ("df01_pfaff_1", "df01_pfaff_2", "df01_pfaff_3")},
        },
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(0,2)",
        "DF",
        rat(0),
        lambda q: 2 * q.a + 2 * q.c + q.g + 2,
        {"shifted": lambda q, N: _df00(_df02_args(q), N)},
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(1,0)",
        "DF",
        rat(1),
        lambda q: rat(0),
        {"swap": lambda q, N: _df00(DFParams(q.b, q.a, q.c, q.g), N)},
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(1,1)",
        "DF",
        rat(1),
        lambda q: q.b + q.c + 1,
        {"swap": lambda q, N: _df01(DFParams(q.b, q.a, q.c, q.g), N)},
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(1,2)",
        "DF",
        rat(1),
        lambda q: 2 * q.b + 2 * q.c + q.g + 2,
        {
            "swap": lambda q, N: _df00(_df02_args(DFParams(q.b, q.a, q.c, q.g)), N),
            "explicit": lambda q, N: _df00(
                DFParams(-q.c - q.g / 2 - 1, q.a + q.b + q.c + q.g / 2 + 1, -q.b - q.g / 2 - 1, q.g), N
            ),
        },
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(inf,0)",
        "DF",
        INF,
        lambda q: -2 * q.c,
        {"from_origin": lambda q, N: _df00(DFParams(-q.a - q.b - q.c - q.g - 2, q.b, q.c, q.g), N)},
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(inf,1)",
        "DF",
        INF,
        lambda q: -q.a - q.b - 2 * q.c - q.g - 1,
        {"from_origin": lambda q, N: _df01(DFParams(q.a, q.c, q.b, q.g), N)},
        kind="DF",
    )
)
_register(
    Family(
        "DF:f(inf,2)",
        "DF",
        INF,
        lambda q: -2 * q.a - 2 * q.b - 2 * q.c - q.g - 2,
        {"from_origin": lambda q, N: _df00(DFParams(q.a, q.c, q.b, q.g), N)},
        kind="DF",
    )
)


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def family(name: str) -> Family:
    if name not in _FAMILIES:
        raise UnknownName(f"unknown solution family {name!r}")
    return _FAMILIES[name]


def expression_ids(name: str) -> list[str]:
    return list(family(name).exprs)


def solution_family(name: str, params, N: int, expr: str | None = None) -> FrobSeries:
    """Coefficients ``C_0..C_N`` of a named local solution."""
    return family(name).series(params, N, expr)


# --- Pfaff transforms ------------------------------------------------------------------------


def pfaff_q(p: Params, N: int, which: str = "0") -> tuple[bool, Rat]:
    """Pfaff transform of the Q solutions as a coefficient identity.

    Returns ``(holds, C)`` where ``C`` is the observed constant between the
    two sides, fixed by the leading coefficient.
    """
    A0, A1, A2, A3 = p.A
    swapped = Params(A0, A3, A2, A1)
    if which == "0":
        lhs = _q00(p, N)
        rhs = series_mul(binomial_series(-(1 + 2 * A2), N), pfaff_reexpand(_q00(swapped, N)))
    elif which == "+":
        lhs = _q0p(p, N)
        lam = -(1 + 2 * A2) - (A0 - A2)
        rhs = series_mul(binomial_series(lam, N), pfaff_reexpand(_q0p(swapped, N)))
    else:
        raise ValueError("which must be '0' or '+'")
    C = lhs[0] / rhs[0]
    return all(x == C * y for x, y in zip(lhs, rhs)), C


def pfaff_df(q: DFParams, N: int) -> bool:
    """``f(0,0)`` equals ``(1-x)^(2c) f(0,0)(a, -a-b-c-g-2, c, g; x/(x-1))`` coefficientwise."""
    return _df00(q, N) == _df00_pfaff(q, N)
