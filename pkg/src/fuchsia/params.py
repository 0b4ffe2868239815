"""Parameter dictionaries and seeded random draws."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import MissingParam
from .exact_algebra import Rat, rat, rat_to_json

__all__ = ["Params", "DFParams", "GaussParams", "parse_params", "draw_params", "is_degenerate"]


def _is_int(q: Rat) -> bool:
    return q.denominator == 1


@dataclass(frozen=True)
class Params:
    """The four exponent parameters ``A0..A3``."""

    A0: Rat
    A1: Rat
    A2: Rat
    A3: Rat

    def __post_init__(self):
        for name in ("A0", "A1", "A2", "A3"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, *values) -> "Params":
        return cls(*(rat(v) for v in values))

    @classmethod
    def from_mapping(cls, m: Mapping) -> "Params":
        missing = [k for k in ("A0", "A1", "A2", "A3") if k not in m]
        if missing:
            raise MissingParam(f"missing parameters: {', '.join(missing)}")
        return cls(*(rat(m[k]) for k in ("A0", "A1", "A2", "A3")))

    @property
    def A(self) -> tuple[Rat, Rat, Rat, Rat]:
        return (self.A0, self.A1, self.A2, self.A3)

    def replace(self, **kw) -> "Params":
        d = self.as_dict()
        d.update({k: rat(v) for k, v in kw.items()})
        return Params.from_mapping(d)

    def as_dict(self) -> dict[str, Rat]:
        return {"A0": self.A0, "A1": self.A1, "A2": self.A2, "A3": self.A3}

    def to_json(self) -> dict[str, str]:
        return {k: rat_to_json(v) for k, v in self.as_dict().items()}

    def eps(self, signs: str) -> Rat:
        """``(e0*A0 + e1*A1 + e2*A2 + e3*A3 + 1)/2`` for a sign string like ``"+-++"``."""
        if len(signs) != 4 or set(signs) - {"+", "-"}:
            raise ValueError(f"bad sign pattern {signs!r}")
        total = rat(1)
        for s, a in zip(signs, self.A):
            total += a if s == "+" else -a
        return total / 2

    # Zagier-system parameters
    @property
    def a(self) -> tuple[Rat, Rat, Rat, Rat]:
        A0 = self.A0
        return (2 * A0 - 3, self.A1**2 - (A0 - 1) ** 2, self.A2**2 - (A0 - 1) ** 2, self.A3**2 - (A0 - 1) ** 2)

    @property
    def b(self) -> tuple[Rat, Rat, Rat]:
        _, a1, a2, a3 = self.a
        return ((-a1 + a2 + a3) / 2, (a1 - a2 + a3) / 2, (a1 + a2 - a3) / 2)

    def to_df(self) -> "DFParams":
        """Dotsenko-Fateev parameters; inverse of ``DFParams.to_A``."""
        return DFParams(self.eps("+-++") - 1, self.eps("-+++") - 1, self.eps("+++-") - 1, -2 * self.A2)


@dataclass(frozen=True)
class DFParams:
    """Parameters ``(a, b, c, g)`` of the third-order Dotsenko-Fateev operator."""

    a: Rat
    b: Rat
    c: Rat
    g: Rat

    def __post_init__(self):
        for name in ("a", "b", "c", "g"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def from_mapping(cls, m: Mapping) -> "DFParams":
        missing = [k for k in ("a", "b", "c", "g") if k not in m]
        if missing:
            raise MissingParam(f"missing parameters: {', '.join(missing)}")
        return cls(*(rat(m[k]) for k in ("a", "b", "c", "g")))

    def to_A(self) -> Params:
        a, b, c, g = self.a, self.b, self.c, self.g
        return Params((2 * a + 2 * c + g + 2) / 2, (2 * b + 2 * c + g + 2) / 2, -g / 2, (2 * a + 2 * b + g + 2) / 2)

    def as_dict(self) -> dict[str, Rat]:
        return {"a": self.a, "b": self.b, "c": self.c, "g": self.g}

    def to_json(self) -> dict[str, str]:
        return {k: rat_to_json(v) for k, v in self.as_dict().items()}


@dataclass(frozen=True)
class GaussParams:
    a: Rat
    b: Rat
    c: Rat

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, rat(getattr(self, name)))


def parse_params(text: str | None) -> dict[str, Rat]:
    """Parse ``"A0=1/3,A1=2/7"`` into a dict of rationals."""
    out: dict[str, Rat] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = rat(v.strip())
    return out


_DENOMS = (7, 11, 13, 17, 19, 23)


def is_degenerate(p: Params) -> bool:
    """True if some ``2*A_i``, ``A_i +- A_j`` or ``A_eps`` is an integer."""
    A = p.A
    for a in A:
        if _is_int(2 * a):
            return True
    for i in range(4):
        for j in range(i + 1, 4):
            if _is_int(A[i] + A[j]) or _is_int(A[i] - A[j]):
                return True
    for s0 in "+-":
        for s1 in "+-":
            for s2 in "+-":
                for s3 in "+-":
                    e = p.eps(s0 + s1 + s2 + s3)
                    if _is_int(e) or _is_int(2 * e):
                        return True
    return False


def random_rat(rng: random.Random, bound: int = 30) -> Rat:
    q = rng.choice(_DENOMS)
    while True:
        num = rng.randint(-bound, bound)
        if num % q:
            return rat(num) / q


def draw_params(seed: int, draws: int) -> Iterator[Params]:
    """Yield ``draws`` non-degenerate parameter sets from a seeded stream."""
    rng = random.Random(seed)
    produced = 0
    while produced < draws:
        p = Params(*(random_rat(rng) for _ in range(4)))
        if is_degenerate(p):
            continue
        produced += 1
        yield p
