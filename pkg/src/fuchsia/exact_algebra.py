"""Exact rational arithmetic: scalars, univariate polynomials and rational
functions, and sparse trivariate polynomials.

Scalars are ``gmpy2.mpq``.  Univariate objects are dense coefficient lists
(lowest degree first) and are used both for functions of ``x`` and for
functions of a recurrence index ``n``.  Arithmetic operators accept plain
ints, ``fractions.Fraction`` and ``mpq`` on either side, so higher layers can
write formulas once and evaluate them over any of these types.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from gmpy2 import mpq

Rat = type(mpq(0))

__all__ = [
    "Rat",
    "rat",
    "Poly",
    "RatFun",
    "MPoly",
    "MRatFun",
    "poly_derivative",
    "rational_roots",
    "mpoly_partial",
    "rat_to_json",
    "rat_from_json",
]

_ZERO = mpq(0)
_ONE = mpq(1)


def rat(value, den=None) -> Rat:
    """Coerce ``value`` (int, Fraction, mpq, or a "p/q" string) to ``mpq``.

    With ``den`` given, returns ``value / den``.
    """
    if den is not None:
        return rat(value) / rat(den)
    if isinstance(value, Rat):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    if isinstance(value, bool):
        return mpq(int(value))
    if isinstance(value, int):
        return mpq(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Rat, Fraction)) and not isinstance(value, bool)


def rat_to_json(value) -> str:
    q = rat(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_from_json(text) -> Rat:
    return rat(text)


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with ``mpq`` coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are removed,
    so the zero polynomial has an empty coefficient list.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: list[Rat] = c

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        p = cls.__new__(cls)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([_ZERO, _ONE])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls._raw([_ZERO] * k + [rat(c)])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls._raw([-rat(r), _ONE])
        return p

    # basic queries -------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Rat:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def coeff(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, RatFun):
            return other == self
        if _is_scalar(other):
            return self.coeffs == ([rat(other)] if other != 0 else [])
        return NotImplemented

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"({rat_to_json(c)})*{mono}"
            else:
                term = f"({rat_to_json(c)})"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly._raw([rat(other)])
        return None

    def __neg__(self) -> "Poly":
        return Poly._raw([-a for a in self.coeffs])

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = rat(other)
            if c == 0:
                return Poly._raw([])
            return Poly._raw([a * c for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw([_ONE])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if _is_scalar(other):
            c = rat(other)
            if c == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            return Poly._raw([a / c for a in self.coeffs])
        if isinstance(other, (Poly, RatFun)):
            return RatFun(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return RatFun(Poly.const(other)) / RatFun(self)
        return NotImplemented

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return Poly._raw([]), Poly._raw(r)
        inv = 1 / other.lc
        bc = other.coeffs
        q = [_ZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c != 0:
                for j in range(db + 1):
                    r[k + j] -= c * bc[j]
        return Poly._raw(q), Poly._raw(r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(Poly._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(Poly._coerce(other))[1]

    # evaluation and calculus ---------------------------------------------
    def __call__(self, value):
        """Horner evaluation; works for scalars, Poly, RatFun and floats."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        if isinstance(result, int):
            return rat(result)
        return result

    def eval_float(self, value: float) -> float:
        result = 0.0
        for c in reversed(self.coeffs):
            result = result * value + float(c)
        return result

    def derivative(self, k: int = 1) -> "Poly":
        c = self.coeffs
        for _ in range(k):
            c = [c[i] * i for i in range(1, len(c))]
        return Poly._raw(list(c))

    def shift(self, a) -> "Poly":
        """Return ``p(x + a)``."""
        a = rat(a)
        if a == 0:
            return self
        # synthetic Taylor shift
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] += a * c[j + 1]
        return Poly._raw(c)

    def scale(self, a) -> "Poly":
        """Return ``p(a*x)``."""
        a = rat(a)
        out = []
        f = _ONE
        for c in self.coeffs:
            out.append(c * f)
            f *= a
        return Poly._raw(out)

    def compose(self, other: "Poly") -> "Poly":
        result = Poly._raw([])
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def reverse(self, degree: int | None = None) -> "Poly":
        """Return ``x**d * p(1/x)`` with ``d = degree`` (default: own degree)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reverse degree below polynomial degree")
        c = list(self.coeffs) + [_ZERO] * (d - self.degree)
        return Poly._raw(c[::-1])

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    # normalisation -------------------------------------------------------
    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.lc

    def content(self) -> Rat:
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if not self.coeffs:
            return _ONE
        from math import gcd, lcm

        num = reduce(gcd, (int(a.numerator) for a in self.coeffs))
        den = reduce(lcm, (int(a.denominator) for a in self.coeffs))
        return mpq(num, den)

    def primitive(self) -> "Poly":
        return self / self.content() if self.coeffs else self

    def to_json(self) -> list[str]:
        return [rat_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "Poly":
        return cls([rat_from_json(c) for c in data])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def poly_derivative(p: Poly, k: int = 1) -> Poly:
    return p.derivative(k)


def rational_roots(p: Poly) -> tuple[list[tuple[Rat, int]], Poly]:
    """Rational roots of ``p`` with multiplicities, plus the residual factor.

    The residual is the monic part of ``p`` free of rational roots; callers
    use its degree to detect exponents outside Q.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    if p.degree == 0:
        return [], Poly.const(1)
    # factorisation over Q is delegated to sympy; the roots are re-verified
    from sympy import Poly as SPoly, QQ, Symbol

    x = Symbol("x")
    sp = SPoly([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(p.coeffs)], x, domain=QQ)
    _, factors = sp.factor_list()
    roots: list[tuple[Rat, int]] = []
    residual = Poly.const(1)
    for fac, mult in factors:
        cs = [rat(Fraction(int(c.p), int(c.q))) for c in reversed(fac.all_coeffs())]
        f = Poly(cs)
        if f.degree == 1:
            r = -f.coeffs[0] / f.coeffs[1]
            if p(r) != 0:  # pragma: no cover - defensive
                raise ArithmeticError("factorisation returned a non-root")
            roots.append((r, mult))
        else:
            residual = residual * f.monic() ** mult
    roots.sort(key=lambda t: t[0])
    return roots, residual


# ---------------------------------------------------------------------------
# univariate rational functions
# ---------------------------------------------------------------------------


class RatFun:
    """Reduced quotient of two ``Poly`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly._raw([_ONE])
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = Poly._raw([_ONE])
            elif den.degree == 0:
                num = num / den.lc
                den = Poly._raw([_ONE])
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
                lc = den.lc
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def x(cls) -> "RatFun":
        return cls(Poly.x(), reduced=False)

    @staticmethod
    def _coerce(other) -> "RatFun | None":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other, Poly._raw([_ONE]), reduced=True)
        if _is_scalar(other):
            return RatFun(Poly.const(other), Poly._raw([_ONE]), reduced=True)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __neg__(self):
        return RatFun(-self.num, self.den, reduced=True)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            if self.den.degree == 0:
                return RatFun(self.num + o.num, self.den, reduced=True)
            return RatFun(self.num + o.num, self.den)
        if o.den.degree == 0:
            return RatFun(self.num + o.num * self.den, self.den, reduced=True)
        if self.den.degree == 0:
            return RatFun(self.num * o.den + o.num, o.den, reduced=True)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)
        a = o.den // g
        b = self.den // g
        return RatFun(self.num * a + o.num * b, self.den * a)

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = rat(other)
            if c == 0:
                return RatFun(Poly._raw([]), reduced=False)
            return RatFun(self.num * c, self.den, reduced=True)
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFun(self.num * o.num, self.den, reduced=True)
        # cross-cancel before multiplying
        g1 = poly_gcd(self.num, o.den) if o.den.degree > 0 else None
        g2 = poly_gcd(o.num, self.den) if self.den.degree > 0 else None
        n1, d2 = self.num, o.den
        if g1 is not None and g1.degree > 0:
            n1, d2 = n1 // g1, d2 // g1
        n2, d1 = o.num, self.den
        if g2 is not None and g2.degree > 0:
            n2, d1 = n2 // g2, d1 // g2
        num = n1 * n2
        den = d1 * d2
        lc = den.lc
        if num.is_zero():
            return RatFun(num)
        return RatFun(num / lc, den / lc, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.lc
        return RatFun(self.den / lc, self.num / lc, reduced=True)

    def __truediv__(self, other):
        if _is_scalar(other):
            c = rat(other)
            if c == 0:
                raise ZeroDivisionError("rational function divided by zero")
            return RatFun(self.num / c, self.den, reduced=True)
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RatFun._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RatFun":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun(self.num**k, self.den**k, reduced=True)

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    def eval_float(self, value: float) -> float:
        return self.num.eval_float(value) / self.den.eval_float(value)

    def derivative(self, k: int = 1) -> "RatFun":
        r = self
        for _ in range(k):
            if r.den.degree == 0:
                r = RatFun(r.num.derivative(), r.den, reduced=True)
            else:
                r = RatFun(r.num.derivative() * r.den - r.num * r.den.derivative(), r.den * r.den)
        return r

    def shift(self, a) -> "RatFun":
        """Return ``f(x + a)``."""
        return RatFun(self.num.shift(a), self.den.shift(a))

    def compose(self, other: "RatFun | Poly") -> "RatFun":
        o = RatFun._coerce(other)
        return self.num(o) / self.den(o) if not self.num.is_zero() else RatFun(Poly())

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFun":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def as_ratfun(value) -> RatFun:
    r = RatFun._coerce(value)
    if r is None:
        raise TypeError(f"cannot interpret {value!r} as a rational function")
    return r


# ---------------------------------------------------------------------------
# trivariate sparse polynomials
# ---------------------------------------------------------------------------

_BITS = 12
_MASK = (1 << _BITS) - 1
NVARS = 3


def _pack(exps: Sequence[int]) -> int:
    e1, e2, e3 = exps
    return (e1 << (2 * _BITS)) | (e2 << _BITS) | e3


def _unpack(key: int) -> tuple[int, int, int]:
    return (key >> (2 * _BITS), (key >> _BITS) & _MASK, key & _MASK)


class MPoly:
    """Sparse polynomial in ``t1, t2, t3`` with ``mpq`` coefficients.

    Terms are stored in a dict keyed by a packed exponent integer so that
    monomial multiplication is a single integer addition.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[int, Rat] = {}
        if terms:
            for k, v in terms.items():
                key = _pack(k) if isinstance(k, tuple) else k
                v = rat(v)
                if v != 0:
                    self.terms[key] = v

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "MPoly":
        c = rat(c)
        return cls._raw({0: c} if c != 0 else {})

    @classmethod
    def var(cls, i: int) -> "MPoly":
        e = [0, 0, 0]
        e[i] = 1
        return cls._raw({_pack(e): _ONE})

    @classmethod
    def gens(cls) -> tuple["MPoly", "MPoly", "MPoly"]:
        return cls.var(0), cls.var(1), cls.var(2)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if _is_scalar(other):
            return self.terms == MPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _coerce(other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if _is_scalar(other):
            return MPoly.const(other)
        return None

    def __neg__(self):
        return MPoly._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            s = out.get(k, _ZERO) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return MPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            s = out.get(k, _ZERO) - v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return MPoly._raw(out)

    def __rsub__(self, other):
        o = MPoly._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            c = rat(other)
            if c == 0:
                return MPoly._raw({})
            return MPoly._raw({k: v * c for k, v in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Rat] = {}
        get = out.get
        bi = list(b.items())
        for ka, va in a.items():
            for kb, vb in bi:
                k = ka + kb
                out[k] = get(k, _ZERO) + va * vb
        return MPoly._raw({k: v for k, v in out.items() if v != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        result = MPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def partial(self, i: int) -> "MPoly":
        shift = (2 - i) * _BITS
        out = {}
        for k, v in self.terms.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - (1 << shift)] = v * e
        return MPoly._raw(out)

    def total_degree(self) -> int:
        return max((sum(_unpack(k)) for k in self.terms), default=-1)

    def subs(self, values: Sequence) -> Rat:
        """Evaluate at a point of Q^3."""
        vals = [rat(v) for v in values]
        total = _ZERO
        for k, c in self.terms.items():
            e = _unpack(k)
            total += c * vals[0] ** e[0] * vals[1] ** e[1] * vals[2] ** e[2]
        return total

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Rename variables: ``t_i`` becomes ``t_{perm[i]}``."""
        out = {}
        for k, c in self.terms.items():
            e = _unpack(k)
            ne = [0, 0, 0]
            for i in range(3):
                ne[perm[i]] = e[i]
            out[_pack(ne)] = c
        return MPoly._raw(out)

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], Rat]]:
        """Terms in graded-lex order with ``t1 > t2 > t3`` (largest first)."""
        items = [(_unpack(k), v) for k, v in self.terms.items()]
        items.sort(key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        return items

    def content(self) -> Rat:
        if not self.terms:
            return _ONE
        from math import gcd, lcm

        vals = list(self.terms.values())
        num = reduce(gcd, (int(a.numerator) for a in vals))
        den = reduce(lcm, (int(a.denominator) for a in vals))
        return mpq(num, den)

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"t{i + 1}^{p}" if p > 1 else f"t{i + 1}" for i, p in enumerate(e) if p)
            parts.append(f"({rat_to_json(c)})" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(parts) + ")"

    def to_json(self) -> list[dict]:
        return [{"coeff": rat_to_json(c), "exps": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "MPoly":
        out = MPoly()
        for item in data:
            out = out + MPoly({tuple(item["exps"]): rat_from_json(item["coeff"])})
        return out


def mpoly_partial(p: MPoly, i: int) -> MPoly:
    return p.partial(i)


class MRatFun:
    """Quotient of two ``MPoly``.

    No multivariate gcd is taken: equality is decided by cross
    multiplication and only the rational content is normalised.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, MPoly):
            num = MPoly.const(num)
        if den is None:
            den = MPoly.const(1)
        elif not isinstance(den, MPoly):
            den = MPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MPoly.const(1)
        else:
            c = den.content()
            lead = den.sorted_terms()[0][1]
            c = c if lead > 0 else -c
            if c != 1:
                num = num * (1 / c)
                den = den * (1 / c)
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other) -> "MRatFun | None":
        if isinstance(other, MRatFun):
            return other
        if isinstance(other, MPoly) or _is_scalar(other):
            return MRatFun(other)
        return None

    def __eq__(self, other) -> bool:
        o = MRatFun._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):  # pragma: no cover - equality is not structural
        raise TypeError("MRatFun is unhashable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __neg__(self):
        return MRatFun(-self.num, self.den)

    def __add__(self, other):
        o = MRatFun._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return MRatFun(self.num + o.num, self.den)
        return MRatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = MRatFun._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = MRatFun._coerce(other)
        if o is None:
            return NotImplemented
        return MRatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = MRatFun._coerce(other)
        if o is None:
            return NotImplemented
        return MRatFun(self.num * o.den, self.den * o.num)

    def partial(self, i: int) -> "MRatFun":
        return MRatFun(
            self.num.partial(i) * self.den - self.num * self.den.partial(i),
            self.den * self.den,
        )

    def subs(self, values: Sequence) -> Rat:
        return self.num.subs(values) / self.den.subs(values)

    def permute(self, perm: Sequence[int]) -> "MRatFun":
        return MRatFun(self.num.permute(perm), self.den.permute(perm))

    def __repr__(self) -> str:
        return f"MRatFun({self.num!r} / {self.den!r})"
