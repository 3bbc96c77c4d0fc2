"""Exact numbers of the form a + b*sqrt(d) with rational a, b.

All the constants attached to the existence bounds live in Q(sqrt(q)), so
comparisons against 1, against integers and against each other can be
decided without floating point.  ``d`` is the squarefree part of q; when q
is a perfect square d == 1 and the numbers are plain rationals.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return (s, d) with n == s*s*d and d squarefree."""
    if n < 1:
        raise ValueError("need a positive integer")
    s, d, m, f = 1, 1, n, 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            s *= f
        if m % f == 0:
            m //= f
            d *= f
        f += 1
    return s, d * m


@total_ordering
@dataclass(frozen=True)
class Surd:
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), self.d
        if d < 1 or squarefree_decomposition(d)[0] != 1:
            raise ValueError(f"radicand {d} is not squarefree")
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, n: int) -> Surd:
        s, d = squarefree_decomposition(n)
        return cls(Fraction(0), Fraction(s), d) if d > 1 else cls(Fraction(s))

    @classmethod
    def coerce(cls, x) -> Surd:
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise TypeError(f"cannot treat {x!r} as a Surd")

    def _common(self, other) -> tuple[Surd, Surd, int]:
        other = Surd.coerce(other)
        if self.d == 1:
            return self, other, other.d
        if other.d == 1 or other.d == self.d:
            return self, other, self.d
        raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        x, y, d = self._common(other)
        return Surd(x.a + y.a, x.b + y.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-Surd.coerce(other))

    def __rsub__(self, other):
        return Surd.coerce(other) - self

    def __mul__(self, other):
        x, y, d = self._common(other)
        return Surd(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d)

    __rmul__ = __mul__

    def inverse(self) -> Surd:
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return Surd(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        return self * Surd.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Surd.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = Surd(Fraction(1)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = a * a - b * b * d
        return sa if diff > 0 else sb

    def __eq__(self, other):
        try:
            x, y, _ = self._common(other)
        except (TypeError, ValueError):
            return NotImplemented
        return x.a == y.a and x.b == y.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def floor(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        w = math.lcm(self.a.denominator, self.b.denominator)
        u, v = int(self.a * w), int(self.b * w)
        r = math.isqrt(v * v * self.d)  # sqrt is irrational here
        bfloor = r if v > 0 else -(r + 1)
        return (u + bfloor) // w

    def ceil(self) -> int:
        return -((-self).floor())

    def __float__(self):
        return float(self.to_decimal(30))

    def to_decimal(self, digits: int = 12) -> Decimal:
        """Value rounded to ``digits`` decimal places."""
        with localcontext() as ctx:
            ctx.prec = digits + 30 + len(str(self.floor()))
            val = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            if self.b:
                val += (Decimal(self.b.numerator) / Decimal(self.b.denominator)
                        * Decimal(self.d).sqrt())
            return val.quantize(Decimal(1).scaleb(-digits))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = math.lcm(self.a.denominator, self.b.denominator)
        u, v = int(self.a * w), int(self.b * w)
        rad = f"sqrt({self.d})" if abs(v) == 1 else f"{abs(v)}*sqrt({self.d})"
        if u == 0:
            body = rad if v > 0 else f"-{rad}"
        else:
            body = f"{u}{'+' if v > 0 else '-'}{rad}"
        if w == 1:
            return body
        return f"({body})/{w}" if u else f"{body}/{w}"

    def __repr__(self) -> str:
        return f"Surd({self})"

    @classmethod
    def parse(cls, text: str) -> Surd:
        """Parse ``p/q``, decimals, ``u+v*sqrt(d)``, ``(u+v*sqrt(d))/w`` and similar."""
        s = text.replace(" ", "")
        m = re.fullmatch(r"\((.*)\)/(\d+)", s)
        if m:
            return cls.parse(m.group(1)) / int(m.group(2))
        total = cls(Fraction(0))
        for term in re.findall(r"[+-]?[^+-]+", s):
            rm = re.fullmatch(r"([+-]?)(?:([\d./]+)\*?)?sqrt\((\d+)\)(?:/(\d+))?", term)
            if rm:
                coef = Fraction(rm.group(2)) if rm.group(2) else Fraction(1)
                if rm.group(1) == "-":
                    coef = -coef
                if rm.group(4):
                    coef /= int(rm.group(4))
                total = total + coef * cls.sqrt(int(rm.group(3)))
            else:
                try:
                    total = total + Fraction(term)
                except ValueError as exc:
                    raise ValueError(f"cannot parse {text!r}") from exc
        return total


def sqrt_q(q: int) -> Surd:
    return Surd.sqrt(q)


def q_half_power(q: int, e: int) -> Surd:
    """q^(e/2) for an integer e (possibly negative)."""
    if e >= 0:
        return Surd(Fraction(q ** (e // 2))) * (Surd.sqrt(q) if e % 2 else 1)
    return q_half_power(q, -e).inverse()
