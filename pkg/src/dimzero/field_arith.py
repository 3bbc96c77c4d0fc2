"""Exact arithmetic in small finite fields F_{p^n}.

Elements are tuples of ``n`` residues mod ``p`` (constant term first),
representing polynomials in the class ``alpha`` of ``x`` modulo a fixed
monic irreducible.  The fields here are tiny (at most a few million
elements) and are only used for exhaustive point counting, so the
implementation favours clarity over speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

FieldElement = tuple[int, ...]

ENUMERATION_LIMIT = 2**24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, n


# -- polynomials over F_p (plain int lists, used to pick the modulus) --------


def _fp_divides(divisor: list[int], poly: list[int], p: int) -> bool:
    rem = list(poly)
    inv_lead = pow(divisor[-1], p - 2, p)
    dd = len(divisor) - 1
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd] * inv_lead % p
        if c:
            for i, dc in enumerate(divisor):
                rem[shift + i] = (rem[shift + i] - c * dc) % p
    return not any(rem)


def is_irreducible_fp(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _fp_divides(list(low) + [1], list(poly), p):
                return False
    return True


def _monic_candidates(p: int, n: int):
    # increasing integer encoding sum c_i p^i of the non-leading part,
    # i.e. the top coefficient is most significant
    for code in range(p**n):
        low = []
        for _ in range(n):
            code, r = divmod(code, p)
            low.append(r)
        yield tuple(low) + (1,)


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)
    for cand in _monic_candidates(p, n):
        if cand[0] != 0 and is_irreducible_fp(cand, p):
            return cand
    raise AssertionError("no irreducible found")  # pragma: no cover


@dataclass(frozen=True)
class FieldCtx:
    """The field F_{p^n} = F_p[x]/(modulus)."""

    p: int
    n: int
    modulus: tuple[int, ...]
    _reduce: tuple[FieldElement, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not is_irreducible_fp(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")
        # x^(n+j) expressed in the basis 1, x, ..., x^(n-1)
        p, n = self.p, self.n
        rows = []
        cur = [(-c) % p for c in self.modulus[:-1]]
        for _ in range(max(n - 1, 1)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * m) % p for c, m in zip(cur, self.modulus)]
        object.__setattr__(self, "_reduce", tuple(rows))

    @property
    def size(self) -> int:
        return self.p**self.n

    @property
    def zero(self) -> FieldElement:
        return (0,) * self.n

    @property
    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.n - 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``x``."""
        if self.n == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.n - 2)

    def scalar(self, c: int) -> FieldElement:
        return (c % self.p,) + (0,) * (self.n - 1)

    def element(self, coeffs) -> FieldElement:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.n:
            raise ValueError(f"too many coefficients for F_{self.p}^{self.n}")
        return tuple(coeffs) + (0,) * (self.n - len(coeffs))

    def from_index(self, idx: int) -> FieldElement:
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return tuple(out)

    def index(self, a: FieldElement) -> int:
        idx = 0
        for c in reversed(a):
            idx = idx * self.p + c
        return idx

    def elements(self):
        """All field elements in increasing index order."""
        for code in itertools.product(range(self.p), repeat=self.n):
            yield code[::-1]

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, n = self.p, self.n
        if n == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for j, c in enumerate(prod[n:]):
            if c:
                for i, r in enumerate(self._reduce[j]):
                    out[i] += c * r
        return tuple(c % p for c in out)

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.size - 2)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: FieldElement) -> FieldElement:
        return self.pow(a, self.p)

    def trace(self, a: FieldElement) -> FieldElement:
        """Absolute trace a + a^p + ... + a^(p^(n-1)), an element of F_p."""
        total, cur = self.zero, a
        for _ in range(self.n):
            total = self.add(total, cur)
            cur = self.frobenius(cur)
        assert not any(total[1:]), "trace left the prime field"
        return total

    def is_square(self, a: FieldElement) -> bool:
        """Euler's criterion (odd characteristic only)."""
        if not any(a):
            return True
        return self.pow(a, (self.size - 1) // 2) == self.one

    def quadratic_root_count(self, h_val: FieldElement, f_val: FieldElement) -> int:
        """Number of y in the field with y^2 + h_val*y = f_val."""
        if self.p == 2:
            if not any(h_val):
                return 1
            c = self.div(f_val, self.mul(h_val, h_val))
            return 0 if any(self.trace(c)) else 2
        disc = self.add(self.mul(h_val, h_val), self.mul(self.scalar(4), f_val))
        if not any(disc):
            return 1
        return 2 if self.is_square(disc) else 0

    def __str__(self) -> str:
        return f"F_{self.size}"


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1, limit: int = ENUMERATION_LIMIT) -> FieldCtx:
    """Canonical F_{p^n}: the modulus is the smallest monic irreducible of degree n
    when polynomials are ordered by the integer ``sum c_i p^i``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > limit:
        raise ValueError(f"F_{p}^{n} exceeds the enumeration limit {limit}")
    return FieldCtx(p, n, smallest_irreducible(p, n))


@lru_cache(maxsize=None)
def embedding(base: FieldCtx, ext: FieldCtx) -> dict[FieldElement, FieldElement]:
    """A field embedding base -> ext, sending the generator of ``base`` to the
    root of its modulus in ``ext`` with the smallest index."""
    if base.p != ext.p or ext.n % base.n:
        raise ValueError(f"{base} does not embed in {ext}")
    if base.n == 1:
        return {(c,): ext.scalar(c) for c in range(base.p)}
    root = next(
        x for x in ext.elements()
        if not any(poly_eval(ext, [ext.scalar(c) for c in base.modulus], x))
    )
    powers = [ext.one]
    for _ in range(base.n - 1):
        powers.append(ext.mul(powers[-1], root))
    table = {}
    for a in base.elements():
        img = ext.zero
        for c, pw in zip(a, powers):
            if c:
                img = ext.add(img, ext.mul(ext.scalar(c), pw))
        table[a] = img
    return table


# -- polynomials over a FieldCtx: lists of elements, constant term first -----


def poly_trim(ctx: FieldCtx, f) -> list[FieldElement]:
    f = list(f)
    while f and not any(f[-1]):
        f.pop()
    return f


def poly_degree(ctx: FieldCtx, f) -> int:
    return len(poly_trim(ctx, f)) - 1


def poly_eval(ctx: FieldCtx, f, x: FieldElement) -> FieldElement:
    acc = ctx.zero
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_add(ctx: FieldCtx, f, g) -> list[FieldElement]:
    n = max(len(f), len(g))
    f = list(f) + [ctx.zero] * (n - len(f))
    g = list(g) + [ctx.zero] * (n - len(g))
    return poly_trim(ctx, [ctx.add(a, b) for a, b in zip(f, g)])


def poly_mul(ctx: FieldCtx, f, g) -> list[FieldElement]:
    if not f or not g:
        return []
    out = [ctx.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if any(a):
            for j, b in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_trim(ctx, out)


def poly_deriv(ctx: FieldCtx, f) -> list[FieldElement]:
    return poly_trim(ctx, [ctx.mul(ctx.scalar(i), c) for i, c in enumerate(f)][1:])


def poly_divmod(ctx: FieldCtx, f, g):
    g = poly_trim(ctx, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(ctx, f)
    quot = [ctx.zero] * max(len(rem) - len(g) + 1, 0)
    inv_lead = ctx.inv(g[-1])
    while len(rem) >= len(g):
        shift = len(rem) - len(g)
        c = ctx.mul(rem[-1], inv_lead)
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, b))
        rem = poly_trim(ctx, rem)
    return poly_trim(ctx, quot), rem


def poly_gcd(ctx: FieldCtx, f, g) -> list[FieldElement]:
    """Monic gcd (empty list for gcd(0, 0))."""
    a, b = poly_trim(ctx, f), poly_trim(ctx, g)
    while b:
        a, b = b, poly_divmod(ctx, a, b)[1]
    if not a:
        return a
    inv_lead = ctx.inv(a[-1])
    return [ctx.mul(c, inv_lead) for c in a]
