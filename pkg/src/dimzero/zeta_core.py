"""L-polynomials: construction from point counts, class number, p-rank."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .field_arith import prime_power


@dataclass(frozen=True)
class LPolynomial:
    """L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g} of a genus-g curve over F_q."""

    q: int
    g: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != 2 * self.g + 1:
            raise ValueError(f"expected {2 * self.g + 1} coefficients, got {len(self.a)}")

    @classmethod
    def from_coefficients(cls, q: int, g: int, a) -> LPolynomial:
        """Accept a_0..a_g (completed by the functional equation) or a_0..a_{2g}.

        Full inputs are kept as given; use validate_lpoly to check them.
        """
        a = [int(x) for x in a]
        if g < 1:
            raise ValueError("genus must be >= 1")
        if len(a) == g + 1:
            a = a + [q**i * a[g - i] for i in range(1, g + 1)]
        elif len(a) != 2 * g + 1:
            raise ValueError(f"need g+1 or 2g+1 coefficients, got {len(a)}")
        return cls(q, g, tuple(a))

    @classmethod
    def from_json(cls, data) -> LPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_coefficients(int(data["q"]), int(data["g"]), data["a"])

    def to_json(self) -> dict:
        return {"q": self.q, "g": self.g, "a": list(self.a)}

    def coeff(self, i: int) -> int:
        return self.a[i] if 0 <= i <= 2 * self.g else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.a):
            acc = acc * t + c
        return acc

    def partial_sum(self, lo: int, hi: int) -> int:
        """sum_{i=lo}^{hi} a_i (empty when hi < lo)."""
        return sum(self.coeff(i) for i in range(lo, hi + 1))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.a):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def power_sums(q: int, N: list[int]) -> list[int]:
    return [q**m + 1 - n for m, n in enumerate(N, start=1)]


def lpoly_from_counts(q: int, g: int, N: list[int]) -> LPolynomial:
    """Newton's recurrence m a_m = -sum_{j=1}^m S_j a_{m-j}, S_m = q^m + 1 - N_m."""
    if len(N) < g:
        raise ValueError(f"need N_1..N_{g}, got {len(N)} counts")
    if any(n < 0 for n in N):
        raise ValueError("point counts must be nonnegative")
    S = power_sums(q, N[:g])
    a = [1]
    for m in range(1, g + 1):
        s = -sum(S[j - 1] * a[m - j] for j in range(1, m + 1))
        if s % m:
            raise ValueError(f"inconsistent point counts: {s}/{m} is not an integer")
        a.append(s // m)
    L = LPolynomial.from_coefficients(q, g, a)
    if class_number(L) < 1:
        raise ValueError(f"point counts give class number {class_number(L)} < 1")
    return L


def predicted_counts(L: LPolynomial, M: int) -> list[int]:
    """N_1..N_M implied by L (inverse of the Newton recurrence)."""
    S: list[int] = []
    for m in range(1, M + 1):
        s = -m * L.coeff(m) - sum(L.coeff(j) * S[m - j - 1] for j in range(1, m))
        S.append(s)
    return [L.q**m + 1 - s for m, s in enumerate(S, start=1)]


def class_number(L: LPolynomial) -> int:
    return sum(L.a)


def p_rank(L: LPolynomial, p: int) -> int:
    """gamma = deg(L mod p)."""
    if L.q % p or prime_power(L.q)[0] != p:
        raise ValueError(f"{p} is not the characteristic of F_{L.q}")
    assert L.a[0] % p, "a_0 must be a unit mod p"
    return max(i for i, c in enumerate(L.a) if c % p)


def is_ordinary(L: LPolynomial, p: int) -> bool:
    return L.a[L.g] % p != 0


def lmd_lower_bound(q: int, g: int) -> int:
    """Ceiling of q^(g-1) (q-1)^2 / ((q+1)(g+1))."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return ceil(Fraction(q ** (g - 1) * (q - 1) ** 2, (q + 1) * (g + 1)))


def validate_lpoly(L: LPolynomial) -> dict[str, bool]:
    """Named validity checks; all True means L passes."""
    from .divisor_counts import effective_counts, zeta2_holds

    checks = {
        "a0": L.a[0] == 1,
        "functional_equation": all(
            L.a[2 * L.g - i] == L.q ** (L.g - i) * L.a[i] for i in range(L.g + 1)
        ),
        "class_number_positive": class_number(L) >= 1,
    }
    checks["zeta2"] = all(checks.values()) and zeta2_holds(L, effective_counts(L, L.g))
    return checks


@dataclass(frozen=True)
class ZetaSummary:
    L: LPolynomial
    h: int
    p_rank: int
    ordinary: bool
    lmd_floor: int


def summarize(L: LPolynomial) -> ZetaSummary:
    p = prime_power(L.q)[0]
    gamma = p_rank(L, p)
    ordinary = is_ordinary(L, p)
    assert ordinary == (gamma == L.g)
    return ZetaSummary(L, class_number(L), gamma, ordinary, lmd_lower_bound(L.q, L.g))
