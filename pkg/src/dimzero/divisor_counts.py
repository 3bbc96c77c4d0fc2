"""Counts A_n of effective divisors of degree n, computed three ways.

* ``effective_count_series`` reads A_n off Z(t) = L(t)/((1-t)(1-qt)).
* ``effective_count_gk`` is the closed form for A_{g-k} in terms of partial
  sums of the a_i.
* ``effective_count_oracle`` never looks at L: it expands
  prod_d (1 - t^d)^(-B_d) from place counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .surd import Surd, q_half_power
from .zeta_core import LPolynomial, class_number


@dataclass(frozen=True)
class DivisorCountTable:
    q: int
    g: int
    A: tuple[int, ...]
    source: str  # "series", "closed_form" or "oracle"

    def __getitem__(self, n: int) -> int:
        return self.A[n] if n >= 0 else 0


def effective_count_series(L: LPolynomial, n: int) -> int:
    """A_n = sum_{i=0}^{n} (q^(n-i+1) - 1)/(q - 1) a_i; zero for n < 0."""
    if n < 0:
        return 0
    q = L.q
    return sum((q ** (n - i + 1) - 1) // (q - 1) * L.coeff(i) for i in range(min(n, 2 * L.g) + 1))


def effective_counts(L: LPolynomial, n_max: int) -> DivisorCountTable:
    return DivisorCountTable(
        L.q, L.g, tuple(effective_count_series(L, n) for n in range(n_max + 1)), "series"
    )


def effective_count_gk(L: LPolynomial, k: int) -> int:
    """A_{g-k} = [q^(1-k)(h - sum_{i<=g+k-1} a_i) - sum_{i<=g-k} a_i]/(q-1),
    evaluated after multiplying through by q^(k-1)."""
    q, g = L.q, L.g
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}, g={g}")
    h = class_number(L)
    numer = (h - L.partial_sum(0, g + k - 1)) - q ** (k - 1) * L.partial_sum(0, g - k)
    denom = (q - 1) * q ** (k - 1)
    if numer % denom:
        raise ValueError(f"A_{g - k} closed form is not integral ({numer}/{denom}): invalid L")
    return numer // denom


def oracle_counts(B: list[int] | tuple[int, ...], n_max: int) -> list[int]:
    """Coefficients of t^0..t^n_max in prod_d (1 - t^d)^(-B_d)."""
    if len(B) < n_max:
        raise ValueError(f"need place counts up to degree {n_max}, have {len(B)}")
    series = [1] + [0] * n_max
    for d in range(1, n_max + 1):
        b = B[d - 1]
        if not b:
            continue
        # (1 - t^d)^(-b) = sum_j C(b+j-1, j) t^(dj)
        factor = [comb(b + j - 1, j) for j in range(n_max // d + 1)]
        new = [0] * (n_max + 1)
        for i, c in enumerate(series):
            if c:
                for j, fj in enumerate(factor):
                    if i + d * j > n_max:
                        break
                    new[i + d * j] += c * fj
        series = new
    return series


def effective_count_oracle(places, n: int) -> int:
    """A_n from a PlaceTable (or a plain list of B_d)."""
    B = places.B if hasattr(places, "B") else places
    return oracle_counts(B, n)[n]


def oracle_table(places, n_max: int) -> DivisorCountTable:
    B = places.B
    # genus unknown to the oracle; recorded as -1
    return DivisorCountTable(places.q, -1, tuple(oracle_counts(B, n_max)), "oracle")


def lpoly_from_effective_counts(q: int, g: int, A) -> LPolynomial:
    """Multiply sum A_m t^m by (1-t)(1-qt), keep a_0..a_g, complete by symmetry."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    A = list(A)
    if len(A) < g + 1:
        raise ValueError(f"need A_0..A_{g}")

    def at(m):
        return A[m] if m >= 0 else 0

    a = [at(m) - (q + 1) * at(m - 1) + q * at(m - 2) for m in range(g + 1)]
    L = LPolynomial.from_coefficients(q, g, a)
    # beyond degree g the completed L must keep reproducing the supplied A_m
    for m in range(g + 1, len(A)):
        if effective_count_series(L, m) != A[m]:
            raise ValueError(f"effective counts inconsistent with the functional equation at A_{m}")
    return L


def check_b1_recurrence(A, m: int) -> list[int]:
    """Degrees n >= 2 violating A_n >= m A_{n-1} - m(m-1)/2 A_{n-2}."""
    A = list(A)
    return [
        n for n in range(2, len(A))
        if A[n] < m * A[n - 1] - m * (m - 1) // 2 * A[n - 2]
    ]


def zeta1_holds(L: LPolynomial, A) -> bool:
    """A_n = q^(n+1-g) A_{2g-2-n} + h (q^(n+1-g) - 1)/(q - 1) for 0 <= n <= 2g-2."""
    from fractions import Fraction

    q, g, h = L.q, L.g, class_number(L)
    A = list(A)
    for n in range(2 * g - 1):
        e = n + 1 - g
        rhs = Fraction(q) ** e * A[2 * g - 2 - n] + h * (Fraction(q) ** e - 1) / (q - 1)
        if rhs != A[n]:
            return False
    return True


def zeta2_lhs(L: LPolynomial, A) -> Surd:
    g, q = L.g, L.q
    return 2 * sum((q_half_power(q, g - 1 - n) * A[n] for n in range(g - 1)), Surd(0)) + A[g - 1]


def zeta2_rhs(L: LPolynomial) -> Surd:
    return class_number(L) / (Surd.sqrt(L.q) - 1) ** 2


def zeta2_holds(L: LPolynomial, A) -> bool:
    """2 sum_{n<=g-2} q^((g-1-n)/2) A_n + A_{g-1} <= h/(sqrt(q)-1)^2, exactly."""
    return zeta2_lhs(L, list(A)) <= zeta2_rhs(L)
