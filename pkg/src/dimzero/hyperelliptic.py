"""Exact counts h_{n,i} of degree-n divisor classes of dimension i for
hyperelliptic function fields."""

from __future__ import annotations

from dataclasses import dataclass

from .divisor_counts import effective_count_series
from .zeta_core import LPolynomial, class_number


@dataclass(frozen=True)
class DimensionClassTable:
    q: int
    g: int
    n: int
    h_ni: dict[int, int]

    def total(self) -> int:
        return sum(self.h_ni.values())

    def weighted_total(self) -> int:
        """sum_i (q^i - 1)/(q - 1) h_{n,i}, which must equal A_n."""
        return sum((self.q**i - 1) // (self.q - 1) * v for i, v in self.h_ni.items())


def _check_degree(L: LPolynomial, n: int) -> None:
    # beyond degree g the recurrence no longer counts classes (it can go
    # negative); there h_{n,0} = 0 by Riemann-Roch anyway
    if not 0 <= n <= L.g:
        raise ValueError(f"degree {n} outside 0..g for g={L.g}")


def outside_stated_range(L: LPolynomial) -> bool:
    """The closed form is classically stated for g > 2 only."""
    return L.g <= 2


def pellikaan_hni(L: LPolynomial, n: int, i: int) -> int:
    """h_{n,i} = A_{n-2i+2} - (q+1) A_{n-2i} + q A_{n-2i-2} for i >= 1."""
    _check_degree(L, n)
    if i < 1:
        raise ValueError("use h_n0_via_sum for i = 0")
    q = L.q

    def A(m):
        return effective_count_series(L, m)

    val = A(n - 2 * i + 2) - (q + 1) * A(n - 2 * i) + q * A(n - 2 * i - 2)
    if val < 0:
        raise ValueError(f"h_{{{n},{i}}} = {val} < 0: not a hyperelliptic L-polynomial")
    return val


def h_n0_via_sum(L: LPolynomial, n: int) -> int:
    """h_{n,0} = h - sum_{i>=1} h_{n,i}."""
    _check_degree(L, n)
    total = sum(pellikaan_hni(L, n, i) for i in range(1, n // 2 + 2))
    val = class_number(L) - total
    if val < 0:
        raise AssertionError(f"h_{{{n},0}} = {val} < 0")
    return val


def h_gk0_closed(L: LPolynomial, k: int) -> int:
    """h_{g-k,0} = sum_{i=g-k+1}^{g} a_i + sum_{i=g-k}^{g-1} q^(g-i) a_i
    + (q^k - 1) sum_{i=0}^{g-k-1} q^(g-i-k) a_i."""
    g, q = L.g, L.q
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}")
    _check_degree(L, g - k)
    a = L.coeff
    return (
        sum(a(i) for i in range(g - k + 1, g + 1))
        + sum(q ** (g - i) * a(i) for i in range(g - k, g))
        + (q**k - 1) * sum(q ** (g - i - k) * a(i) for i in range(g - k))
    )


def dimension_class_table(L: LPolynomial, n: int) -> DimensionClassTable:
    h_ni = {0: h_n0_via_sum(L, n)}
    for i in range(1, n // 2 + 2):
        h_ni[i] = pellikaan_hni(L, n, i)
    return DimensionClassTable(L.q, L.g, n, h_ni)


def same_lpoly_distinguisher(L: LPolynomial, k: int, hyperelliptic: bool) -> dict:
    """h_{g-k,0} when the field is known to be hyperelliptic; otherwise no exact
    value, since L alone does not determine it."""
    report = {"q": L.q, "g": L.g, "k": k, "degree": L.g - k, "hyperelliptic": hyperelliptic}
    if hyperelliptic:
        report["exact_h_n0"] = h_gk0_closed(L, k)
        report["note"] = "valid only for hyperelliptic function fields"
    else:
        report["exact_h_n0"] = None
        report["note"] = "L does not determine h_{g-k,0}; criteria-only verdict"
    return report
