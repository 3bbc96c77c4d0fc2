"""Existence criteria and lower bounds for dimension-zero divisor classes of
degree n = g - k.

Every constant involving sqrt(q) is kept exact (see :mod:`dimzero.surd`);
bounds are rounded up to integers because they bound integer counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .divisor_counts import effective_count_gk, effective_count_series
from .field_arith import prime_power
from .hyperelliptic import h_gk0_closed, outside_stated_range
from .surd import Surd, q_half_power
from .zeta_core import LPolynomial, class_number, p_rank


class ConsistencyError(AssertionError):
    """A certified lower bound exceeds an exact count."""


@dataclass(frozen=True)
class CriterionResult:
    name: str
    degree: int
    applicable: bool
    conclusion: str  # "exists" or "unknown"
    bound: int | None = None
    justification: str = ""

    def __post_init__(self):
        if self.bound is not None:
            assert self.conclusion == "exists" and self.bound >= 1, self


def _exists(name, degree, bound, why):
    return CriterionResult(name, degree, True, "exists", bound, why)


def _unknown(name, degree, why, applicable=True):
    return CriterionResult(name, degree, applicable, "unknown", None, why)


@dataclass(frozen=True)
class Constants:
    C: Surd
    l: Surd
    delta: Surd | None


def constant_C(q: int, k: int) -> Surd:
    r = Surd.sqrt(q)
    base = (r - 1) ** 2 / r
    return base if k == 1 else 2 * base


def l_q(q: int, k: int) -> Surd:
    return constant_C(q, k) * q_half_power(q, k)


def delta_q(q: int, g: int, k: int) -> Surd:
    if g < k:
        raise ValueError("Delta needs g >= k")
    if k == 1:
        return 2 * q_half_power(q, g - 1)
    return q_half_power(q, g - k)


def certified_delta(q: int, g: int, k: int) -> Surd:
    """Delta_q as far as the A_{g-k} estimate actually supports it.

    The estimate drops the A_0 = 1 term of the weighted sum, which is only a
    separate term when k < g.  At k = g the bounded count is A_0 itself and
    nothing can be subtracted.
    """
    return Surd(0) if k == g else delta_q(q, g, k)


def constants(q: int, k: int, g: int | None = None) -> Constants:
    if k < 1:
        raise ValueError("k must be >= 1")
    return Constants(constant_C(q, k), l_q(q, k), None if g is None else delta_q(q, g, k))


def princ_applicable(q: int, k: int) -> bool:
    """-2 log_q C_q <= k, i.e. l_q(k) >= 1."""
    return l_q(q, k) >= 1


def kmin(q: int) -> int:
    k = 1
    while not princ_applicable(q, k):
        k += 1
    return k


def ratio_threshold(q: int, l) -> int:
    """Least k >= 1 with l_q(k) >= l, i.e. C_q^2 q^k >= l^2."""
    l = Surd.coerce(l if not isinstance(l, float) else Fraction(l))
    if l < 1:
        raise ValueError("l must be >= 1")
    k = 1
    while constant_C(q, k) ** 2 * q**k < l * l:
        k += 1
    return k


def princ_value(h: int, q: int, g: int, k: int) -> Surd:
    """h (1 - 1/l_q(k)) + Delta_q, exact, with Delta_q = 0 at k = g."""
    return h * (1 - l_q(q, k).inverse()) + certified_delta(q, g, k)


def princ_bound(L: LPolynomial, k: int) -> CriterionResult:
    q, g = L.q, L.g
    n = g - k
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}")
    if not princ_applicable(q, k):
        return _unknown("princ", n, f"l_{q}({k}) < 1", applicable=False)
    bound = princ_value(class_number(L), q, g, k).ceil()
    if bound < 1:
        return _unknown("princ", n, f"bound {bound} certifies nothing at k = g")
    return _exists("princ", n, bound, f"h(1 - 1/l_q(k)) + Delta_q with l_{q}({k}) = {l_q(q, k)}")


def lemma_pp(L: LPolynomial, n: int, A_n: int | None = None) -> CriterionResult:
    """A_n < h certifies h_{n,0} >= h - A_n."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    h = class_number(L)
    if A_n is None:
        A_n = effective_count_series(L, n)
    if A_n < h:
        return _exists("lemma_pp", n, h - A_n, f"A_{n} = {A_n} < h = {h}")
    return _unknown("lemma_pp", n, f"A_{n} = {A_n} >= h = {h}")


def coropi(L: LPolynomial, k: int) -> CriterionResult:
    """Condition q^(1-k) S_{g+k-1} + S_{g-k} >= 0 (> 0 for q = 2), S_m = sum_{i<=m} a_i."""
    q, g = L.q, L.g
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}")
    n = g - k
    cleared = L.partial_sum(0, g + k - 1) + q ** (k - 1) * L.partial_sum(0, g - k)
    met = cleared > 0 if q == 2 else cleared >= 0
    if not met:
        return _unknown("coropi", n, f"coefficient condition fails (scaled value {cleared})")
    h = class_number(L)
    bound = h - effective_count_gk(L, k)
    return _exists("coropi", n, bound, f"h - A_{n} via the a_i closed form")


def prank_criterion(L: LPolynomial, p: int | None = None) -> CriterionResult:
    """A dimension-zero divisor of degree gamma - 1 always exists."""
    p = p or prime_power(L.q)[0]
    gamma = p_rank(L, p)
    if gamma == 0:
        return _unknown("p_rank", -1, "p-rank 0: no nonnegative degree certified", applicable=False)
    why = f"p-rank gamma = {gamma}"
    if gamma == L.g and p == 2:
        why += " (ordinary, characteristic 2: canonical theta characteristic)"
    return _exists("p_rank", gamma - 1, 1, why)


def b1_criteria(L: LPolynomial, B1: int, k: int) -> list[CriterionResult]:
    """Criteria driven by q, g and the number B_1 of rational places."""
    q, g = L.q, L.g
    n = g - k
    out = []
    if q >= 4 and g >= 2:
        out.append(_exists("non_special_q4", g - 1, 1, "q >= 4 and g >= 2"))
    if B1 >= g + 1:
        out.append(_exists("b1_ge_g_plus_1", g - 1, 1, f"B_1 = {B1} >= g + 1"))
    if q == 2 and g >= 3 and B1 >= 3 and k >= 2:
        out.append(_exists("q2_three_rational_places", n, 1, f"q = 2, g >= 3, B_1 = {B1} >= 3, k >= 2"))
    if B1 > 0 and any(r.degree >= n for r in out):
        top = max(r.degree for r in out)
        if top > n:
            out.append(_exists("induction", n, 1, f"degree {top} certified and B_1 > 0"))
    return out


@dataclass
class ExistenceVerdict:
    q: int
    g: int
    k: int
    n: int
    criteria: list[CriterionResult] = field(default_factory=list)
    best_bound: int | None = None
    exact: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exists(self) -> bool | None:
        if self.exact is not None:
            return self.exact > 0
        return True if self.best_bound else None

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "g": self.g,
            "k": self.k,
            "degree": self.n,
            "exists": self.exists,
            "best_bound": self.best_bound,
            "exact": self.exact,
            "criteria": [
                {
                    "name": c.name,
                    "degree": c.degree,
                    "applicable": c.applicable,
                    "conclusion": c.conclusion,
                    "bound": c.bound,
                    "justification": c.justification,
                }
                for c in self.criteria
            ],
            "notes": list(self.notes),
        }


def _direct_criteria(L: LPolynomial, k: int) -> list[CriterionResult]:
    out = [lemma_pp(L, L.g - k), princ_bound(L, k), coropi(L, k)]
    if k == L.g:
        h = class_number(L)
        if h >= 2:
            out.append(_exists("degree_zero", 0, h - 1, "non-principal degree-0 classes"))
        else:
            out.append(_unknown("degree_zero", 0, "h = 1: every degree-0 class is principal"))
    return out


def verdict(L: LPolynomial, k: int, B1: int | None = None, hyperelliptic: bool = False) -> ExistenceVerdict:
    """Evaluate every criterion for degree n = g - k and aggregate.

    Degrees above n certified directly are carried down to n when B_1 > 0
    (subtracting a rational place maps dimension-zero classes injectively).
    """
    q, g = L.q, L.g
    if not 1 <= k <= g:
        raise ValueError(f"need 1 <= k <= g, got k={k}, g={g}")
    n = g - k
    v = ExistenceVerdict(q, g, k, n)
    v.criteria.extend(_direct_criteria(L, k))
    pr = prank_criterion(L)
    v.criteria.append(pr)
    if B1 is not None:
        v.criteria.extend(r for r in b1_criteria(L, B1, k) if r.name != "induction")

    if B1 is not None and B1 > 0:
        # best certificate at every higher degree < g, then carry down
        higher = []
        for kk in range(1, k):
            higher.extend(r for r in _direct_criteria(L, kk) if r.bound)
        higher.extend(r for r in v.criteria if r.bound and r.degree > n)
        if higher:
            top = max(higher, key=lambda r: (r.bound, r.degree))
            v.criteria.append(_exists(
                "induction", n, top.bound,
                f"{top.name} certifies h_{{{top.degree},0}} >= {top.bound} and B_1 = {B1} > 0",
            ))
    elif B1 is None:
        v.notes.append("B_1 unknown: rational-place criteria and induction skipped")

    at_n = [r for r in v.criteria if r.bound and r.degree == n]
    v.best_bound = max((r.bound for r in at_n), default=None)

    if k == g:
        v.exact = class_number(L) - 1
    elif hyperelliptic:
        v.exact = h_gk0_closed(L, k)
        if outside_stated_range(L):
            v.notes.append("g <= 2: hyperelliptic closed form used outside its classical g > 2 hypothesis")
    if v.exact is not None:
        for r in at_n:
            if r.bound > v.exact:
                raise ConsistencyError(
                    f"{r.name} certifies h_{{{n},0}} >= {r.bound} but the exact count is {v.exact}"
                )
    return v
