"""Density of dimension-zero divisors and leading-term asymptotics.

The asymptotic evaluators keep only the leading terms of the class-number and
effective-divisor estimates for asymptotically exact families; the o(g)
corrections are not modelled, so their outputs are heuristics and never feed
existence certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import ceil

from .existence import l_q, princ_applicable
from .surd import Surd, q_half_power

DIGITS = 12
INDETERMINATE = Decimal("1e-9")


def draw_probability(q: int, k: int) -> Surd:
    """Lower bound 1 - 1/l_q(k) on the chance that a uniformly drawn divisor
    of degree g - k has dimension zero."""
    if k < 1 or not princ_applicable(q, k):
        raise ValueError(f"k = {k} is below the threshold for q = {q}")
    return 1 - l_q(q, k).inverse()


def _log_q(q: int, x: Surd | Fraction | int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 50
        return Surd.coerce(x).to_decimal(45).ln() / Decimal(q).ln()


def _round(x: Decimal) -> Decimal:
    return x.quantize(Decimal(1).scaleb(-DIGITS))


@dataclass(frozen=True)
class BetaSequence:
    """Limits beta_m = lim B_m / g of an asymptotically exact family (finitely
    many nonzero)."""

    q: int
    entries: dict[int, Surd] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, b in self.entries.items():
            b = Surd.coerce(b)
            if m < 1 or b < 0:
                raise ValueError(f"bad entry beta_{m} = {b}")
            clean[int(m)] = b
        object.__setattr__(self, "entries", clean)

    @classmethod
    def parse(cls, q: int, text: str) -> BetaSequence:
        """Parse ``"1:1/2,3:sqrt(2)-1"``; an empty string is the zero sequence."""
        entries = {}
        for part in filter(None, (s.strip() for s in text.split(","))):
            m, val = part.split(":", 1)
            entries[int(m)] = Surd.parse(val)
        return cls(q, entries)

    def dv_sum(self) -> Surd:
        """sum m beta_m / (q^(m/2) - 1)."""
        return sum((m * b / (q_half_power(self.q, m) - 1) for m, b in self.entries.items()), Surd(0))

    def admissible(self) -> bool:
        return self.dv_sum() <= 1

    def threshold(self) -> Surd:
        """sum m beta_m / (q^m - 1)."""
        return sum((m * b / (self.q**m - 1) for m, b in self.entries.items()), Surd(0))

    def log_excess(self) -> Decimal:
        """sum beta_m log_q(q^m / (q^m - 1))."""
        total = Decimal(0)
        for m, b in self.entries.items():
            total += b.to_decimal(45) * _log_q(self.q, Fraction(self.q**m, self.q**m - 1))
        return total


def _require_admissible(beta: BetaSequence) -> None:
    if not beta.admissible():
        raise ValueError("beta sequence violates sum m beta_m/(q^(m/2)-1) <= 1")


def asymptotic_h_estimate(beta: BetaSequence, g: int) -> Decimal:
    """Leading term g (1 + sum beta_m log_q(q^m/(q^m-1))) of log_q h."""
    _require_admissible(beta)
    return _round(g * (1 + beta.log_excess()))


def asymptotic_A_estimate(beta: BetaSequence, a: int, g: int) -> dict:
    """Leading term a + g sum beta_m log_q(q^m/(q^m-1)) of log_q A_a, valid when
    a clears g * sum m beta_m/(q^m-1)."""
    _require_admissible(beta)
    threshold = g * beta.threshold()
    cleared = threshold <= a
    return {
        "degree": a,
        "threshold": str(threshold),
        "threshold_decimal": str(threshold.to_decimal(DIGITS)),
        "cleared": cleared,
        "estimate": str(_round(a + g * beta.log_excess())) if cleared else None,
    }


def doubledivspec_margin(beta: BetaSequence, epsilon, l, g: int) -> dict:
    """log_q h - log_q l - log_q A_{ceil(g(1-eps))}, all leading terms."""
    epsilon, l = Fraction(epsilon), Fraction(l)
    if not 0 < epsilon < Fraction(1, 2):
        raise ValueError("need 0 < epsilon < 1/2")
    if l < 1:
        raise ValueError("need l >= 1")
    _require_admissible(beta)
    a = ceil(g * (1 - epsilon))
    est_A = asymptotic_A_estimate(beta, a, g)
    with localcontext() as ctx:
        ctx.prec = 50
        log_h = g * (1 + beta.log_excess())
        log_A = a + g * beta.log_excess()
        margin = log_h - _log_q(beta.q, l) - log_A
    sign = "indeterminate" if abs(margin) < INDETERMINATE else ("positive" if margin > 0 else "negative")
    return {
        "q": beta.q,
        "g": g,
        "epsilon": str(epsilon),
        "l": str(l),
        "degree": a,
        "log_h_estimate": str(_round(log_h)),
        "log_A_estimate": str(_round(log_A)),
        "threshold_cleared": est_A["cleared"],
        "margin": str(_round(margin)),
        "sign": sign,
        "label": "leading-term heuristic (o(g) terms not modelled)",
    }
