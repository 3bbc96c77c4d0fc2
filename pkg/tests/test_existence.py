from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import dimzero.existence as ex
from conftest import CURVE_ENTRIES, weil_lpolys
from dimzero.curve_model import parse_curve, place_counts
from dimzero.existence import (
    ConsistencyError,
    b1_criteria,
    certified_delta,
    constant_C,
    constants,
    coropi,
    delta_q,
    kmin,
    l_q,
    lemma_pp,
    prank_criterion,
    princ_applicable,
    princ_bound,
    princ_value,
    ratio_threshold,
    verdict,
)
from dimzero.hyperelliptic import h_n0_via_sum
from dimzero.surd import Surd
from dimzero.zeta_core import LPolynomial, class_number, lpoly_from_counts, predicted_counts

X7X6 = LPolynomial.from_coefficients(2, 3, [1, -2, 2, -2])
HERMITIAN = LPolynomial.from_coefficients(3, 3, [1, 0, 9, 0])


def test_constants_exact():
    assert constant_C(16, 3) == Fraction(9, 2)
    assert l_q(16, 3) == 288
    assert constant_C(4, 1) == Fraction(1, 2) and l_q(4, 1) == 1
    assert l_q(2, 5) == Surd(24, -16, 2)
    assert l_q(2, 4) == Surd(-16, 12, 2) < 1
    assert delta_q(16, 5, 3) == 16
    assert delta_q(2, 3, 1) == 4
    assert constants(3, 2, 4).delta == 3
    with pytest.raises(ValueError):
        delta_q(2, 1, 2)


def test_applicability():
    assert princ_applicable(4, 1)
    assert not princ_applicable(2, 4)
    assert not princ_applicable(3, 1)
    assert princ_applicable(2, 5) and princ_applicable(3, 2)


def test_kmin_table():
    assert kmin(2) == 5 and kmin(3) == 2
    assert all(kmin(q) == 1 for q in (4, 5, 7, 8, 9, 16, 25, 256))
    assert Fraction(137, 100) <= l_q(2, 5) < Fraction(138, 100)
    assert Fraction(185, 100) <= l_q(3, 2) < Fraction(186, 100)


def test_ratio_threshold():
    assert ratio_threshold(16, 2) == 1
    assert ratio_threshold(2, 1) == 5
    assert l_q(16, ratio_threshold(16, 300)) >= 300
    with pytest.raises(ValueError):
        ratio_threshold(4, Fraction(1, 2))


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16]), st.integers(1, 12))
def test_kmin_is_monotone_threshold(q, k):
    assert princ_applicable(q, k) == (k >= kmin(q))


def test_princ_values():
    # k < g: the degree-zero term of the weighted sum is available
    assert princ_value(288, 16, 4, 3) == 287 + 4
    # k = g: nothing to subtract, and the bound stays below h - 1
    assert certified_delta(16, 3, 3) == 0
    assert princ_value(288, 16, 3, 3) == 287
    r = princ_bound(HERMITIAN, 2)
    assert r.conclusion == "exists" and r.bound == 32
    assert r.bound != 12
    assert not princ_bound(X7X6, 1).applicable


@given(weil_lpolys(qs=(4, 5, 7, 9, 16)))
def test_princ_at_degree_zero_never_exceeds_h_minus_1(L):
    # zeta2 only bounds A_0 when the other A_n are genuine counts
    assume(all(n >= 0 for n in predicted_counts(L, 2 * L.g)))
    r = princ_bound(L, L.g)
    assert r.bound is None or r.bound <= class_number(L) - 1


def test_coropi_example():
    assert coropi(HERMITIAN, 1).bound == 42
    assert coropi(HERMITIAN, 2).bound == 60
    assert class_number(HERMITIAN) == 64
    assert coropi(X7X6, 1).conclusion == "unknown"


def test_lemma_pp():
    assert lemma_pp(X7X6, 1).bound == 2
    assert lemma_pp(X7X6, 2).conclusion == "unknown"
    assert lemma_pp(X7X6, 1, A_n=5).conclusion == "unknown"
    with pytest.raises(ValueError):
        lemma_pp(X7X6, -1)


def test_prank_criterion():
    F1 = LPolynomial.from_coefficients(2, 4, [1, -1, 0, 1, -3])
    r = prank_criterion(F1)
    assert r.conclusion == "exists" and r.degree == 3
    assert prank_criterion(X7X6).conclusion == "unknown"


def test_b1_criteria():
    names = {r.name for r in b1_criteria(X7X6, 4, 2)}
    assert {"b1_ge_g_plus_1", "q2_three_rational_places", "induction"} <= names
    assert b1_criteria(X7X6, 0, 1) == []
    q4 = LPolynomial.from_coefficients(4, 2, [1, 0, 0])
    assert [r.name for r in b1_criteria(q4, 0, 1)] == ["non_special_q4"]


def test_verdict_for_x7x6_curve():
    v = verdict(X7X6, 1, B1=1, hyperelliptic=True)
    assert v.exact == 2 and v.exists
    assert v.best_bound is None
    v = verdict(X7X6, 1, B1=1, hyperelliptic=False)
    assert v.exact is None and v.exists is None
    v = verdict(X7X6, 3)
    assert v.exact == 2 and v.notes


def test_verdict_keeps_every_certificate():
    v = verdict(HERMITIAN, 2)
    names = [r.name for r in v.criteria if r.conclusion == "exists"]
    assert "coropi" in names and "princ" in names
    assert v.best_bound == 60


@pytest.mark.parametrize("e", CURVE_ENTRIES, ids=lambda e: e.label)
def test_bounds_never_exceed_exact_counts(e):
    c = parse_curve(e.curve)
    table = place_counts(c, 2 * c.genus)
    L = lpoly_from_counts(c.q, c.genus, list(table.N))
    for k in range(1, c.genus + 1):
        v = verdict(L, k, B1=table.B[0], hyperelliptic=True)
        assert v.exact == h_n0_via_sum(L, c.genus - k)
        for r in v.criteria:
            if r.bound is not None and r.degree == v.n:
                assert r.bound <= v.exact


def test_inconsistency_is_reported(monkeypatch):
    monkeypatch.setattr(ex, "h_gk0_closed", lambda L, k: 0)
    with pytest.raises(ConsistencyError):
        verdict(HERMITIAN, 1, hyperelliptic=True)


def test_verdict_preconditions():
    with pytest.raises(ValueError):
        verdict(X7X6, 0)
    with pytest.raises(ValueError):
        verdict(X7X6, 4)
