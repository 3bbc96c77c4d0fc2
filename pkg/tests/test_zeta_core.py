import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import CURVE_ENTRIES, weil_lpolys
from dimzero.curve_model import parse_curve, place_counts
from dimzero.zeta_core import (
    LPolynomial,
    class_number,
    is_ordinary,
    lmd_lower_bound,
    lpoly_from_counts,
    p_rank,
    power_sums,
    predicted_counts,
    summarize,
    validate_lpoly,
)

X7X6_L = (1, -2, 2, -2, 4, -8, 8)


def test_x7x6_curve_lpolynomial():
    c = parse_curve({"q": 2, "h": [1], "f": [1, 0, 0, 0, 0, 0, 1, 1]})
    L = lpoly_from_counts(2, 3, list(place_counts(c, 3).N))
    assert L.a == X7X6_L
    assert class_number(L) == 3
    assert p_rank(L, 2) == 0
    assert str(L) == "1 - 2*t + 2*t^2 - 2*t^3 + 4*t^4 - 8*t^5 + 8*t^6"


def test_coefficients_from_first_half():
    L = LPolynomial.from_coefficients(2, 3, [1, -2, 2, -2])
    assert L.a == X7X6_L
    assert LPolynomial.from_json(L.to_json()) == L
    assert L.coeff(7) == 0 and L.coeff(-1) == 0
    assert L(1) == 3


@given(weil_lpolys())
def test_counts_round_trip(L):
    N = predicted_counts(L, L.g)
    assume(all(n >= 0 for n in N))
    assert lpoly_from_counts(L.q, L.g, N) == L


@given(weil_lpolys())
def test_weil_products_validate(L):
    assert all(validate_lpoly(L).values())
    assert class_number(L) >= 1


@given(weil_lpolys(), st.integers(0, 6), st.integers(1, 30))
def test_fault_breaks_functional_equation(L, i, delta):
    i = i % (2 * L.g + 1)
    if i == L.g:
        i = 0
    a = list(L.a)
    a[i] += delta
    assert not all(validate_lpoly(LPolynomial(L.q, L.g, tuple(a))).values())


def test_power_sums():
    assert power_sums(2, [1, 5, 7]) == [2, 0, 2]


@given(weil_lpolys(qs=(2, 4, 8, 3, 9, 5)))
def test_p_rank_bounds(L):
    p = {2: 2, 4: 2, 8: 2, 3: 3, 9: 3, 5: 5}[L.q]
    gamma = p_rank(L, p)
    assert 0 <= gamma <= L.g
    assert is_ordinary(L, p) == (gamma == L.g)


def test_p_rank_rejects_wrong_prime():
    L = LPolynomial.from_coefficients(2, 3, [1, -2, 2, -2])
    with pytest.raises(ValueError):
        p_rank(L, 3)


def test_lmd_floor_examples():
    assert lmd_lower_bound(2, 3) == 1
    assert lmd_lower_bound(3, 3) == 3  # 9*4/(4*4) = 2.25
    with pytest.raises(ValueError):
        lmd_lower_bound(2, 0)


@pytest.mark.parametrize("e", CURVE_ENTRIES, ids=lambda e: e.label)
def test_class_number_meets_lmd_floor(e):
    c = parse_curve(e.curve)
    L = lpoly_from_counts(c.q, c.genus, list(place_counts(c, 2 * c.genus).N))
    s = summarize(L)
    assert s.h >= s.lmd_floor
    assert predicted_counts(L, 2 * c.genus) == list(place_counts(c, 2 * c.genus).N)


def test_rejects_impossible_counts():
    with pytest.raises(ValueError):
        lpoly_from_counts(2, 1, [-10, 0])
