import math

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dimzero.harness import load_corpus
from dimzero.zeta_core import LPolynomial

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CORPUS = load_corpus()
CURVE_ENTRIES = [e for e in CORPUS if e.curve is not None]


def entry(label):
    return next(e for e in CORPUS if e.label == label)


def multiply(p1, p2):
    out = [0] * (len(p1) + len(p2) - 1)
    for i, x in enumerate(p1):
        for j, y in enumerate(p2):
            out[i + j] += x * y
    return out


@st.composite
def weil_lpolys(draw, qs=(2, 3, 4, 5, 7, 8, 9), max_genus=4):
    """Products of 1 - b t + q t^2 with b^2 <= 4q: all roots of absolute value
    q^(-1/2), so the functional equation and the zeta2 inequality hold."""
    q = draw(st.sampled_from(qs))
    g = draw(st.integers(1, max_genus))
    bound = math.isqrt(4 * q)
    poly = [1]
    for _ in range(g):
        b = draw(st.integers(-bound, bound))
        poly = multiply(poly, [1, -b, q])
    return LPolynomial(q, g, tuple(poly))
