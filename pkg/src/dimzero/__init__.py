"""Exact counts of dimension-zero divisor classes on curves over finite fields."""

from .curve_model import CurveError, CurveModel, parse_curve, place_counts
from .existence import ExistenceVerdict, kmin, verdict
from .surd import Surd
from .zeta_core import LPolynomial, class_number, lpoly_from_counts

__version__ = "0.1.0"
