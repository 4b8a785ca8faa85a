"""Classifier for numerical semigroup rings: Gorenstein, AGL, GGL, 2-AGL, NGL."""

import json

from ._core import GglError, NumericalSemigroup, family_mult_le5, run_cli, trace_is_ulrich
from . import _core

__all__ = [
    "GglError",
    "NumericalSemigroup",
    "blowup_chain",
    "classify",
    "enumerate_ulrich",
    "family_mult_le5",
    "herzog",
    "idealize_conductor",
    "is_ulrich",
    "run_cli",
    "trace_is_ulrich",
    "verify",
]


def classify(gens):
    """Full classification report as a dict."""
    return json.loads(_core._classify(list(gens)))


def verify(gens):
    """Every cross-route check, as a dict of name -> bool."""
    return json.loads(_core._verify(list(gens)))


def enumerate_ulrich(gens):
    """Certificates of all monomial Ulrich ideals, ordered by a0."""
    return json.loads(_core._enumerate_ulrich(list(gens)))


def is_ulrich(gens, ideal):
    return json.loads(_core._is_ulrich(list(gens), list(ideal)))


def blowup_chain(gens, cap=64):
    return json.loads(_core._chain(list(gens), cap))


def herzog(a1, a2, a3):
    """Herzog exponents plus the exponent-based GGL and trace-Ulrich tests."""
    return json.loads(_core._herzog(a1, a2, a3))


def idealize_conductor(gens):
    return json.loads(_core._idealize_conductor(list(gens)))
