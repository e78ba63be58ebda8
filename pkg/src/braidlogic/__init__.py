"""Braid groups as a computational model of link axioms."""

from .axioms import AxiomReport, BraidModel, random_term, run_suite
from .braids import BraidWord, Generator, Permutation, WidthError, inverse, mirror, multiply, permutation, shift
from .garside import GarsideNormalForm, equal, is_identity, normal_form, parabolic_section
from .invariants import alexander, burau_reduced, closure_components, exponent_sum, jones, kauffman_bracket
from .laurent import LaurentPoly, NormalizedPoly
from .markov import (
    Certificate,
    ConjugateBy,
    Destabilize,
    Distinct,
    Equivalent,
    SearchBudget,
    Stabilize,
    Unknown,
    apply_move,
    neighbors,
    replay,
    search_equivalence,
)
from .semantics import evaluate, quote
from .terms import One, Prod, Shift, Sigma, SigmaBar, TermSyntaxError, parse_term, render_term

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "BraidModel", "random_term", "run_suite",
    "BraidWord", "Generator", "Permutation", "WidthError", "inverse", "mirror", "multiply",
    "permutation", "shift",
    "GarsideNormalForm", "equal", "is_identity", "normal_form", "parabolic_section",
    "alexander", "burau_reduced", "closure_components", "exponent_sum", "jones", "kauffman_bracket",
    "LaurentPoly", "NormalizedPoly",
    "Certificate", "ConjugateBy", "Destabilize", "Distinct", "Equivalent", "SearchBudget",
    "Stabilize", "Unknown", "apply_move", "neighbors", "replay", "search_equivalence",
    "evaluate", "quote",
    "One", "Prod", "Shift", "Sigma", "SigmaBar", "TermSyntaxError", "parse_term", "render_term",
]
