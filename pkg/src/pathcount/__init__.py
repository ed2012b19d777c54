"""Exact counting of northeast lattice paths restricted by a bounding path."""

from .counting import (
    DEFAULT_THEOREM_CAP,
    ENGINES,
    CapacityError,
    count,
    count_determinant,
    count_recurrence,
    count_theorem,
    count_triangular,
    dp_oracle,
    enumerate_polytope,
    enumerate_restricted,
    macmahon_bruteforce,
    macmahon_total,
    monomial_oracle,
)
from .exactmath import binom, catalan, det_int, factorial, rising_factorial
from .identities import (
    ChildSet,
    children,
    lemma_closed,
    lemma_lhs,
    lemma_rhs,
    parent,
    vandermonde_gen,
)
from .paths import (
    delta,
    format_heights,
    heights_to_word,
    in_polytope,
    is_restricted_by,
    parse_path_spec,
    sigma,
    validate_heights,
    word_to_heights,
)
from .symbolic import (
    MonomialPolynomial,
    RFPolynomial,
    RFTerm,
    evaluate,
    expand,
    serialize,
    symbolic_lp,
    verify_det_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ChildSet",
    "DEFAULT_THEOREM_CAP",
    "ENGINES",
    "MonomialPolynomial",
    "RFPolynomial",
    "RFTerm",
    "binom",
    "catalan",
    "children",
    "count",
    "count_determinant",
    "count_recurrence",
    "count_theorem",
    "count_triangular",
    "delta",
    "det_int",
    "dp_oracle",
    "enumerate_polytope",
    "enumerate_restricted",
    "evaluate",
    "expand",
    "factorial",
    "format_heights",
    "heights_to_word",
    "in_polytope",
    "is_restricted_by",
    "lemma_closed",
    "lemma_lhs",
    "lemma_rhs",
    "macmahon_bruteforce",
    "macmahon_total",
    "monomial_oracle",
    "parent",
    "parse_path_spec",
    "rising_factorial",
    "serialize",
    "sigma",
    "symbolic_lp",
    "validate_heights",
    "vandermonde_gen",
    "verify_det_identity",
    "word_to_heights",
]
