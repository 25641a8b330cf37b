"""Exact two-loop invariants of untwisted Whitehead doubles.

The pipeline, bottom to top:

* laurent: exact Laurent polynomials over Q and Taylor expansion at t = e^h.
* ratfun: the rational function field Q(t) in normal form, and exact
  fraction-free linear algebra over it.
* seifert: Seifert matrices; Alexander polynomial, the degree-2 Conway
  coefficient, and the equivariant linking matrix (t-1)(tA - A^T)^{-1}.
* theta: the space of beaded theta graphs modulo its symmetries, with a
  computable canonical form.
* contraction: pairing the leaves of a two-component clasper into theta
  graphs.
* invariants: the doubling formulas built from all of the above.
"""

from .catalog import KnotCatalogEntry, catalog, lookup
from .contraction import CLASP_BEAD, LinkingMatrix, contract, whitehead_linking_matrix
from .invariants import pattern_q1, q1_whitehead
from .laurent import ONE, T, ZERO, HSeries, LaurentPoly
from .parse import FileFormatError, ParseError, load_linking, load_seifert, parse_laurent
from .ratfun import Matrix, RatFun, SingularMatrixError
from .seifert import (SeifertMatrix, alexander, alexander_presentation,
                      connected_sum, conway_a2, half_conway_a2, levine_matrix,
                      random_seifert)
from .theta import ThetaElement, canonical_triple, theta_from_tensor

__version__ = "0.1.0"

__all__ = [
    "CLASP_BEAD", "FileFormatError", "HSeries", "KnotCatalogEntry",
    "LaurentPoly", "LinkingMatrix", "Matrix", "ONE", "ParseError", "RatFun",
    "SeifertMatrix", "SingularMatrixError", "T", "ThetaElement", "ZERO",
    "alexander", "alexander_presentation", "canonical_triple", "catalog",
    "connected_sum", "contract", "conway_a2", "half_conway_a2", "levine_matrix",
    "load_linking", "load_seifert", "lookup", "parse_laurent", "pattern_q1",
    "q1_whitehead", "random_seifert", "theta_from_tensor",
    "whitehead_linking_matrix",
]
