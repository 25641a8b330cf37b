"""Contracting a pair of Y-graphs along their leaves.

A degree-2 tree clasper has two Y-shaped components with three leaves each.
Once every leaf of one component is paired with a leaf of the other, the pair
contracts to a beaded theta graph whose three edges carry the equivariant
linking polynomials of the matched leaves.  Summing over all ways to match
the leaves gives the contraction map implemented here.

``LinkingMatrix`` holds the 3x3 grid of leaf linkings: entry (i, j) is the
linking of leaf i of the first component with leaf j of the second, as a
Laurent polynomial in the deck variable t.
"""

from __future__ import annotations

from itertools import permutations

from .laurent import LaurentPoly
from .theta import ThetaElement, theta_from_tensor

# self-linking bead of a nullhomotopic clasp: t + 1/t - 2
CLASP_BEAD = LaurentPoly({1: 1, -1: 1, 0: -2})


class LinkingMatrix:
    """3x3 matrix of Laurent polynomials recording leaf linkings."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        coerced = tuple(tuple(LaurentPoly(e) if not isinstance(e, LaurentPoly) else e
                              for e in row) for row in rows)
        if len(coerced) != 3 or any(len(r) != 3 for r in coerced):
            raise ValueError("a linking matrix is 3x3")
        self._rows = coerced

    @classmethod
    def diagonal(cls, a, b, c) -> "LinkingMatrix":
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, i):
        return self._rows[i]

    def __eq__(self, other):
        if not isinstance(other, LinkingMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"LinkingMatrix({[[str(e) for e in row] for row in self._rows]!r})"


def contract(L: LinkingMatrix) -> ThetaElement:
    """Sum over the six leaf matchings of the theta graph they produce.

    Matching sigma pairs leaf i of the first component with leaf sigma(i) of
    the second; edge i of the resulting theta graph carries L[i][sigma(i)].
    """
    total = ThetaElement.zero()
    for sigma in permutations(range(3)):
        total = total + theta_from_tensor(L[0][sigma[0]], L[1][sigma[1]], L[2][sigma[2]])
    return total


def whitehead_linking_matrix(eps: int) -> LinkingMatrix:
    """Leaf linkings of the clasper pair that turns a double of a knot with
    clasp sign eps into its untwisted Whitehead double.

    The first leaf pair runs over the clasp and self-links eps*(t + 1/t - 2);
    the two remaining pairs link the doubled strands once and everything else
    not at all.
    """
    if eps not in (1, -1):
        raise ValueError("clasp sign must be +1 or -1")
    return LinkingMatrix.diagonal(eps * CLASP_BEAD, 1, 1)
