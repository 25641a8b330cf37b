"""Seifert matrices and the abelian invariants computed from them.

A Seifert matrix here is a square integer matrix A of even size whose skew
part A - A^T is unimodular (determinant exactly 1).  The 0x0 matrix presents
the unknot.  Everything downstream is a function of A:

* ``alexander(A)``: the symmetric Alexander polynomial,
  t^(-n/2) * det(tA - A^T), normalized so bar(p) == p and p(1) == 1.
* ``conway_a2(A)``: the degree-2 coefficient c2 in
  alexander(A)(e^h) = 1 + c2*h^2 + O(h^4); an integer.
* ``half_conway_a2(A)``: c2/2, the multiplier that doubling formulas carry.
* ``levine_matrix(A)``: the matrix (t-1)(tA - A^T)^{-1} of equivariant
  linking numbers of the surface's dual meridians.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .laurent import LaurentPoly, T
from .ratfun import Matrix, RatFun


def _int_det(rows) -> int:
    # Bareiss over the integers; all interior divisions are exact
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class SeifertMatrix:
    """Square integer matrix with unimodular skew part, even size."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        checked = []
        for row in rows:
            entries = tuple(row)
            for x in entries:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("entries must be integers")
            checked.append(entries)
        n = len(checked)
        if any(len(r) != n for r in checked):
            raise ValueError("matrix must be square")
        if n % 2 != 0:
            raise ValueError("size must be even (a genus-g surface has 2g bands)")
        skew = [[checked[i][j] - checked[j][i] for j in range(n)] for i in range(n)]
        if _int_det(skew) != 1:
            raise ValueError("A - A^T must have determinant 1")
        self._rows = tuple(checked)

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, i):
        return self._rows[i]

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SeifertMatrix({[list(r) for r in self._rows]!r})"


def alexander_presentation(A: SeifertMatrix) -> Matrix:
    """The matrix tA - A^T over the rational function field."""
    n = A.n
    return Matrix([[LaurentPoly({1: A[i][j], 0: -A[j][i]}) for j in range(n)]
                   for i in range(n)])


def alexander(A: SeifertMatrix) -> LaurentPoly:
    """Symmetric Alexander polynomial of the knot the surface spans."""
    d = alexander_presentation(A).det()
    assert d.den == LaurentPoly(1)
    p = d.num.shift(-A.n // 2)
    assert p.bar() == p and p(1) == 1
    return p


def conway_a2(A: SeifertMatrix) -> Fraction:
    """Coefficient of h^2 in alexander(A)(e^h); the degree-2 Vassiliev invariant."""
    return alexander(A).exp_series(2)[2]


def half_conway_a2(A: SeifertMatrix) -> Fraction:
    """Half of conway_a2; the factor that multiplies a pattern's constant
    under satellite formulas for doubles."""
    return conway_a2(A) / 2


def levine_matrix(A: SeifertMatrix) -> Matrix:
    """(t-1)(tA - A^T)^{-1}: equivariant linking numbers of dual meridians.

    Vanishes entrywise at t = 1 and satisfies B(t)^T == B(1/t).
    """
    if A.n == 0:
        raise ValueError("the unknot's empty surface has no dual meridians")
    return RatFun(T - 1) * alexander_presentation(A).inverse()


def connected_sum(A1: SeifertMatrix, A2: SeifertMatrix) -> SeifertMatrix:
    """Block sum; presents the connected sum of the two knots."""
    n1, n2 = A1.n, A2.n
    rows = [list(A1[i]) + [0] * n2 for i in range(n1)]
    rows += [[0] * n1 + list(A2[i]) for i in range(n2)]
    return SeifertMatrix(rows)


def random_seifert(genus: int, rng: random.Random, bound: int = 2) -> SeifertMatrix:
    """Random valid Seifert matrix of size 2*genus.

    Symmetric noise plus the upper-triangular half of the standard symplectic
    form; the skew part is then exactly the symplectic form, so validity
    never needs rejection sampling.
    """
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = v
    for i in range(0, n, 2):
        rows[i][i + 1] += 1
    return SeifertMatrix(rows)
