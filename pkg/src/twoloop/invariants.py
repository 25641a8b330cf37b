"""Top-level invariant formulas for doubled knots.

The two-loop invariant of an untwisted Whitehead double depends on the
companion knot only through half of its degree-2 Conway coefficient, and the
dependence is linear.  These functions package that:

* ``q1_whitehead(A, eps)``: the full invariant of the eps-clasped untwisted
  Whitehead double of the knot with Seifert matrix A.
* ``pattern_q1(base, constant, A)``: the same linearity for an arbitrary
  satellite pattern, with the pattern's two characteristic values supplied by
  the caller.
"""

from __future__ import annotations

from .contraction import CLASP_BEAD
from .seifert import SeifertMatrix, half_conway_a2
from .theta import ThetaElement, theta_from_tensor


def q1_whitehead(A: SeifertMatrix, eps: int) -> ThetaElement:
    """Two-loop invariant of the untwisted Whitehead double with clasp sign eps.

    Equals eps * half_conway_a2(A) * (1 (x) 1 (x) (t + 1/t - 2)); in
    particular it vanishes exactly when the companion's degree-2 coefficient
    does, and never sees more of the companion than that coefficient.
    """
    if eps not in (1, -1):
        raise ValueError("clasp sign must be +1 or -1")
    return (eps * half_conway_a2(A)) * theta_from_tensor(1, 1, CLASP_BEAD)


def pattern_q1(base: ThetaElement, constant: ThetaElement,
               A: SeifertMatrix) -> ThetaElement:
    """Invariant of a satellite with an arbitrary winding-number-zero pattern.

    ``base`` is the pattern's value on the unknot and ``constant`` its
    correction term; the companion enters only through half_conway_a2(A).
    """
    return base + half_conway_a2(A) * constant
