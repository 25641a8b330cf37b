# The target space of the invariant: formal sums of exponent triples
# <e1, e2, e3> invariant under permuting the slots and under negating all
# three at once, reduced to canonical representatives so equality is plain
# dict comparison.

from fractions import Fraction

from twoloop import (CLASP_BEAD, LaurentPoly, T, ThetaElement,
                     canonical_triple, theta_from_tensor)

# All twelve symmetry images of a triple share one canonical key.
print("canonical (3, 1, 2)   :", canonical_triple(3, 1, 2))
print("canonical (-3, -2, -1):", canonical_triple(-3, -2, -1))

# theta_from_tensor(p, q, r) expands polynomial slots multilinearly.
x = theta_from_tensor(T, 1, 1)
print("theta(t, 1, 1)        :", x)

# Negating every slot exponent gives the same element.
print("equal to theta(t^-1,1,1)?", x == theta_from_tensor(T**-1, 1, 1))

# Elements form a rational vector space.
y = theta_from_tensor(T**2, T, 1) - Fraction(1, 2) * x
print("combination           :", y)

# bead_form() regroups a sum as first-two-slot tensors times a Laurent
# polynomial in the last slot, with rational content pulled out front.
w = CLASP_BEAD
print("clasp bead            :", w)
z = theta_from_tensor(1, 1, w * LaurentPoly({0: Fraction(3, 4)}))
print("canonical form        :", z)
print("bead form             :", z.bead_form())

# Mixed sums render one group per bead pair.
mixed = theta_from_tensor(1, 1, w) + theta_from_tensor(1, T, T**2)
print("mixed bead form       :", mixed.bead_form())

# Coefficients of individual canonical triples are directly addressable.
print("coefficient of <0,0,1>:", mixed.coefficient((0, 0, 1)))
print("zero element is falsy :", bool(ThetaElement()))
