# End to end: the degree-2 part of the two-loop invariant for untwisted
# Whitehead doubles, from the companion's Seifert matrix to a closed form.

from twoloop import (CLASP_BEAD, catalog, connected_sum, contract,
                     half_conway_a2, lookup, q1_whitehead, theta_from_tensor,
                     whitehead_linking_matrix)

# The doubling pattern contributes a fixed 3x3 equivariant linking matrix:
# one clasp bead scaled by the clasp sign, two trivial strands.
for eps in (1, -1):
    L = whitehead_linking_matrix(eps)
    print(f"linking matrix (eps = {eps:+d}):")
    for row in L:
        print("  [" + ", ".join(str(p) for p in row) + "]")

# Contraction pairs the three strands into exponent triples.
print("contract(+1):", contract(whitehead_linking_matrix(1)))

# For a companion K with Seifert matrix A and clasp sign eps, the invariant
# collapses to   eps * (a2(K) / 2) * theta(1, 1, w),   w the clasp bead.
print()
print("q1 of untwisted Whitehead doubles:")
for entry in catalog():
    q1 = q1_whitehead(entry.matrix, 1)
    print(f"  {entry.name:18s} a2/2 = {str(half_conway_a2(entry.matrix)):>4s}   q1 = {q1}")

# Alexander-trivial companions (a2 = 0) are invisible to the double.
unknot = lookup("unknot").matrix
print("unknot q1 is zero:", not q1_whitehead(unknot, 1))

# The invariant is linear in the companion: connected sum adds values.
a = lookup("trefoil-right").matrix
b = lookup("figure-eight").matrix
lhs = q1_whitehead(connected_sum(a, b), 1)
rhs = q1_whitehead(a, 1) + q1_whitehead(b, 1)
print("additive under connected sum:", lhs == rhs)

# Flipping the clasp negates the answer.
print("clasp sign flips value:", q1_whitehead(a, -1) == -q1_whitehead(a, 1))

# The closed form against the generic bead element:
print("matches a2/2 * theta(1,1,w):",
      q1_whitehead(a, 1) == half_conway_a2(a) * theta_from_tensor(1, 1, CLASP_BEAD))
