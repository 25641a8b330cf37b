# Knot invariants from Seifert matrices: Alexander polynomial and the
# degree-2 coefficient a2, plus their behaviour under connected sum.

from twoloop import (SeifertMatrix, alexander, connected_sum, conway_a2,
                     half_conway_a2, lookup)

trefoil = lookup("trefoil-right").matrix
fig8 = lookup("figure-eight").matrix

for name, A in [("trefoil", trefoil), ("figure-eight", fig8)]:
    print(f"{name}:")
    print("  Seifert matrix     ", [list(r) for r in A.rows])
    print("  Alexander          ", alexander(A))
    print("  a2                 ", conway_a2(A))
    print("  a2 / 2             ", half_conway_a2(A))

# The Alexander polynomial is symmetric under t -> t^-1 and takes the
# value 1 at t = 1; both are guaranteed by the normalization.
d = alexander(trefoil)
print("bar-symmetric:", d.bar() == d, " value at 1:", d(1))

# Connected sum multiplies Alexander polynomials and adds a2.
s = connected_sum(trefoil, fig8)
print("connected sum is", s.n, "x", s.n)
print("product check :", alexander(s) == alexander(trefoil) * alexander(fig8))
print("additive check:", conway_a2(s) == conway_a2(trefoil) + conway_a2(fig8))

# A genus-2 example written down directly: rows are integer lists, and the
# constructor checks det(A - A^T) = 1, i.e. that the matrix is a genuine
# Seifert pairing.
B = SeifertMatrix([[-1, 1, 0, 0],
                   [0, -1, 0, 0],
                   [0, 0, 1, 1],
                   [0, 0, 0, -1]])
print("genus-2 Alexander:", alexander(B))
