# The equivariant linking matrix B = (t - 1)(tA - A^T)^{-1} attached to a
# Seifert matrix A, computed exactly over the field of rational functions.

from twoloop import (Matrix, RatFun, T, alexander_presentation, levine_matrix,
                     lookup)

A = lookup("trefoil-right").matrix
B = levine_matrix(A)

print("Seifert matrix A:", [list(r) for r in A.rows])
print("equivariant linking matrix:")
for row in B:
    print("  [" + ", ".join(str(e) for e in row) + "]")

# B is defined by B * (tA - A^T) = (t - 1) * I; check it literally.
P = alexander_presentation(A)
n = A.n
lhs = B * P
rhs = Matrix.identity(n) * (T - 1)
print("B (tA - A^T) == (t-1) I :", lhs == rhs)

# Every entry shares the denominator det(tA - A^T), the (unnormalized)
# Alexander polynomial, so the common den of the trefoil is t^2 - t + 1.
print("entry denominators:", {str(e.den) for row in B for e in row})

# The same machinery inverts any nonsingular matrix over the function field.
M = Matrix([[RatFun(T), RatFun(1)],
            [RatFun(1), RatFun(T, T - 1)]])
print("det M     :", M.det())
print("M^-1[0][0]:", M.inverse()[0][0])
print("M * M^-1 == I:", M * M.inverse() == Matrix.identity(2))
