# Exact Laurent polynomial arithmetic: the base ring everything else uses.

from fractions import Fraction

from twoloop import LaurentPoly, T

# Build from a dict of exponent -> coefficient, or from scalars.
p = LaurentPoly({1: 1, 0: -2, -1: 1})        # t - 2 + t^-1
q = T - 1

print("p          =", p)
print("q          =", q)
print("p + q      =", p + q)
print("p * q      =", p * q)
print("q**3       =", q**3)
print("t^-2 * p   =", T**-2 * p)

# The bar involution swaps t and t^-1; p above is its own bar image.
print("bar(p)     =", p.bar())
print("symmetric? ", p.bar() == p)

# Evaluation plugs in an exact rational point.
print("p(2)       =", p(2))
print("p(1/3)     =", p(Fraction(1, 3)))

# Coefficient access and support.
print("coeff of t =", p.coeff(1), " support:", sorted(e for e, _ in p.items()))

# exp_series(order) expands h -> sum_k coeff * m^k h^k / k! after t = e^h,
# truncated at the given order.  Order-2 coefficients are what the degree-2
# invariant reads off a normalized Alexander polynomial.
series = p.exp_series(4)
print("p(e^h) through h^4:", list(series))

# Content and primitive part: rational content times integer-coprime
# polynomial with positive leading coefficient.
r = LaurentPoly({2: Fraction(4, 3), 0: Fraction(-2, 3)})
c, prim = r.content_and_primitive()
print(f"{r}  =  {c} * ({prim})")
