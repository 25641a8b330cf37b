"""Shared helpers for the test suite: random generators and sympy bridges.

sympy is used here as an independent oracle only; the package itself never
imports it.
"""

from fractions import Fraction

import sympy

from twoloop.laurent import LaurentPoly

t_sym = sympy.Symbol("t")


def random_laurent(rng, max_terms=4, exp_bound=6, coeff_bound=9, allow_zero=True):
    """Random Laurent polynomial with exponents in [-exp_bound, exp_bound]."""
    data = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        num = rng.randint(-coeff_bound, coeff_bound)
        den = rng.randint(1, 4)
        data[rng.randint(-exp_bound, exp_bound)] = Fraction(num, den)
    p = LaurentPoly(data)
    if not allow_zero or p:
        return p
    return p


def random_int_laurent(rng, max_terms=3, exp_bound=3, coeff_bound=3):
    data = {}
    for _ in range(rng.randint(0, max_terms)):
        data[rng.randint(-exp_bound, exp_bound)] = rng.randint(-coeff_bound, coeff_bound)
    return LaurentPoly(data)


def to_sympy(p: LaurentPoly):
    return sympy.Add(*(sympy.Rational(c) * t_sym ** e for e, c in p.items()))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    data = {}
    for term in sympy.Add.make_args(expr):
        c, mon = term.as_coeff_Mul()
        if mon == 1:
            e = 0
        else:
            base, e = mon.as_base_exp()
            assert base == t_sym and e.is_Integer
            e = int(e)
        data[e] = data.get(e, Fraction(0)) + Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return LaurentPoly(data)
