"""Seifert matrix invariants against hand-computed and sympy oracles."""

import random
from fractions import Fraction

import sympy

from twoloop.laurent import ONE, T, LaurentPoly
from twoloop.ratfun import Matrix, RatFun
from twoloop.seifert import (SeifertMatrix, alexander, alexander_presentation,
                             connected_sum, conway_a2, half_conway_a2,
                             levine_matrix, random_seifert)

from util import from_sympy, t_sym

UNKNOT = SeifertMatrix([])
TREFOIL = SeifertMatrix([[-1, 1], [0, -1]])
FIG8 = SeifertMatrix([[1, 1], [0, -1]])
WH_PLUS = SeifertMatrix([[0, 1], [0, 1]])
WH_MINUS = SeifertMatrix([[0, 1], [0, -1]])


def test_validation():
    for bad in ([[1]], [[0, 1], [0, 1], [0, 1]]):
        try:
            SeifertMatrix(bad)
        except ValueError:
            pass
        else:
            assert False, f"{bad} accepted"
    try:
        SeifertMatrix([[0, 2], [0, 0]])  # skew part det = 4
    except ValueError:
        pass
    else:
        assert False
    try:
        SeifertMatrix([[0, 1], [0, Fraction(1, 2)]])
    except ValueError:
        pass
    else:
        assert False
    try:
        SeifertMatrix([[0, 1], [0]])
    except ValueError:
        pass
    else:
        assert False
    assert UNKNOT.n == 0


def test_alexander_trefoil_cofactor_oracle():
    # 2x2 determinant expanded by hand: for M = [[a, b], [c, d]], det = ad - bc
    a, b = -T + 1, T
    c, d = LaurentPoly(-1), -T + 1
    det_oracle = a * d - b * c
    assert det_oracle == T ** 2 - T + 1
    got = alexander(TREFOIL)
    assert got == det_oracle.shift(-1)
    assert got == T - 1 + T ** -1
    assert str(got) == "t - 1 + t^-1"


def test_alexander_frozen_values():
    assert alexander(UNKNOT) == ONE
    assert alexander(FIG8) == -T + 3 - T ** -1
    assert alexander(WH_PLUS) == ONE
    assert alexander(WH_MINUS) == ONE
    # the left-handed trefoil is the negated transpose of the right-handed one
    left = SeifertMatrix([[1, 0], [-1, 1]])
    assert alexander(left) == alexander(TREFOIL)


def test_conway_a2_frozen_values():
    assert conway_a2(UNKNOT) == 0
    assert conway_a2(TREFOIL) == 1
    assert conway_a2(FIG8) == -1
    assert conway_a2(WH_PLUS) == 0
    assert conway_a2(WH_MINUS) == 0
    assert half_conway_a2(TREFOIL) == Fraction(1, 2)
    assert half_conway_a2(FIG8) == Fraction(-1, 2)


def test_levine_matrix_doubling_surfaces():
    w = T + T ** -1 - 2
    for eps in (1, -1):
        B = levine_matrix(SeifertMatrix([[0, 1], [0, eps]]))
        expected = Matrix([
            [RatFun(eps * w), RatFun(1 - T)],
            [RatFun(1 - T ** -1), RatFun(0)],
        ])
        assert B == expected


def test_levine_matrix_trefoil():
    B = levine_matrix(TREFOIL)
    delta = T ** 2 - T + 1
    expected = Matrix([
        [RatFun((T - 1) * (1 - T), delta), RatFun((T - 1) * -T, delta)],
        [RatFun(T - 1, delta), RatFun((T - 1) * (1 - T), delta)],
    ])
    assert B == expected
    # defining property: B * (tA - A^T) = (t-1) * I
    assert B * alexander_presentation(TREFOIL) == RatFun(T - 1) * Matrix.identity(2)


def test_levine_unknot_rejected():
    try:
        levine_matrix(UNKNOT)
    except ValueError:
        pass
    else:
        assert False


def sympy_alexander(A):
    n = A.n
    m = sympy.Matrix([[t_sym * A[i][j] - A[j][i] for j in range(n)] for i in range(n)])
    det = m.det() if n else sympy.Integer(1)
    return from_sympy(sympy.expand(det * t_sym ** sympy.Rational(-n // 2)))


def test_random_seifert_properties():
    rng = random.Random(2601)
    for _ in range(40):
        A = random_seifert(rng.choice([1, 2, 3]), rng)
        p = alexander(A)
        assert p == sympy_alexander(A)
        assert p.bar() == p
        assert p(1) == 1
        series = p.exp_series(7)
        assert series[1] == series[3] == series[5] == series[7] == 0
        assert conway_a2(A).denominator == 1
        assert conway_a2(A) == 2 * half_conway_a2(A)
    assert random_seifert(0, rng) == UNKNOT


def test_random_levine_properties():
    rng = random.Random(2602)
    for _ in range(15):
        A = random_seifert(rng.choice([1, 2]), rng)
        B = levine_matrix(A)
        assert B.transpose() == B.bar()
        for row in B:
            for e in row:
                assert e(1) == 0
        assert B * alexander_presentation(A) == RatFun(T - 1) * Matrix.identity(A.n)


def test_connected_sum():
    s = connected_sum(TREFOIL, FIG8)
    assert s.n == 4
    assert alexander(s) == alexander(TREFOIL) * alexander(FIG8)
    assert conway_a2(s) == conway_a2(TREFOIL) + conway_a2(FIG8)
    assert connected_sum(UNKNOT, TREFOIL) == TREFOIL
    rng = random.Random(2603)
    for _ in range(20):
        A1 = random_seifert(rng.choice([1, 2]), rng)
        A2 = random_seifert(rng.choice([1, 2]), rng)
        s = connected_sum(A1, A2)
        assert alexander(s) == alexander(A1) * alexander(A2)
        assert conway_a2(s) == conway_a2(A1) + conway_a2(A2)
