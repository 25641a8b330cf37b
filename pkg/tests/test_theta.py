"""Canonical forms in the beaded theta-graph space."""

import random
from fractions import Fraction

from twoloop.laurent import T, LaurentPoly
from twoloop.theta import ThetaElement, canonical_triple, theta_from_tensor

from util import random_laurent

W = T + T ** -1 - 2


def orbit_min_oracle(triple):
    """Independent oracle: BFS closure under the symmetry generators, with
    every visited triple normalized to have minimum exponent zero."""
    def norm(t):
        m = min(t)
        return (t[0] - m, t[1] - m, t[2] - m)

    seen = {norm(triple)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for t in frontier:
            for img in (
                (t[1], t[0], t[2]),
                (t[0], t[2], t[1]),
                (-t[0], -t[1], -t[2]),
                (t[0] + 1, t[1] + 1, t[2] + 1),
            ):
                n = norm(img)
                if n not in seen:
                    seen.add(n)
                    fresh.append(n)
        frontier = fresh
    return min(seen)


def test_canonical_triple_frozen():
    assert canonical_triple(0, 0, 0) == (0, 0, 0)
    assert canonical_triple(1, 0, 0) == (0, 0, 1)
    assert canonical_triple(1, 1, 1) == (0, 0, 0)
    assert canonical_triple(2, 1, 0) == (0, 1, 2)
    assert canonical_triple(5, 3, 3) == (0, 0, 2)
    # negation can beat the identity: (0,2,3) ~ (-0,-2,-3) ~ (3,1,0) ~ (0,1,3)
    assert canonical_triple(0, 2, 3) == (0, 1, 3)
    assert canonical_triple(0, 1, 3) == (0, 1, 3)


def test_canonical_triple_against_orbit_oracle():
    rng = random.Random(7001)
    for _ in range(500):
        e = tuple(rng.randint(-6, 6) for _ in range(3))
        got = canonical_triple(*e)
        assert got == orbit_min_oracle(e)
        # canonical triples are fixed points
        assert canonical_triple(*got) == got
        assert min(got) == 0


def test_canonical_triple_orbit_invariance():
    rng = random.Random(7002)
    for _ in range(500):
        e = [rng.randint(-6, 6) for _ in range(3)]
        base = canonical_triple(*e)
        perm = rng.sample(e, 3)
        s = rng.randint(-5, 5)
        assert canonical_triple(*(x + s for x in perm)) == base
        assert canonical_triple(*(-x + s for x in perm)) == base


def test_element_merging_and_cancellation():
    x = ThetaElement({(1, 0, 0): 1, (0, 0, 1): 1})
    assert x.terms == {(0, 0, 1): Fraction(2)}
    assert x.coefficient((0, 1, 0)) == 2
    y = ThetaElement({(1, 0, 0): 1, (0, 1, 0): -1})
    assert y.is_zero
    assert y == ThetaElement.zero()
    assert str(y) == "0"


def test_module_structure():
    rng = random.Random(7003)
    for _ in range(50):
        def rand_el():
            return ThetaElement({tuple(rng.randint(-3, 3) for _ in range(3)):
                                 Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                 for _ in range(rng.randint(0, 4))})
        a, b = rand_el(), rand_el()
        assert a + b == b + a
        assert a - a == ThetaElement.zero()
        assert 2 * a == a + a
        assert Fraction(1, 2) * (a + a) == a
        assert -1 * a == -a
        assert 0 * a == ThetaElement.zero()


def test_tensor_map_frozen():
    x = theta_from_tensor(1, 1, W)
    assert x.terms == {(0, 0, 0): Fraction(-2), (0, 0, 1): Fraction(2)}
    assert str(x) == "-2 * <0,0,0> + 2 * <0,0,1>"
    assert theta_from_tensor(1, 1, 1).terms == {(0, 0, 0): Fraction(1)}
    assert theta_from_tensor(0, 1, W).is_zero
    assert theta_from_tensor(T, T, T) == theta_from_tensor(1, 1, 1)


def test_tensor_map_properties():
    rng = random.Random(7004)
    for _ in range(40):
        p = random_laurent(rng, max_terms=3, exp_bound=3)
        q = random_laurent(rng, max_terms=3, exp_bound=3)
        r = random_laurent(rng, max_terms=3, exp_bound=3)
        x = theta_from_tensor(p, q, r)
        # slot symmetry, simultaneous shift, simultaneous bar
        assert x == theta_from_tensor(q, p, r)
        assert x == theta_from_tensor(p, r, q)
        assert x == theta_from_tensor(p.shift(1), q.shift(1), r.shift(1))
        assert x == theta_from_tensor(p.bar(), q.bar(), r.bar())
        # multilinearity
        p2 = random_laurent(rng, max_terms=2, exp_bound=3)
        assert theta_from_tensor(p + p2, q, r) == x + theta_from_tensor(p2, q, r)
        assert theta_from_tensor(3 * p, q, r) == 3 * x


def test_grouping_is_faithful():
    # terms grouped by their first two slots rebuild the same element
    rng = random.Random(7005)
    for _ in range(30):
        el = ThetaElement({tuple(rng.randint(-4, 4) for _ in range(3)):
                           Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                           for _ in range(rng.randint(0, 5))})
        groups = {}
        for (e1, e2, e3), c in el.terms.items():
            groups.setdefault((e1, e2), {})[e3] = c
        rebuilt = ThetaElement.zero()
        for (e1, e2), poly in groups.items():
            rebuilt = rebuilt + theta_from_tensor(
                LaurentPoly({e1: 1}), LaurentPoly({e2: 1}), LaurentPoly(poly))
        assert rebuilt == el


def test_bead_form_frozen():
    x = theta_from_tensor(1, 1, W)
    assert x.bead_form() == "1 (x) 1 (x) (t - 2 + t^-1)"
    assert (Fraction(1, 2) * x).bead_form() == "1/2 * 1 (x) 1 (x) (t - 2 + t^-1)"
    assert (Fraction(-1, 2) * x).bead_form() == "-1/2 * 1 (x) 1 (x) (t - 2 + t^-1)"
    assert ThetaElement.zero().bead_form() == "0"
    assert theta_from_tensor(1, 1, 1).bead_form() == "1 (x) 1 (x) (1)"
    y = ThetaElement({(0, 1, 2): 3})
    assert y.bead_form() == "3 * 1 (x) t (x) (t^2)"
