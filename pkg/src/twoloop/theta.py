"""The target space of the two-loop invariant.

Elements are rational linear combinations of beaded theta graphs: a fixed
trivalent graph with two vertices and three parallel edges, each edge carrying
a bead t^e.  Writing a generator as the exponent triple (e1, e2, e3), the
space is the quotient of the free module on triples by two families of
relations:

* simultaneous shift: (e1, e2, e3) ~ (e1 + s, e2 + s, e3 + s) for s an
  integer, because a bead can slide through a vertex onto the other two edges;
* graph symmetry: the triple may be permuted arbitrarily (the three edges are
  parallel) and all exponents may be negated at once (reversing both
  vertices' orientations inverts every bead).

Each orbit therefore has 6 * 2 = 12 candidate representatives up to shift;
``canonical_triple`` picks the lexicographically smallest one after shifting
the minimum exponent to zero, and ``ThetaElement`` stores its terms keyed by
these canonical triples, which makes equality in the quotient structural.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .laurent import LaurentPoly, _fraction


def canonical_triple(e1: int, e2: int, e3: int) -> tuple[int, int, int]:
    """Canonical representative of the orbit of (e1, e2, e3).

    Enumerates all 12 symmetry images, shifts each so its minimum is zero,
    and returns the lexicographically smallest result.
    """
    best = None
    for p in permutations((e1, e2, e3)):
        for cand in (p, (-p[0], -p[1], -p[2])):
            m = min(cand)
            shifted = (cand[0] - m, cand[1] - m, cand[2] - m)
            if best is None or shifted < best:
                best = shifted
    return best


def _slot_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly(x)


class ThetaElement:
    """A finite rational combination of canonical exponent triples.

    Supports addition, subtraction and scalar multiplication; there is no
    product (the space has none).  The canonical rendering lists terms in
    lexicographic triple order as ``c * <e1,e2,e3>`` joined by `` + ``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[tuple[int, int, int], Fraction] = {}
        if terms:
            for triple, c in terms.items():
                c = _fraction(c)
                if not c:
                    continue
                key = canonical_triple(*triple)
                s = data.get(key, Fraction(0)) + c
                if s:
                    data[key] = s
                else:
                    data.pop(key, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "ThetaElement":
        return cls()

    def coefficient(self, triple) -> Fraction:
        return self._terms.get(canonical_triple(*triple), Fraction(0))

    @property
    def terms(self) -> dict:
        """Canonical-triple -> coefficient mapping (a copy)."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        data = dict(self._terms)
        for k, c in other._terms.items():
            s = data.get(k, Fraction(0)) + c
            if s:
                data[k] = s
            else:
                del data[k]
        out = ThetaElement.__new__(ThetaElement)
        out._terms = data
        return out

    def __neg__(self):
        out = ThetaElement.__new__(ThetaElement)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        if not scalar:
            return ThetaElement()
        out = ThetaElement.__new__(ThetaElement)
        out._terms = {k: c * scalar for k, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c} * <{k[0]},{k[1]},{k[2]}>"
                          for k, c in sorted(self._terms.items()))

    def __repr__(self):
        return f"ThetaElement({str(self)!r})"

    def bead_form(self) -> str:
        """Tensor-with-beads rendering, one summand per distinct first two
        slots, e.g. ``1 (x) 1 (x) (t - 2 + t^-1)``.

        Terms sharing their first two exponents are regrouped into a single
        bead polynomial on the third edge.  A group over (0, 0) is replaced
        by its bar-symmetrization (the same element of the quotient, by the
        simultaneous-negation relation), which restores negative exponents
        that canonicalization folded away.
        """
        if not self._terms:
            return "0"
        groups: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (e1, e2, e3), c in self._terms.items():
            groups.setdefault((e1, e2), {})[e3] = c
        parts = []
        for e1, e2 in sorted(groups):
            poly = LaurentPoly(groups[(e1, e2)])
            if (e1, e2) == (0, 0):
                poly = (poly + poly.bar()) * Fraction(1, 2)
            content, prim = poly.content_and_primitive()
            body = f"{_bead(e1)} (x) {_bead(e2)} (x) ({prim})"
            parts.append(body if content == 1 else f"{content} * {body}")
        return " + ".join(parts)


def _bead(e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return "t"
    return f"t^{e}"


def theta_from_tensor(p, q, r) -> ThetaElement:
    """Image of p (x) q (x) r in the quotient: distribute over monomials of
    the three slot polynomials and canonicalize each resulting triple."""
    p, q, r = _slot_poly(p), _slot_poly(q), _slot_poly(r)
    data: dict[tuple[int, int, int], Fraction] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            c12 = c1 * c2
            for e3, c3 in r.items():
                key = canonical_triple(e1, e2, e3)
                s = data.get(key, Fraction(0)) + c12 * c3
                if s:
                    data[key] = s
                else:
                    del data[key]
    out = ThetaElement.__new__(ThetaElement)
    out._terms = data
    return out
