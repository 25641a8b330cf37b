"""Exact Laurent polynomials over the rationals.

A Laurent polynomial is a finite rational combination of integer powers of a
single variable t, negative exponents allowed.  Everything here is exact:
coefficients are `fractions.Fraction` values, equality is structural, and no
floating point appears anywhere.

The two operations that matter downstream and are easy to get wrong:

* ``bar()`` is the involution t -> t^-1.
* ``exp_series(order)`` substitutes t = e^h and returns the Taylor
  coefficients about h = 0 as exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, lcm


def _fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


class LaurentPoly:
    """An element of Q[t, t^-1].

    Stored as a map from exponent to nonzero coefficient; the zero polynomial
    is the empty map.  Instances are immutable by convention: every operation
    returns a new object, and hashing is supported.

    Construct from a dict, a number, or another LaurentPoly::

        w = T + T**-1 - 2            # the module constant T is the variable
        w == LaurentPoly({1: 1, -1: 1, 0: -2})

    ``str`` renders the canonical form used throughout the package: terms in
    decreasing exponent order, exponents written ``t^k``, unit coefficients
    suppressed, so ``str(w) == "t - 2 + t^-1"``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data: dict[int, Fraction] = {}
        if coeffs is None:
            pass
        elif isinstance(coeffs, LaurentPoly):
            data = dict(coeffs._coeffs)
        elif isinstance(coeffs, dict):
            for e, c in coeffs.items():
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError("exponents must be integers")
                c = _fraction(c)
                if c:
                    data[e] = c
        else:
            c = _fraction(coeffs)
            if c:
                data[0] = c
        self._coeffs = data

    @staticmethod
    def _raw(data: dict[int, Fraction]) -> "LaurentPoly":
        # internal: data must already be zero-free with Fraction values
        p = LaurentPoly.__new__(LaurentPoly)
        p._coeffs = data
        return p

    @classmethod
    def term(cls, coeff, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- inspection

    def coeff(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self):
        """Sorted (exponent, coefficient) pairs."""
        return sorted(self._coeffs.items())

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    # -- ring structure

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                del data[e]
        return LaurentPoly._raw(data)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # convolve integer numerators against a common denominator; far
        # cheaper than accumulating in Fraction arithmetic term by term
        da = db = 1
        for c in self._coeffs.values():
            da = da * c.denominator // gcd(da, c.denominator)
        for c in other._coeffs.values():
            db = db * c.denominator // gcd(db, c.denominator)
        ai = [(e, c.numerator * (da // c.denominator)) for e, c in self._coeffs.items()]
        bi = [(e, c.numerator * (db // c.denominator)) for e, c in other._coeffs.items()]
        acc: dict[int, int] = {}
        for e1, c1 in ai:
            for e2, c2 in bi:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        scale = da * db
        if scale == 1:
            data = {e: Fraction(v) for e, v in acc.items() if v}
        else:
            data = {e: Fraction(v, scale) for e, v in acc.items() if v}
        return LaurentPoly._raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if len(self._coeffs) != 1:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            ((e, c),) = self._coeffs.items()
            return LaurentPoly._raw({e * n: c ** n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- the operations the invariants are built from

    def bar(self) -> "LaurentPoly":
        """The involution t -> t^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._coeffs.items()})

    def __call__(self, x) -> Fraction:
        """Evaluate at a rational point."""
        x = Fraction(x)
        if x == 0:
            if any(e < 0 for e in self._coeffs):
                raise ZeroDivisionError("pole at t = 0")
            return self._coeffs.get(0, Fraction(0))
        return sum((c * x ** e for e, c in self._coeffs.items()), Fraction(0))

    def exp_series(self, order: int) -> "HSeries":
        """Taylor coefficients of p(e^h) about h = 0, through h^order.

        Each monomial c*t^m contributes c*m^k/k! at h^k.
        """
        if order < 0:
            raise ValueError("order must be nonnegative")
        out = [Fraction(0)] * (order + 1)
        for m, c in self._coeffs.items():
            power = 1
            for k in range(order + 1):
                out[k] += c * Fraction(power, factorial(k))
                power *= m
        return HSeries(out)

    def content_and_primitive(self) -> tuple[Fraction, "LaurentPoly"]:
        """Split p = c * q where q has coprime integer coefficients and a
        positive coefficient on its highest power.  Zero splits as (1, 0)."""
        if not self._coeffs:
            return Fraction(1), self
        g = gcd(*(c.numerator for c in self._coeffs.values()))
        l = lcm(*(c.denominator for c in self._coeffs.values()))
        c = Fraction(g, l)
        if self._coeffs[max(self._coeffs)] < 0:
            c = -c
        return c, LaurentPoly._raw({e: v / c for e, v in self._coeffs.items()})

    # -- rendering

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                atom = "t" if e == 1 else f"t^{e}"
                body = atom if mag == 1 else f"{mag}*{atom}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


class HSeries:
    """A truncated Taylor series in a formal variable h, exact coefficients.

    Compares equal to any sequence of numbers with the same values, which is
    convenient in tests: ``p.exp_series(2) == (1, 1, Fraction(1, 2))``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = tuple(_fraction(c) for c in coeffs)
        if not self._coeffs:
            raise ValueError("a series needs at least its constant term")

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, HSeries):
            return self._coeffs == other._coeffs
        try:
            other = tuple(_fraction(c) for c in other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"HSeries(({inner}))"


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
T = LaurentPoly({1: 1})
