"""Rational functions in t and exact linear algebra over them.

RatFun is the field of fractions of the Laurent ring, kept in a normal form
that makes equality structural:

* numerator and denominator share no polynomial factor,
* the denominator is an ordinary polynomial in t with integer coprime
  coefficients, positive leading coefficient and nonzero constant term,

so every unit (powers of t, rational scalars) lives in the numerator, and the
representation of a given rational function is unique.

Matrix is a dense matrix over RatFun.  Determinants and inverses go through
fraction-free elimination on a common-denominator-cleared polynomial matrix,
so no intermediate quotient is ever formed; inverses of matrices of size at
most four use the adjugate instead.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .laurent import ONE, ZERO, LaurentPoly


class SingularMatrixError(ArithmeticError):
    """Raised when a matrix that must be inverted has determinant zero."""


# -- dense helpers on ordinary polynomials -----------------------------------
#
# A dense polynomial is a list of Fractions indexed by exponent, with no
# trailing zeros; [] is the zero polynomial.


def _split(p: LaurentPoly) -> tuple[int, list[Fraction]]:
    """Write p = t^shift * P with P an ordinary polynomial, P(0) != 0."""
    if p.is_zero:
        return 0, []
    shift = p.min_exp
    out = [Fraction(0)] * (p.max_exp - shift + 1)
    for e, c in p.items():
        out[e - shift] = c
    return shift, out


def _join(shift: int, dense: list[Fraction]) -> LaurentPoly:
    return LaurentPoly({shift + i: c for i, c in enumerate(dense) if c})


def _dense_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        f = r[k + len(b) - 1] * inv_lead
        if f:
            q[k] = f
            for i, bc in enumerate(b):
                r[k + i] -= f * bc
    return _dense_trim(q), _dense_trim(r)


def _ipoly_primitive(a):
    if not a:
        return a
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _ipoly_pseudo_rem(a, b):
    # lead(b)-scaled remainder; stays in Z[t] throughout
    r = list(a)
    lb = b[-1]
    db = len(b)
    while r and len(r) >= db:
        f = r[-1]
        r = [lb * c for c in r]
        shift = len(r) - db
        for i, bc in enumerate(b):
            r[shift + i] -= f * bc
        r = _dense_trim(r)
    return r


def _ipoly_gcd(a, b):
    a = _ipoly_primitive(list(a))
    b = _ipoly_primitive(list(b))
    while b:
        a, b = b, _ipoly_primitive(_ipoly_pseudo_rem(a, b))
    return a


def _clear_fractions(a):
    scale = 1
    for c in a:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    return [int(c * scale) for c in a]


def _dense_gcd(a, b):
    """Monic gcd, via a primitive pseudo-remainder sequence over the integers."""
    g = _ipoly_gcd(_clear_fractions(a), _clear_fractions(b))
    if not g:
        return []
    lead = Fraction(g[-1])
    return [Fraction(c) / lead for c in g]


def _content_int(dense):
    """Nonzero Fraction list -> (content, primitive int list, positive leading);
    the content carries the sign of the leading coefficient."""
    scale = 1
    for c in dense:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    ints = [int(c * scale) for c in dense]
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if ints[-1] < 0:
        g = -g
    return Fraction(g, scale), [c // g for c in ints]


def _num_parts(p):
    """Nonzero LaurentPoly -> (content, shift, primitive int list)."""
    s, dense = _split(p)
    c, ints = _content_int(dense)
    return c, s, ints


def _den_parts(p):
    """Normal-form denominator -> primitive int coefficient list."""
    return [c.numerator for c in _split(p)[1]]


def _exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Divide Laurent polynomials known to divide exactly."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return ZERO
    sp, P = _split(p)
    sq, Q = _split(q)
    quo, rem = _dense_divmod(P, Q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return _join(sp - sq, quo)


def _lcm_poly(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    g = _dense_gcd(_split(a)[1], _split(b)[1])
    return a * _exact_div(b, _join(0, g))


# -- the field ----------------------------------------------------------------


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPoly(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")


class RatFun:
    """A quotient of Laurent polynomials in normal form.  Immutable."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=1):
        if isinstance(num, RatFun) and (isinstance(den, int) and den == 1):
            self._num, self._den = num._num, num._den
            return
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self._num, self._den = ZERO, ONE
            return
        sn, N = _split(num)
        sd, D = _split(den)
        cn, Ni = _content_int(N)
        cd, Di = _content_int(D)
        g = _ipoly_gcd(Ni, Di)
        if len(g) > 1:
            Ni = _ipoly_exact_div(Ni, g)
            Di = _ipoly_exact_div(Di, g)
        c = cn / cd
        shift = sn - sd
        self._num = LaurentPoly._raw({shift + i: c * v for i, v in enumerate(Ni) if v})
        self._den = LaurentPoly._raw({i: Fraction(v) for i, v in enumerate(Di) if v})

    @staticmethod
    def _from_parts(c, shift, ni, di):
        # raw constructor: callers guarantee ni/di is already in normal form
        r = RatFun.__new__(RatFun)
        if not ni or not c:
            r._num, r._den = ZERO, ONE
            return r
        r._num = LaurentPoly._raw({shift + i: c * v for i, v in enumerate(ni) if v})
        r._den = LaurentPoly._raw({i: Fraction(v) for i, v in enumerate(di) if v})
        return r

    @property
    def num(self) -> LaurentPoly:
        return self._num

    @property
    def den(self) -> LaurentPoly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def __bool__(self):
        return bool(self._num)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (LaurentPoly, int, Fraction)) and not isinstance(other, bool):
            return RatFun(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._num.is_zero:
            return other
        if other._num.is_zero:
            return self
        c1, s1, n1 = _num_parts(self._num)
        c2, s2, n2 = _num_parts(other._num)
        d1 = _den_parts(self._den)
        d2 = _den_parts(other._den)
        # split off g = gcd(d1, d2); the sum can only stay divisible by g,
        # never by the coprime cofactors e1, e2, so the final reduction is
        # a single small gcd instead of one against the whole denominator
        if len(d1) > 1 and len(d2) > 1:
            g = _ipoly_gcd(d1, d2)
        else:
            g = [1]
        if len(g) > 1:
            e1 = _ipoly_exact_div(d1, g)
            e2 = _ipoly_exact_div(d2, g)
        else:
            e1, e2 = d1, d2
        a = _ipoly_mul(n1, e2)
        b = _ipoly_mul(n2, e1)
        den1, den2 = c1.denominator, c2.denominator
        scale = den1 * den2 // gcd(den1, den2)
        i1 = c1.numerator * (scale // den1)
        i2 = c2.numerator * (scale // den2)
        s = min(s1, s2)
        o1, o2 = s1 - s, s2 - s
        num = [0] * max(o1 + len(a), o2 + len(b))
        for i, v in enumerate(a):
            num[o1 + i] += i1 * v
        for i, v in enumerate(b):
            num[o2 + i] += i2 * v
        while num and not num[-1]:
            num.pop()
        if not num:
            return RatFun._from_parts(0, 0, [], [1])
        lead = 0
        while not num[lead]:
            lead += 1
        if lead:
            num = num[lead:]
            s += lead
        cg = 0
        for v in num:
            cg = gcd(cg, v)
            if cg == 1:
                break
        if num[-1] < 0:
            cg = -cg
        num = [v // cg for v in num]
        if len(g) > 1:
            h = _ipoly_gcd(num, g)
            if len(h) > 1:
                num = _ipoly_exact_div(num, h)
                g = _ipoly_exact_div(g, h)
        den = _ipoly_mul(g, _ipoly_mul(e1, e2))
        return RatFun._from_parts(Fraction(cg, scale), s, num, den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFun.__new__(RatFun)
        r._num, r._den = -self._num, self._den
        return r

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
        if self._num.is_zero or other._num.is_zero:
            return RatFun._from_parts(0, 0, [], [1])
        c1, s1, n1 = _num_parts(self._num)
        c2, s2, n2 = _num_parts(other._num)
        d1 = _den_parts(self._den)
        d2 = _den_parts(other._den)
        # both factors are reduced, so only the cross pairs can cancel
        if len(n1) > 1 and len(d2) > 1:
            g = _ipoly_gcd(n1, d2)
            if len(g) > 1:
                n1 = _ipoly_exact_div(n1, g)
                d2 = _ipoly_exact_div(d2, g)
        if len(n2) > 1 and len(d1) > 1:
            g = _ipoly_gcd(n2, d1)
            if len(g) > 1:
                n2 = _ipoly_exact_div(n2, g)
                d1 = _ipoly_exact_div(d1, g)
        return RatFun._from_parts(c1 * c2, s1 + s2,
                                  _ipoly_mul(n1, n2), _ipoly_mul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RatFun":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        c, s, n = _num_parts(self._num)
        return RatFun._from_parts(1 / c, -s, _den_parts(self._den), n)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFun(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> "RatFun":
        """The involution t -> t^-1."""
        return RatFun(self._num.bar(), self._den.bar())

    def __call__(self, x) -> Fraction:
        d = self._den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {x}")
        return self._num(x) / d

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __str__(self):
        if self._den == ONE:
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self):
        return f"RatFun({str(self)!r})"


# -- fraction-free elimination -------------------------------------------------
#
# Elimination runs over dense integer polynomial lists (index = exponent,
# no trailing zeros) after the matrix has been cleared of denominators,
# t-shifts and rational content row by row.  Bareiss guarantees that every
# interior division below is exact in Z[t], so all coefficient arithmetic is
# plain integer arithmetic.


def _ipoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _dense_trim(out)


def _ipoly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
           for i in range(n)]
    return _dense_trim(out)


def _ipoly_exact_div(a, b):
    """Quotient of a by b when the quotient is known to lie in Z[t]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    r = list(a)
    qlen = len(a) - len(b) + 1
    if qlen <= 0:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * qlen
    lead = b[-1]
    for k in range(qlen - 1, -1, -1):
        c = r[k + len(b) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        f = c // lead
        q[k] = f
        if f:
            for i, bc in enumerate(b):
                r[k + i] -= f * bc
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return q


def _ipoly_to_lp(a) -> LaurentPoly:
    return LaurentPoly({i: c for i, c in enumerate(a) if c})


def _ipoly_bareiss_det(rows):
    n = len(rows)
    if n == 0:
        return [1]
    m = [list(r) for r in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _ipoly_sub(_ipoly_mul(m[k][k], m[i][j]),
                                 _ipoly_mul(m[i][k], m[k][j]))
                m[i][j] = _ipoly_exact_div(num, prev)
            m[i][k] = []
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else [-c for c in d]


def _ipoly_bareiss_inverse(rows):
    """One-step fraction-free Jordan elimination on [P | I].

    Returns (C, d) with P^{-1} = C / d.  The left block must finish as d*I;
    that identity is checked and a failure means a bug, not bad input.
    """
    n = len(rows)
    w = [list(rows[i]) + [[1] if i == j else [] for j in range(n)]
         for i in range(n)]
    prev = [1]
    for k in range(n):
        if not w[k][k]:
            for r in range(k + 1, n):
                if w[r][k]:
                    w[k], w[r] = w[r], w[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        piv = w[k][k]
        for i in range(n):
            if i == k:
                continue
            f = w[i][k]
            if not f:
                # row already clear in this column; only the scaling applies
                for j in range(2 * n):
                    if j != k and w[i][j]:
                        w[i][j] = _ipoly_exact_div(_ipoly_mul(piv, w[i][j]), prev)
                continue
            row = w[i]
            top = w[k]
            for j in range(2 * n):
                if j == k:
                    row[j] = []
                else:
                    num = _ipoly_sub(_ipoly_mul(piv, row[j]), _ipoly_mul(f, top[j]))
                    row[j] = _ipoly_exact_div(num, prev)
        prev = piv
    d = w[n - 1][n - 1]
    for i in range(n):
        for j in range(n):
            expect = d if i == j else []
            if w[i][j] != expect:
                raise AssertionError("fraction-free elimination lost the diagonal form")
    return [row[n:] for row in w], d


def _minor(rows, i, j):
    return [[e for c, e in enumerate(r) if c != j]
            for ri, r in enumerate(rows) if ri != i]


# -- matrices ------------------------------------------------------------------


class Matrix:
    """Dense rectangular matrix over RatFun.  Immutable.

    Index with two steps: ``m[i][j]``.  ``m * m`` is the matrix product,
    scalars multiply entrywise from either side.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        coerced = []
        width = None
        for row in rows:
            entries = tuple(RatFun(e) if not isinstance(e, RatFun) else e for e in row)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ValueError("ragged rows")
            coerced.append(entries)
        if coerced and width == 0:
            raise ValueError("rows must be nonempty")
        self._rows = tuple(coerced)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, i):
        return self._rows[i]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._rows))) if self._rows else Matrix([])

    def bar(self) -> "Matrix":
        return Matrix([[e.bar() for e in row] for row in self._rows])

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self._rows, other._rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = other.transpose()._rows
            return Matrix([[sum((a * b for a, b in zip(row, col)), RatFun(0))
                            for col in cols] for row in self._rows])
        scalar = RatFun._coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return Matrix([[e * scalar for e in row] for row in self._rows])

    def __rmul__(self, other):
        scalar = RatFun._coerce(other)
        if scalar is NotImplemented:
            return NotImplemented
        return Matrix([[scalar * e for e in row] for row in self._rows])

    def _cleared(self):
        """Clear denominators, t-shifts and rational content row by row.

        Returns (P, dens): P a dense integer polynomial matrix and dens the
        per-row factors, so that self = diag(dens)^-1 * P.
        """
        int_rows = []
        dens = []
        for row in self._rows:
            den = ONE
            for e in row:
                den = _lcm_poly(den, e.den)
            nums = [e.num * _exact_div(den, e.den) for e in row]
            shift = min((p.min_exp for p in nums if not p.is_zero), default=0)
            scale = 1
            for p in nums:
                for _, c in p.items():
                    scale = scale * c.denominator // gcd(scale, c.denominator)
            out_row = []
            for p in nums:
                dense = [0] * ((p.max_exp - shift + 1) if not p.is_zero else 0)
                for e, c in p.items():
                    v = c * scale
                    dense[e - shift] = v.numerator
                out_row.append(_dense_trim(dense))
            int_rows.append(out_row)
            dens.append(den * LaurentPoly({-shift: Fraction(scale)}))
        return int_rows, dens

    def det(self) -> RatFun:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return RatFun(1)
        polys, dens = self._cleared()
        d = _ipoly_to_lp(_ipoly_bareiss_det(polys))
        scale = ONE
        for f in dens:
            scale = scale * f
        return RatFun(d, scale)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        polys, dens = self._cleared()
        if n <= 4:
            d = _ipoly_bareiss_det(polys)
            if not d:
                raise SingularMatrixError("matrix is singular")
            cof = []
            for i in range(n):
                cof.append([])
                for j in range(n):
                    m = _ipoly_bareiss_det(_minor(polys, j, i))
                    cof[i].append(m if (i + j) % 2 == 0 else [-c for c in m])
        else:
            cof, d = _ipoly_bareiss_inverse(polys)
        dlp = _ipoly_to_lp(d)
        return Matrix([[RatFun(_ipoly_to_lp(cof[i][j]) * dens[j], dlp)
                        for j in range(n)] for i in range(n)])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]"
                         for row in self._rows)

    def __repr__(self):
        return f"Matrix({[[str(e) for e in row] for row in self._rows]!r})"
