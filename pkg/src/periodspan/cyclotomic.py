"""Exact arithmetic in the cyclotomic fields Q(zeta_e).

An element of conductor ``e`` is stored as integer numerators over one
positive common denominator, in the power basis ``1, z, ..., z^(phi(e)-1)``
reduced modulo the e-th cyclotomic polynomial.  Operands of different
conductors are lifted to the lcm conductor before combining.

Text form used in reports and table files::

    z(7)^1+z(7)^2+z(7)^4      -1/2+3*z(8)^3      0
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(a, b):
    # a, b integer polys, b monic, b | a
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            q[k - db] = c
            for t, bt in enumerate(b):
                a[k - db + t] -= c * bt
    assert not any(a[:db]), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def totient(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _phi_terms(e):
    # nonzero (t, c) with x^phi == -sum c x^t  (mod Phi_e)
    phi = cyclotomic_polynomial(e)
    return tuple((t, c) for t, c in enumerate(phi[:-1]) if c)


def _reduce(coeffs, e):
    """Reduce an integer coefficient list modulo Phi_e in place; returns the phi(e) prefix."""
    d = totient(e)
    terms = _phi_terms(e)
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            base = k - d
            for t, p in terms:
                coeffs[base + t] -= c * p
            coeffs[k] = 0
    if len(coeffs) < d:
        coeffs.extend([0] * (d - len(coeffs)))
    return coeffs[:d]


_POWER_TABLES = {}


def _power(e, j):
    """Reduced coefficients of x^j modulo Phi_e, for 0 <= j < e (cached)."""
    table = _POWER_TABLES.get(e)
    if table is None:
        table = _POWER_TABLES[e] = []
    while len(table) <= j:
        k = len(table)
        v = [0] * (k + 1)
        v[k] = 1
        table.append(tuple(_reduce(v, e)))
    return table[j]


def _norm_conductor(e):
    # Q(zeta_2) = Q with the same basis {1}
    return 1 if e == 2 else e


class Cyclo:
    __slots__ = ("conductor", "num", "den", "_key")

    def __init__(self, conductor, coefficients=()):
        e = int(conductor)
        if e < 1:
            raise ValueError("conductor must be positive")
        fr = [Fraction(c) for c in coefficients]
        den = 1
        for c in fr:
            den = math.lcm(den, c.denominator)
        nums = [int(c * den) for c in fr]
        if len(nums) > totient(e) and e > 1:
            nums = _reduce(nums, e)
        elif e == 1:
            nums = [sum(nums)]  # powers of zeta_1 = 1
        c = Cyclo._make(e, nums, den)
        self.conductor, self.num, self.den, self._key = c.conductor, c.num, c.den, None

    @classmethod
    def _make(cls, e, nums, den):
        """Normalize (numerators, denominator); ``nums`` must already be reduced."""
        if e == 2:
            e = 1
        d = totient(e)
        if len(nums) < d:
            nums = list(nums) + [0] * (d - len(nums))
        g = den
        for n in nums:
            if n:
                g = math.gcd(g, n)
                if g == 1:
                    break
        if den < 0:
            g = -g
        if not any(nums):
            nums, den, g = [0] * d, 1, 1
        if g != 1:
            nums = [n // g for n in nums]
            den //= g
        obj = object.__new__(cls)
        obj.conductor = e
        obj.num = tuple(nums)
        obj.den = den
        obj._key = None
        return obj

    # -- construction -------------------------------------------------
    @classmethod
    def rational(cls, q):
        q = Fraction(q)
        return cls._make(1, [q.numerator], q.denominator)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Cyclo")

    @property
    def coefficients(self):
        return tuple(Fraction(n, self.den) for n in self.num)

    # -- embedding ----------------------------------------------------
    def embed(self, L):
        """The same number written in Q(zeta_L); L must be a multiple of the conductor."""
        L = _norm_conductor(L)
        e = self.conductor
        if L == e:
            return self
        if L % e:
            raise ValueError(f"cannot embed Q(zeta_{e}) into Q(zeta_{L})")
        step = L // e
        d = totient(L)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = _power(L, k * step)
                for t in range(d):
                    if row[t]:
                        out[t] += c * row[t]
        return Cyclo._make(L, out, self.den)

    def _common(self, other):
        other = Cyclo.coerce(other)
        if self.conductor == other.conductor:
            return self, other
        L = math.lcm(self.conductor, other.conductor)
        return self.embed(L), other.embed(L)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        den = a.den * b.den // math.gcd(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return Cyclo._make(a.conductor, [x * fa + y * fb for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(self.conductor, [-x for x in self.num], self.den)

    def __sub__(self, other):
        try:
            return self + (-Cyclo.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return Cyclo.coerce(other) - self

    def __mul__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        e = a.conductor
        if a.is_rational() or b.is_rational():
            if b.is_rational():
                a, b = b, a
            s = a.num[0]
            return Cyclo._make(e, [s * y for y in b.num], a.den * b.den)
        an, bn = a.num, b.num
        res = [0] * (len(an) + len(bn) - 1)
        bnz = [(j, y) for j, y in enumerate(bn) if y]
        for i, x in enumerate(an):
            if x:
                for j, y in bnz:
                    res[i + j] += x * y
        return Cyclo._make(e, _reduce(res, e), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        e = self.conductor
        if self.is_rational():
            return Cyclo.rational(Fraction(self.den, self.num[0]))
        a = _strip([Fraction(n, self.den) for n in self.num])
        m = [Fraction(c) for c in cyclotomic_polynomial(e)]
        g, s = _poly_xgcd_left(a, m)
        # s * a == g (mod m) with g a nonzero constant
        inv = [c / g[0] for c in s]
        return Cyclo(e, inv)

    def __truediv__(self, other):
        try:
            other = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k):
        """Apply the automorphism zeta_e -> zeta_e^k (k coprime to the conductor)."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise ValueError(f"{k} is not a unit modulo {e}")
        if e == 1:
            return self
        d = totient(e)
        out = [0] * d
        for j, c in enumerate(self.num):
            if c:
                row = _power(e, (j * k) % e)
                for t in range(d):
                    if row[t]:
                        out[t] += c * row[t]
        return Cyclo._make(e, out, self.den)

    def conj(self):
        """Complex conjugation."""
        return self.galois(-1)

    # -- predicates / conversion --------------------------------------
    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def as_rational(self):
        if not self.is_rational():
            return None
        return Fraction(self.num[0], self.den)

    def as_integer(self):
        """The rational integer this element equals, or None."""
        if not self.is_rational() or self.den != 1:
            return None
        return self.num[0]

    def __complex__(self):
        e = self.conductor
        z = complex(math.cos(2 * math.pi / e), math.sin(2 * math.pi / e))
        return sum(n / self.den * z**k for k, n in enumerate(self.num)) + 0j

    def minimal(self):
        """The same number in the smallest Q(zeta_f) that contains it."""
        e = self.conductor
        for f in _divisors(e):
            if f == e:
                return self
            if f % 4 == 2:
                continue
            y = _descend(self, f)
            if y is not None:
                return y
        return self

    def _canonical_key(self):
        if self._key is None:
            m = self.minimal()
            self._key = (m.conductor, m.num, m.den)
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.num == other.num and self.den == other.den
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash(self._canonical_key())

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclo({self})"

    def __str__(self):
        return format_cyclo(self)


def _descend(x, f):
    e = x.conductor
    L_inv, rows = _descent_data(f, e)
    vec = [Fraction(x.num[r], x.den) for r in rows]
    coeffs = [sum(L_inv[i][j] * vec[j] for j in range(len(vec))) for i in range(len(vec))]
    y = Cyclo(f, coeffs)
    if y.embed(e) == x:
        return y
    return None


@lru_cache(maxsize=None)
def _descent_data(f, e):
    # columns: embeddings of zeta_f^j into Q(zeta_e); pick independent rows and invert
    df = totient(f)
    step = e // f
    cols = [_power(e, j * step) for j in range(df)]
    de = totient(e)
    rows = []
    basis = []  # reduced row vectors (as Fractions) for independence test
    for r in range(de):
        v = [Fraction(cols[j][r]) for j in range(df)]
        w = list(v)
        for piv, b in basis:
            if w[piv]:
                c = w[piv]
                w = [wi - c * bi for wi, bi in zip(w, b)]
        piv = next((i for i, wi in enumerate(w) if wi), None)
        if piv is None:
            continue
        w = [wi / w[piv] for wi in w]
        basis.append((piv, w))
        rows.append(r)
        if len(rows) == df:
            break
    M = [[Fraction(cols[j][r]) for j in range(df)] for r in rows]
    return _invert_fraction_matrix(M), tuple(rows)


def _invert_fraction_matrix(M):
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _strip(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for t, bt in enumerate(b):
                a[k - db + t] -= c * bt
    return q, _strip(a[:db])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def _poly_xgcd_left(a, m):
    """Return (g, s) with s*a == g (mod m), g = gcd(a, m)."""
    r0, r1 = _strip(m), _strip(a)
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    return r0, s0


def root_of_unity(e, k=1):
    """zeta_e ** k in canonical form; k is taken modulo e."""
    e = int(e)
    if e < 1:
        raise ValueError("order must be positive")
    k %= e
    if e <= 2:
        return Cyclo.rational(-1 if k else 1)
    return Cyclo._make(e, list(_power(e, k)), 1)


ZERO = Cyclo.rational(0)
ONE = Cyclo.rational(1)


def format_cyclo(x):
    x = Cyclo.coerce(x)
    e = x.conductor
    terms = []
    for k, n in enumerate(x.num):
        if not n:
            continue
        c = Fraction(n, x.den)
        if k == 0:
            body = str(c)
        else:
            mono = f"z({e})^{k}"
            if c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


_TERM_RE = re.compile(
    r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*(\*)?)?\s*(?:z\((\d+)\)(?:\^(-?\d+))?)?"
)


def parse_cyclo(text):
    """Inverse of :func:`format_cyclo`; also tolerates spaces and any exponents."""
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ValidationError("empty cyclotomic literal")
    pos = 0
    total = ZERO
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValidationError(f"malformed cyclotomic literal {text!r}")
        sign, coef, star, cond, exp = m.groups()
        if coef is None and cond is None:
            raise ValidationError(f"malformed cyclotomic literal {text!r}")
        if star and cond is None:
            raise ValidationError(f"malformed cyclotomic literal {text!r}")
        if coef is not None and cond is not None and not star:
            raise ValidationError(f"malformed cyclotomic literal {text!r}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if cond is not None:
            e = int(cond)
            if e < 1:
                raise ValidationError(f"bad conductor in {text!r}")
            k = int(exp) if exp is not None else 1
            term = root_of_unity(e, k) * c
        else:
            term = Cyclo.rational(c)
        total = total + term
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValidationError(f"malformed cyclotomic literal {text!r}")
    return total
