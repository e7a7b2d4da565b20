"""Permutation realizations of the small groups used by the catalog and tests."""

from __future__ import annotations

from .permgroup import Permutation, close


def cyclic(n):
    return close([Permutation([(i + 1) % n for i in range(n)])])


def dihedral(n):
    """Dihedral group of order 2n on n points."""
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return close([rot, ref])


def symmetric(n):
    if n == 1:
        return close([Permutation([0])])
    gens = [Permutation.from_cycles([[0, 1]], n), Permutation.from_cycles([list(range(n))], n)]
    return close(gens)


def alternating(n):
    gens = [Permutation.from_cycles([[0, 1, i]], n) for i in range(2, n)]
    return close(gens or [Permutation.identity(n)])


def _projective_line(q):
    return list(range(q)) + [None]


def _mobius_prime(q, a, b, c, d):
    pts = _projective_line(q)

    def f(x):
        if x is None:
            return None if c % q == 0 else a * pow(c, -1, q) % q
        den = (c * x + d) % q
        if den == 0:
            return None
        return (a * x + b) * pow(den, -1, q) % q

    return Permutation([pts.index(f(x)) for x in pts])


def _prim_root(q):
    for g in range(2, q):
        if all(pow(g, (q - 1) // t, q) != 1 for t in range(2, q) if (q - 1) % t == 0 and _isprime(t)):
            return g
    return 1


def _isprime(n):
    return n > 1 and all(n % f for f in range(2, int(n**0.5) + 1))


def psl2_prime(q):
    """PSL(2, q), q an odd prime, on the q + 1 points of the projective line."""
    g = _prim_root(q)
    return close([
        _mobius_prime(q, 1, 1, 0, 1),
        _mobius_prime(q, g * g % q, 0, 0, 1),
        _mobius_prime(q, 0, q - 1, 1, 0),
    ])


def pgl2_prime(q):
    """PGL(2, q) on the projective line: the automorphism group of PSL(2, q) for q prime."""
    return close([
        _mobius_prime(q, 1, 1, 0, 1),
        _mobius_prime(q, _prim_root(q), 0, 0, 1),
        _mobius_prime(q, 0, 1, 1, 0),
    ])


def _gf8_mul(a, b):
    r = 0
    for i in range(3):
        if b >> i & 1:
            r ^= a << i
    for i in (4, 3):
        if r >> i & 1:
            r ^= 0b1011 << (i - 3)
    return r


def _gf8_inv(a):
    return next(b for b in range(1, 8) if _gf8_mul(a, b) == 1)


def psl2_8():
    """PSL(2, 8) = SL(2, 8) on the 9 points of the projective line over GF(8)."""
    pts = list(range(8)) + [None]

    def perm(f):
        return Permutation([pts.index(f(x)) for x in pts])

    translate = perm(lambda x: None if x is None else x ^ 1)
    scale = perm(lambda x: None if x is None else _gf8_mul(2, x))
    invert = perm(lambda x: 0 if x is None else (None if x == 0 else _gf8_inv(x)))
    return close([translate, scale, invert])


def gl2_3():
    """GL(2, 3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def mat(m):
        return Permutation([vecs.index(((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3))
                            for a, b in vecs])

    return close([mat((1, 1, 0, 1)), mat((0, 2, 1, 0)), mat((2, 0, 0, 1))])
