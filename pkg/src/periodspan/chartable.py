"""Irreducible character tables by Dixon's modular method.

The class-multiplication matrices of G are simultaneously diagonalized over
F_p, with p = 1 (mod exponent) and p > 2 sqrt|G|.  Each common eigenvector
gives a central character mod p, from which the character values mod p
follow; every value chi(g) is then lifted to Q(zeta_m), m = order(g), by
recovering the eigenvalue multiplicities of g through the power map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import ONE, ZERO, Cyclo, parse_cyclo, root_of_unity
from .errors import ConfigurationError, InvariantViolation, ValidationError
from .permgroup import ConjugacyClasses, PermGroup, element_order

PRIME_SEARCH_LIMIT = 10**5


@dataclass(frozen=True)
class CharacterTable:
    classes: ConjugacyClasses
    irreducibles: list
    degrees: list

    @property
    def order(self):
        return sum(self.classes.class_sizes)

    def __len__(self):
        return len(self.irreducibles)

    def value(self, chi, x):
        return chi[self.classes.class_index[x]]

    def inner(self, chi, psi):
        return inner_product(self.classes, chi, psi)

    def decompose(self, chi):
        """Multiplicities of each irreducible in the class function ``chi``."""
        out = []
        for irr in self.irreducibles:
            m = self.inner(chi, irr).as_integer()
            if m is None:
                raise InvariantViolation("class function is not a virtual character")
            out.append(m)
        return out


def inner_product(classes, chi, psi):
    total = ZERO
    for size, a, b in zip(classes.class_sizes, chi, psi):
        if a and b:
            total = total + a * b.conj() * size
    return total * Fraction(1, sum(classes.class_sizes))


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(order, exponent, limit=PRIME_SEARCH_LIMIT):
    """Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order)."""
    lower = 2 * math.isqrt(order) + 1
    p = exponent + 1
    while p <= lower:
        p += exponent
    while p <= limit * max(exponent, 1):
        if _is_prime(p):
            return p
        p += exponent
    raise ConfigurationError(
        f"no prime p = 1 mod {exponent} found below the search bound; "
        "raise PRIME_SEARCH_LIMIT or supply a character table file")


def _primitive_root(p):
    factors = set()
    n, f = p - 1, 2
    while f * f <= n:
        while n % f == 0:
            factors.add(f)
            n //= f
        f += 1
    if n > 1:
        factors.add(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def class_matrices(G):
    """a[j][i][l] = #{x in C_j : x^-1 z_l in C_i}, z_l the class representatives."""
    cc = G.classes
    k = len(cc)
    members = [[] for _ in range(k)]
    for x in G.elements:
        members[cc.class_index[x]].append(x)
    reps = [r.images for r in cc.representatives]
    idx = {x.images: c for x, c in cc.class_index.items()}
    mats = []
    for j in range(k):
        M = [[0] * k for _ in range(k)]
        for x in members[j]:
            xinv = (~x).images
            for l, z in enumerate(reps):
                y = tuple(xinv[t] for t in z)
                M[idx[y]][l] += 1
        mats.append(M)
    return mats


# -- linear algebra mod p -----------------------------------------------

def _rref_mod(A, p):
    rows = [[x % p for x in row] for row in A]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _nullspace_mod(A, p):
    n = len(A[0])
    R, pivots = _rref_mod(A, p)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f] % p
        basis.append(v)
    return basis


def _charpoly_mod(A, p):
    """Characteristic polynomial (lowest degree first) by Hessenberg reduction."""
    n = len(A)
    H = [[x % p for x in row] for row in A]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if u:
                H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + u * row[i]) % p
    # polys[k]: charpoly of leading k x k block
    polys = [[1]]
    for k in range(1, n + 1):
        a = H[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [0] + prev[:]  # x * prev
        for t, c in enumerate(prev):
            cur[t] = (cur[t] - a * c) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            coef = prod * H[i - 1][k - 1] % p
            if coef:
                for t, c in enumerate(polys[i - 1]):
                    cur[t] = (cur[t] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _roots_mod(poly, p):
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % p
    return [int(r) for r in np.nonzero(acc == 0)[0]]


def _common_eigenvectors(mats, p):
    k = len(mats[0])
    spaces = [[[int(i == j) for i in range(k)] for j in range(k)]]  # list of column lists
    for M in mats[1:]:
        if all(len(S) == 1 for S in spaces):
            break
        new = []
        for S in spaces:
            s = len(S)
            if s == 1:
                new.append(S)
                continue
            # rows where S (k x s) has an invertible s x s block
            St = [list(col) for col in S]
            _, prow = _rref_mod(St, p)  # pivots of S^T = independent rows of S
            Ssub = [[S[c][r] for c in range(s)] for r in prow]
            MS = [[sum(M[r][t] * S[c][t] for t in range(k)) % p for c in range(s)] for r in range(k)]
            MSsub = [MS[r] for r in prow]
            aug = [Ssub[i] + MSsub[i] for i in range(s)]
            R, piv = _rref_mod(aug, p)
            Rm = [row[s:] for row in R]
            found = 0
            for lam in _roots_mod(_charpoly_mod(Rm, p), p):
                shifted = [[(Rm[i][j] - (lam if i == j else 0)) % p for j in range(s)] for i in range(s)]
                ys = _nullspace_mod(shifted, p)
                found += len(ys)
                new.append([[sum(S[c][t] * y[c] for c in range(s)) % p for t in range(k)] for y in ys])
            if found != s:
                raise InvariantViolation("class matrix not diagonalizable mod p")
        spaces = new
    if not all(len(S) == 1 for S in spaces):
        raise InvariantViolation("class matrices failed to separate the characters")
    return [S[0] for S in spaces]


def _lift(values_mod, cc, p, z):
    """Lift F_p character values to exact cyclotomic values."""
    out = []
    for c, m in enumerate(cc.orders):
        w = pow(z, (p - 1) // m, p)
        winv = pow(w, -1, p)
        minv = pow(m, -1, p)
        row = cc.power_map[c]
        counts = []
        for a in range(m):
            s = 0
            step = pow(winv, a, p)
            f = 1
            for j in range(m):
                s += values_mod[row[j]] * f
                f = f * step % p
            counts.append(s * minv % p)
        val = ZERO
        for a, n in enumerate(counts):
            if n:
                val = val + root_of_unity(m, a) * n
        out.append(val)
    return out


def character_table(G, prime=None):
    """All irreducible characters of G with exact values, canonically ordered."""
    cc = G.classes
    k = len(cc)
    order = G.order
    if k == 1:
        return CharacterTable(cc, [[ONE]], [1])
    p = prime or dixon_prime(order, cc.exponent)
    if (p - 1) % cc.exponent or p <= 2 * math.isqrt(order):
        raise ConfigurationError(f"prime {p} unsuitable for Dixon's method")
    mats = class_matrices(G)
    vecs = _common_eigenvectors(mats, p)
    z = _primitive_root(p)
    inv_map = cc.inverse_map
    sizes = cc.class_sizes
    chars = []
    for w in vecs:
        if w[0] == 0:
            raise InvariantViolation("central character vanishes at the identity")
        s = pow(w[0], -1, p)
        w = [x * s % p for x in w]
        tot = sum(w[l] * w[inv_map[l]] * pow(sizes[l], -1, p) for l in range(k)) % p
        d2 = order * pow(tot, -1, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if d is None:
            raise InvariantViolation("no admissible character degree mod p")
        values_mod = [d * w[l] * pow(sizes[l], -1, p) % p for l in range(k)]
        chars.append(_lift(values_mod, cc, p, z))
    table = _canonical(cc, chars)
    problems = verify(table, G.order)
    if problems:
        raise InvariantViolation("character table failed verification: " + "; ".join(problems))
    return table


def _value_key(x):
    return (x.conductor, tuple(Fraction(n, x.den) for n in x.num))


def _canonical(cc, chars):
    degs = [chi[0].as_integer() for chi in chars]
    if any(d is None or d < 1 for d in degs):
        raise InvariantViolation("non-integral character degree")

    def key(i):
        chi = chars[i]
        trivial = all(v == ONE for v in chi)
        return (degs[i], not trivial, tuple(_value_key(v) for v in chi))

    order = sorted(range(len(chars)), key=key)
    return CharacterTable(cc, [chars[i] for i in order], [degs[i] for i in order])


def verify(table, order=None):
    """Exact checks: sum of squared degrees, both orthogonality relations."""
    cc = table.classes
    k = len(cc)
    n = order or table.order
    problems = []
    if len(table.irreducibles) != k:
        problems.append(f"{len(table.irreducibles)} characters for {k} classes")
        return problems
    if sum(d * d for d in table.degrees) != n:
        problems.append("sum of squared degrees differs from |G|")
    triv = table.irreducibles[0]
    if not all(v == ONE for v in triv):
        problems.append("first character is not trivial")
    for i, chi in enumerate(table.irreducibles):
        for j in range(i, k):
            ip = inner_product(cc, chi, table.irreducibles[j])
            if ip != (1 if i == j else 0):
                problems.append(f"row orthogonality fails for ({i}, {j})")
    cols = list(zip(*table.irreducibles))
    for a in range(k):
        for b in range(a, k):
            s = ZERO
            for x, y in zip(cols[a], cols[b]):
                if x and y:
                    s = s + x * y.conj()
            target = n // cc.class_sizes[a] if a == b else 0
            if s != target:
                problems.append(f"column orthogonality fails for ({a}, {b})")
    return problems


# -- eigenvalue data ---------------------------------------------------

def eigenvalue_multiplicities(table, chi, x):
    """[N_0, ..., N_{m-1}]: multiplicity of zeta_m^a as eigenvalue of x, m = order(x)."""
    cc = table.classes
    c = cc.class_index[x] if not isinstance(x, int) else x
    m = cc.orders[c]
    out = []
    for a in range(m):
        s = ZERO
        for j in range(m):
            v = chi[cc.power_class(c, j)]
            if v:
                s = s + v * root_of_unity(m, -a * j)
        n = (s * Fraction(1, m)).as_integer()
        if n is None or n < 0:
            raise InvariantViolation(
                f"eigenvalue multiplicity {s * Fraction(1, m)} is not a nonnegative integer")
        out.append(n)
    return out


def eigenvalue_multiplicity(table, chi, x, a):
    mults = eigenvalue_multiplicities(table, chi, x)
    return mults[a % len(mults)]


def fixed_space_dim(table, chi, x):
    """Dimension of the fixed space of x in a representation with character chi."""
    return eigenvalue_multiplicity(table, chi, x, 0)


# -- table files -------------------------------------------------------

def format_table(table):
    cc = table.classes
    lines = [f"classes: {len(cc)}, exponent: {cc.exponent}"]
    lines += [f"{s} {o}" for s, o in zip(cc.class_sizes, cc.orders)]
    lines += [" ".join(str(v) for v in chi) for chi in table.irreducibles]
    return "\n".join(lines) + "\n"


def read_table(text, G):
    """Parse a character-table file and check it against the classes of G.

    Class order in the file must match the canonical class ordering of G.
    Only orthogonality is verified; the values are otherwise trusted.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValidationError("empty character table file")
    head = lines[0].replace(" ", "")
    try:
        parts = dict(item.split(":") for item in head.split(","))
        k = int(parts["classes"])
        e = int(parts["exponent"])
    except (ValueError, KeyError):
        raise ValidationError(f"bad header line {lines[0]!r}") from None
    if len(lines) != 1 + 2 * k:
        raise ValidationError(f"expected {1 + 2 * k} non-empty lines, found {len(lines)}")
    cc = G.classes
    if k != len(cc) or e != cc.exponent:
        raise ValidationError("class count or exponent does not match the group")
    for i, ln in enumerate(lines[1:1 + k]):
        try:
            size, order = (int(t) for t in ln.split())
        except ValueError:
            raise ValidationError(f"bad class line {ln!r}") from None
        if size != cc.class_sizes[i] or order != cc.orders[i]:
            raise ValidationError(f"class {i}: size/order {size}/{order} do not match the group")
    chars = []
    for ln in lines[1 + k:]:
        vals = [parse_cyclo(t) for t in ln.split()]
        if len(vals) != k:
            raise ValidationError(f"character row with {len(vals)} values, expected {k}")
        chars.append(vals)
    degs = [chi[0].as_integer() for chi in chars]
    if any(d is None or d < 1 for d in degs):
        raise ValidationError("character degrees must be positive integers")
    table = CharacterTable(cc, chars, degs)
    problems = verify(table, G.order)
    if problems:
        raise ValidationError("character table failed verification", problems)
    return table
