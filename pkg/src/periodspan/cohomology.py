"""Degree-1 group cohomology of Z/p * Z/q and of Delta(p, q, r), computed by exact linear algebra.

A 1-cocycle on the free product is determined by its values kA = k(delta_0)
and kB = k(delta_1), subject to the torsion conditions
``sum_j A^j kA = 0`` and ``sum_j B^j kB = 0``.  It descends to the triangle
group when additionally ``T k(delta_inf) = 0`` with ``T = sum_{j<r} C^j``,
C = rho(delta_inf) and delta_inf = delta_1^-1 delta_0^-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg as la
from .cyclotomic import ONE, ZERO
from .errors import ValidationError
from .permgroup import element_order, generates


@dataclass(frozen=True, eq=False)
class MatrixRep:
    A: list
    B: list
    p: int
    q: int
    r: int | None = None

    @property
    def dimension(self):
        return len(self.A)

    @property
    def C(self):
        """rho(delta_inf) = (A B)^-1."""
        return la.inverse(la.matmul(self.A, self.B))

    def letter(self, x):
        return self.A if x == 0 else self.B


def check_rep(rep, triangle=False):
    problems = []
    n = rep.dimension
    if not la.is_identity(la.mat_pow(rep.A, rep.p)):
        problems.append(f"A^{rep.p} != I")
    if not la.is_identity(la.mat_pow(rep.B, rep.q)):
        problems.append(f"B^{rep.q} != I")
    if triangle:
        if rep.r is None:
            problems.append("triangle level requested without r")
        elif not la.is_identity(la.mat_pow(rep.C, rep.r)):
            problems.append(f"C^{rep.r} != I")
    if la.rank(_coboundary_matrix(rep)) != n:
        problems.append("representation has nonzero fixed vectors")
    return problems


def _require(rep, triangle=False):
    problems = check_rep(rep, triangle)
    if problems:
        raise ValidationError("hypothesis violation: " + "; ".join(problems), problems)


def _norm(M, k):
    n = len(M)
    total = la.zeros(n, n)
    P = la.identity(n)
    for _ in range(k):
        total = la.add(total, P)
        P = la.matmul(P, M)
    return total


def _coboundary_matrix(rep):
    """v -> ((A - I) v, (B - I) v), a 2n x n matrix."""
    n = rep.dimension
    I = la.identity(n)
    return la.vstack(la.sub(rep.A, I), la.sub(rep.B, I))


def _torsion_matrix(rep):
    n = rep.dimension
    Z = la.zeros(n, n)
    return la.vstack(la.hstack(_norm(rep.A, rep.p), Z), la.hstack(Z, _norm(rep.B, rep.q)))


def _inf_value_matrix(rep):
    """(kA, kB) -> k(delta_inf) = -(C kA + B^-1 kB)."""
    C = rep.C
    Binv = la.inverse(rep.B)
    return la.scale(la.hstack(C, Binv), -ONE)


def _triangle_constraint(rep):
    T = _norm(rep.C, rep.r)
    return la.matmul(T, _inf_value_matrix(rep))


def cocycle_space(rep, triangle=False):
    """Basis of Z^1 as stacked vectors (kA, kB) of length 2n."""
    M = _torsion_matrix(rep)
    if triangle:
        M = la.vstack(M, _triangle_constraint(rep))
    return la.nullspace(M)


def h1_dim_free_product(rep):
    """dim Z^1 - dim B^1 for Z/p * Z/q, by explicit elimination."""
    _require(rep)
    z1 = len(cocycle_space(rep))
    b1 = la.rank(_coboundary_matrix(rep))
    return z1 - b1


def h1_dim_triangle_explicit(rep):
    """dim H^1(Delta) from the full constraint system (torsion plus T-relation)."""
    _require(rep, triangle=True)
    z1 = len(cocycle_space(rep, triangle=True))
    b1 = la.rank(_coboundary_matrix(rep))
    return z1 - b1


def h1_dim_triangle(rep):
    """dim H^1(Delta): fundamental cocycles minus the rank of the T-relation on them."""
    _require(rep, triangle=True)
    kappas = fundamental_cocycles(rep)
    if not kappas:
        return 0
    T = _norm(rep.C, rep.r)
    images = [la.matvec(T, k.evaluate_inf()) for k in kappas]
    return len(kappas) - la.rank(la.transpose(images))


def fixed_dims(rep):
    """(d0, d1, dinf) as dimensions of the eigenvalue-1 spaces of A, B, C."""
    n = rep.dimension
    I = la.identity(n)
    out = [n - la.rank(la.sub(rep.A, I)), n - la.rank(la.sub(rep.B, I))]
    if rep.r is not None:
        out.append(n - la.rank(la.sub(rep.C, I)))
    return tuple(out)


# -- cocycles and extensions -------------------------------------------

@dataclass(frozen=True, eq=False)
class Cocycle:
    rep: MatrixRep
    kA: list
    kB: list

    def value(self, x):
        return self.kA if x == 0 else self.kB

    def evaluate(self, word):
        """(rho(w), k(w)) for a word over {0: delta_0, 1: delta_1}, via k(xw) = rho(x) k(w) + k(x)."""
        n = self.rep.dimension
        mat = la.identity(n)
        vec = [ZERO] * n
        for x in reversed(list(word)):
            R = self.rep.letter(x)
            vec = [a + b for a, b in zip(la.matvec(R, vec), self.value(x))]
            mat = la.matmul(R, mat)
        return mat, vec

    def evaluate_inf(self):
        """k(delta_inf) with delta_inf = delta_1^(q-1) delta_0^(p-1)."""
        word = [1] * (self.rep.q - 1) + [0] * (self.rep.p - 1)
        return self.evaluate(word)[1]

    def torsion_ok(self):
        n = self.rep.dimension
        zero = [ZERO] * n
        return (la.matvec(_norm(self.rep.A, self.rep.p), self.kA) == zero
                and la.matvec(_norm(self.rep.B, self.rep.q), self.kB) == zero)

    def coboundary_preimage(self):
        """v with k(g) = rho(g) v - v for all g, or None when the class is nonzero."""
        return la.solve(_coboundary_matrix(self.rep), list(self.kA) + list(self.kB))

    def is_coboundary(self):
        return self.coboundary_preimage() is not None


def coboundary(rep, v):
    n = rep.dimension
    I = la.identity(n)
    return Cocycle(rep, la.matvec(la.sub(rep.A, I), v), la.matvec(la.sub(rep.B, I), v))


def _complement(vectors, n):
    """Standard basis vectors completing ``vectors`` to a basis (greedy, in index order)."""
    current = [list(v) for v in vectors]
    r = la.rank(la.transpose(current)) if current else 0
    added = []
    for i in range(n):
        e = [ONE if j == i else ZERO for j in range(n)]
        trial = current + [e]
        rt = la.rank(la.transpose(trial))
        if rt > r:
            current, r = trial, rt
            added.append(e)
        if r == n:
            break
    return added


def fundamental_cocycles(rep):
    """Cocycles k_i(delta_0) = (A - I) v_i, k_i(delta_1) = 0 for v_i completing a basis of V^A + V^B.

    Their classes form a basis of H^1(Z/p * Z/q, rho).
    """
    _require(rep)
    n = rep.dimension
    I = la.identity(n)
    VA = la.nullspace(la.sub(rep.A, I))
    VB = la.nullspace(la.sub(rep.B, I))
    comp = _complement(VA + VB, n)
    zero = [ZERO] * n
    AmI = la.sub(rep.A, I)
    return [Cocycle(rep, la.matvec(AmI, v), list(zero)) for v in comp]


@dataclass(frozen=True, eq=False)
class ExtensionRep:
    cocycle: Cocycle
    blocks: tuple = field(repr=False)

    @property
    def rep(self):
        return self.cocycle.rep

    def evaluate(self, word):
        """pi(w) as the product of generator blocks."""
        n = self.rep.dimension + 1
        M = la.identity(n)
        for x in word:
            M = la.matmul(M, self.blocks[x])
        return M

    def block_from_cocycle(self, word):
        """[[rho(w), k(w)], [0, 1]] assembled from the cocycle recursion."""
        return _block(*self.cocycle.evaluate(word))

    def splitting_conjugator(self):
        """U with U^-1 pi U = rho (+) 1, or None when the extension does not split."""
        v = self.cocycle.coboundary_preimage()
        if v is None:
            return None
        n = self.rep.dimension
        return [[(ONE if i == j else ZERO) for j in range(n)] + [-v[i]] for i in range(n)] \
            + [[ZERO] * n + [ONE]]

    def splits(self):
        return self.splitting_conjugator() is not None


def _block(R, k):
    n = len(R)
    return [list(R[i]) + [k[i]] for i in range(n)] + [[ZERO] * n + [ONE]]


def extension_rep(rep, kappa):
    if not kappa.torsion_ok():
        raise ValidationError("invalid cocycle: torsion conditions fail")
    return ExtensionRep(kappa, (_block(rep.A, kappa.kA), _block(rep.B, kappa.kB)))


def random_words(rng, count, max_len=8):
    return [[rng.randrange(2) for _ in range(rng.randint(0, max_len))] for _ in range(count)]


def check_multiplicativity(ext, samples=100, seed=0, max_len=8):
    """Number of sampled pairs (w1, w2) violating pi(w1 w2) = pi(w1) pi(w2); 0 when the law holds."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        w1, w2 = random_words(rng, 2, max_len)
        lhs = ext.block_from_cocycle(w1 + w2)
        rhs = la.matmul(ext.block_from_cocycle(w1), ext.block_from_cocycle(w2))
        if not la.equal(lhs, rhs) or not la.equal(lhs, ext.evaluate(w1 + w2)):
            bad += 1
    return bad


# -- test representations ----------------------------------------------

def deleted_perm_rep(G, g0, g1, r=None):
    """Regular representation of G at (g0, g1), restricted to the sum-zero subspace."""
    if not generates(G, [g0, g1]):
        raise ValidationError("g0 and g1 do not generate the group")
    mats = [_deleted_regular_matrix(G, x) for x in (g0, g1)]
    return MatrixRep(mats[0], mats[1], element_order(g0), element_order(g1), r)


def _deleted_regular_matrix(G, x):
    n = G.order
    idx = G.index
    sigma = [idx[x * h] for h in G.elements]
    last = sigma[n - 1]
    M = la.zeros(n - 1, n - 1)
    for i in range(n - 1):
        col = {}
        col[sigma[i]] = col.get(sigma[i], 0) + 1
        col[last] = col.get(last, 0) - 1
        for j, c in col.items():
            if j < n - 1 and c:
                M[j][i] = M[j][i] + c
        # the e_{n-1} component is implied by the sum-zero condition
    return M
