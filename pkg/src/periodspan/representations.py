"""Exact matrix models of irreducible characters, cut out of permutation modules.

For an irreducible chi, find a subgroup H with <chi|_H, 1_H> = 1.  Then chi
occurs exactly once in the coset module C[G/H], and the isotypic projection
u = e_chi e_H of the base coset, with e_chi = (d/|G|) sum_g conj(chi(g)) g,
generates that copy.  Matrices are read off in the basis found by closing u
under the generators.  H is searched among cyclic subgroups first, then
among subgroups generated by two elements; values stay in Q(chi).
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .cyclotomic import ZERO
from .errors import ConfigurationError, GroupTooLarge, InvariantViolation
from .permgroup import close

PAIR_SEARCH_LIMIT = 20000


def _fixed_dim_on(table, chi, elements):
    cc = table.classes
    total = ZERO
    for h in elements:
        total = total + chi[cc.class_index[h]]
    return (total * Fraction(1, len(elements))).as_integer()


def _cyclic_elements(h):
    out = [h]
    while not out[-1].is_identity():
        out.append(out[-1] * h)
    return out


def find_subgroup(G, table, index, pair_limit=PAIR_SEARCH_LIMIT):
    """A subgroup H (list of elements) with <chi|_H, 1> = 1.

    The largest qualifying cyclic subgroup when one exists, otherwise the
    first qualifying two-generated subgroup in search order.
    """
    chi = table.irreducibles[index]
    cc = table.classes
    best = None
    for h in cc.representatives:
        H = _cyclic_elements(h)
        if _fixed_dim_on(table, chi, H) == 1 and (best is None or len(H) > len(best)):
            best = H
    if best is not None and len(best) > 1:
        return best
    # fixed dimensions only shrink as H grows, so subgroups of a K with
    # fixed dimension >= 2 never qualify
    tries = 0
    cap = G.order // 2
    for x in cc.representatives[1:]:
        crowded = []
        for y in G.elements:
            if tries >= pair_limit:
                break
            if any(y in K for K in crowded):
                continue
            tries += 1
            try:
                K = close([x, y], cap=cap)
            except GroupTooLarge:
                continue
            f = _fixed_dim_on(table, chi, K.elements)
            if f == 1:
                return list(K.elements)
            if f >= 2:
                crowded.append(set(K.elements))
    if best is None:
        raise ConfigurationError(f"no subgroup found with a one-dimensional fixed space for irreducible #{index}")
    return best


class CosetAction:
    """Left multiplication of G on the cosets gH."""

    def __init__(self, G, H):
        idx = G.index
        coset_of = [None] * G.order
        reps = []
        for i, g in enumerate(G.elements):
            if coset_of[i] is None:
                k = len(reps)
                reps.append(g)
                for h in H:
                    coset_of[idx[g * h]] = k
        self.group = G
        self.subgroup = H
        self.reps = reps
        self._coset_of = coset_of

    def __len__(self):
        return len(self.reps)

    def __call__(self, g, k):
        return self._coset_of[self.group.index[g * self.reps[k]]]


class IrreducibleModel:
    """Matrices rho(g) of an irreducible representation in a fixed basis."""

    def __init__(self, G, table, index, basis, act):
        self.group = G
        self.table = table
        self.index = index
        self.basis = basis  # d vectors in the coset module
        self._act = act
        self.dimension = len(basis)
        cols = la.transpose(basis)
        # pick d coordinates on which the basis is independent
        ech = _Echelon()
        piv = [i for i in range(len(cols)) if len(ech.rows) < self.dimension and ech.add(cols[i])]
        self._pivots = piv
        self._solve = la.inverse([cols[i] for i in piv])
        self._cache = {}

    def matrix(self, g):
        if g in self._cache:
            return self._cache[g]
        d = self.dimension
        M = la.zeros(d, d)
        wanted = set(self._pivots)
        for j, v in enumerate(self.basis):
            image = {}
            for i, c in enumerate(v):
                k = self._act(g, i)
                if k in wanted:
                    image[k] = c
            coords = la.matvec(self._solve, [image.get(i, ZERO) for i in self._pivots])
            for i in range(d):
                M[i][j] = coords[i]
        self._cache[g] = M
        return M

    def character_ok(self):
        cc = self.table.classes
        chi = self.table.irreducibles[self.index]
        for c, rep in enumerate(cc.representatives):
            M = self.matrix(rep)
            if sum((M[i][i] for i in range(self.dimension)), ZERO) != chi[c]:
                return False
        return True


def _project_base_coset(G, table, chi, d, act):
    """u = e_chi e_H: u_k = (d/|G|) sum_{h in H} conj(chi(r_k h))."""
    cc = table.classes
    nclasses = len(cc.representatives)
    counts = [[0] * nclasses for _ in range(len(act))]
    for k, r in enumerate(act.reps):
        row = counts[k]
        for h in act.subgroup:
            row[cc.class_index[r * h]] += 1
    conj = [c.conj() for c in chi]
    scale = Fraction(d, G.order)
    u = []
    for row in counts:
        s = ZERO
        for c, n in enumerate(row):
            if n:
                s = s + conj[c] * n
        u.append(s * scale)
    return u


def irreducible_model(G, table, index):
    """Exact matrix model of the irreducible character ``table.irreducibles[index]``."""
    chi = table.irreducibles[index]
    d = table.degrees[index]
    H = find_subgroup(G, table, index)
    act = CosetAction(G, H)
    u = _project_base_coset(G, table, chi, d, act)
    basis = _span_orbit(G, act, u)
    if len(basis) != d:
        raise InvariantViolation(f"projected vector spans dimension {len(basis)}, expected {d}")
    model = IrreducibleModel(G, table, index, basis, act)
    if not model.character_ok():
        raise InvariantViolation(f"model trace mismatch for irreducible #{index}")
    return model


def _span_orbit(G, act, u):
    """Basis of span(G u) by breadth-first closure under the generators."""
    n = len(u)
    echelon = _Echelon()
    echelon.add(u)
    basis = [u]
    queue = [u]
    while queue:
        w = queue.pop(0)
        for g in G.generators:
            vec = [ZERO] * n
            for i, c in enumerate(w):
                vec[act(g, i)] = c
            if echelon.add(vec):
                basis.append(vec)
                queue.append(vec)
    return basis


class _Echelon:
    """Incremental row echelon form for independence tests."""

    def __init__(self):
        self.rows = []  # (pivot column, normalized row), in insertion order

    def add(self, vec):
        v = list(vec)
        for col, row in self.rows:
            c = v[col]
            if not c.is_zero():
                v = [a - c * b if not b.is_zero() else a for a, b in zip(v, row)]
        for col, c in enumerate(v):
            if not c.is_zero():
                inv = c.inverse()
                self.rows.append((col, [a * inv for a in v]))
                return True
        return False


def canonical_model(spec, table, dec):
    """Block-diagonal model of the canonical representation at the generator images.

    Returns (A, B): the images of g0 and g1 as square matrices of size genus.
    """
    G = spec.group
    blocks = []
    for i, m, _d in dec.constituents:
        model = irreducible_model(G, table, i)
        blocks.extend([model] * m)
    return tuple(_block_diag([b.matrix(x) for b in blocks]) for x in (spec.g0, spec.g1))


def _block_diag(mats):
    n = sum(len(M) for M in mats)
    out = la.zeros(n, n)
    o = 0
    for M in mats:
        k = len(M)
        for i in range(k):
            for j in range(k):
                out[o + i][o + j] = M[i][j]
        o += k
    return out
