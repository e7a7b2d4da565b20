"""Finite permutation groups by full element enumeration.

Elements are stored 0-based in one-line notation.  Products compose as
functions, ``(x * y)(i) == x(y(i))``, so that the permutation matrices
``M(x) e_i = e_{x(i)}`` form a homomorphism.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .errors import GroupTooLarge, ValidationError

MAX_DEGREE = 64
DEFAULT_ORDER_CAP = 10**6


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n == 0:
            raise ValidationError("permutation must have positive degree")
        if sorted(images) != list(range(n)):
            raise ValidationError(f"not a bijection on 0..{n - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from 0-based cycles, e.g. ``[[0, 1], [2, 3, 4]]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValidationError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise ValidationError(f"point {a} repeated in cycles")
                seen.add(a)
            for k, a in enumerate(cyc):
                images[a] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValidationError("degree mismatch in product")
        a = self.images
        return Permutation._raw(tuple(a[i] for i in other.images))

    def __invert__(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    inverse = __invert__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return (~self) ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(cyc)
        return out

    def to_cycle_string(self, one_based=True):
        off = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(a + off) for a in c) + ")" for c in cycs)

    def __repr__(self):
        return f"Permutation({self.to_cycle_string(one_based=False)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree, one_based=True):
    """Parse a disjoint-cycle string such as ``"(1,2)(3,4,5)"``; ``"()"`` is the identity."""
    if not isinstance(text, str):
        raise ValidationError(f"cycle string expected, got {type(text).__name__}")
    stripped = re.sub(r"\s+", "", text)
    if not re.fullmatch(r"(\([^()]*\))+", stripped):
        raise ValidationError(f"malformed cycle string {text!r}")
    off = 1 if one_based else 0
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if body == "":
            continue
        try:
            pts = [int(tok) - off for tok in body.split(",")]
        except ValueError:
            raise ValidationError(f"malformed cycle string {text!r}") from None
        cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)


def element_order(x):
    """Least n >= 1 with x**n the identity (lcm of cycle lengths)."""
    return reduce(math.lcm, (len(c) for c in x.cycles()), 1)


@dataclass(frozen=True)
class ConjugacyClasses:
    representatives: list
    class_sizes: list
    class_index: dict
    power_map: list
    orders: list
    exponent: int

    def __len__(self):
        return len(self.representatives)

    def centralizer_order(self, i):
        return sum(self.class_sizes) // self.class_sizes[i]

    def power_class(self, i, j):
        """Class of ``rep_i ** j`` for any integer j."""
        return self.power_map[i][j % self.orders[i]]

    @cached_property
    def inverse_map(self):
        return [self.power_class(i, -1) for i in range(len(self))]


@dataclass(frozen=True, eq=False)
class PermGroup:
    generators: tuple
    elements: tuple
    index: dict = field(repr=False)

    @property
    def order(self):
        return len(self.elements)

    @property
    def degree(self):
        return self.elements[0].degree

    @property
    def identity(self):
        return self.elements[0]

    def __contains__(self, x):
        return x in self.index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def classes(self):
        return conjugacy_classes(self)

    def class_of(self, x):
        return self.classes.class_index[x]


def close(generators, cap=DEFAULT_ORDER_CAP):
    """Enumerate the group generated by ``generators`` by breadth-first closure.

    Elements are returned sorted lexicographically on their images, which
    puts the identity first.
    """
    gens = list(generators)
    if not gens:
        raise ValidationError("at least one generator required")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValidationError("generators have different degrees")
    if n > MAX_DEGREE:
        raise ValidationError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    ident = Permutation.identity(n)
    seen = {ident.images}
    frontier = [ident.images]
    gen_images = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_images:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"group too large: order exceeds cap {cap}")
        frontier = nxt
    elements = tuple(Permutation._raw(t) for t in sorted(seen))
    index = {x: i for i, x in enumerate(elements)}
    return PermGroup(tuple(gens), elements, index)


def generates(G, elements):
    """True iff ``elements`` generate all of G."""
    elements = list(elements)
    if not elements:
        return G.order == 1
    for x in elements:
        if x not in G:
            raise ValidationError(f"{x!r} is not an element of the group")
    return close(elements, cap=G.order).order == G.order


def conjugacy_classes(G):
    gens = [(g.images, (~g).images) for g in G.generators]
    label = {}
    orbits = []
    for x in G.elements:
        if x.images in label:
            continue
        orbit = [x.images]
        label[x.images] = -1
        k = 0
        while k < len(orbit):
            y = orbit[k]
            k += 1
            for g, ginv in gens:
                # g y g^-1
                z = tuple(g[y[ginv[i]]] for i in range(len(y)))
                if z not in label:
                    label[z] = -1
                    orbit.append(z)
        orbits.append(min(orbit))
        for y in orbit:
            label[y] = len(orbits) - 1
    sizes = [0] * len(orbits)
    for c in label.values():
        sizes[c] += 1
    ident = G.identity.images
    order = sorted(range(len(orbits)),
                   key=lambda c: (orbits[c] != ident, sizes[c], orbits[c]))
    renum = {old: new for new, old in enumerate(order)}
    reps = [Permutation._raw(orbits[c]) for c in order]
    class_sizes = [sizes[c] for c in order]
    class_index = {x: renum[label[x.images]] for x in G.elements}
    orders = [element_order(r) for r in reps]
    power_map = []
    for r, m in zip(reps, orders):
        row = []
        y = Permutation.identity(G.degree)
        for _ in range(m):
            row.append(class_index[y])
            y = y * r
        power_map.append(row)
    exponent = reduce(math.lcm, orders, 1)
    return ConjugacyClasses(reps, class_sizes, class_index, power_map, orders, exponent)
