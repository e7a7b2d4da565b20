from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from periodspan import catalog
from periodspan.chartable import character_table
from periodspan.chevalley_weil import canonical_multiplicities
from periodspan.cover import from_generators, genus
from periodspan.errors import GroupTooLarge
from periodspan.jacobian import albert_feasible
from periodspan.permgroup import Permutation, close, element_order

ACCEPTANCE_LINES: dict[int, str] = {}


@lru_cache(maxsize=None)
def table_of(name):
    spec = catalog.load(name)
    return character_table(spec.group)


@lru_cache(maxsize=None)
def decomposition_of(name):
    return canonical_multiplicities(catalog.load(name), table_of(name))


def random_perm(rng, n):
    imgs = list(range(n))
    rng.shuffle(imgs)
    return Permutation(imgs)


def random_small_groups(count, seed, max_order=120, min_order=2):
    """Distinct groups generated by two random permutations on <= 6 points."""
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        n = rng.randint(3, 6)
        gens = [random_perm(rng, n), random_perm(rng, n)]
        try:
            G = close(gens, cap=max_order)
        except GroupTooLarge:
            continue
        if G.order < min_order:
            continue
        key = (n, frozenset(G.elements))
        if key in seen:
            continue
        seen.add(key)
        out.append(G)
    return out


def random_valid_specs(count, seed, max_order=120):
    """Hyperbolic triangle covers (G, g0, g1) from random permutation pairs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, 6)
        x, y = random_perm(rng, n), random_perm(rng, n)
        sig = (element_order(x), element_order(y), element_order(~(x * y)))
        if min(sig) < 2 or sum(1 / v for v in sig) >= 1:
            continue
        try:
            spec = from_generators(sig, x, y, cap=max_order)
        except GroupTooLarge:
            continue
        genus(spec)
        out.append(spec)
    return out


def partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def brute_force(g, B):
    """Every multiset of (dim, power, endo_dim) with sum dim*power = g and period span in [1, B]."""
    out = set()
    for parts in partitions(g):
        # parts are the sizes dim*power of the factors
        options = []
        for size in parts:
            opts = []
            for dim in range(1, size + 1):
                if size % dim == 0:
                    opts += [(dim, size // dim, e) for e in albert_feasible(dim)]
            options.append(opts)
        for choice in _product(options):
            v = sum(Fraction(2 * d * d, e) for d, _, e in choice)
            if 1 <= v <= B and v.denominator == 1:
                out.add(tuple(sorted(choice)))
    return out


def _product(options):
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail


def as_set(signatures):
    return {tuple(sorted((f.dim, f.power, f.endo_dim) for f in s.factors)) for s in signatures}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
