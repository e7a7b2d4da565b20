"""Exhaustive search for generating (p, q, r) triples, used to build the catalog.

For each conjugacy class of elements of order p, a class representative x is
paired with every y of order q; (x, y) is kept when (x y)^-1 has order r and
x, y generate G.  Triples are then reduced modulo simultaneous conjugation by
an overgroup A (G itself, or a group inducing all automorphisms of G).

Regenerate the bundled catalog with ``python -m periodspan.search``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from . import groups
from .permgroup import Permutation, element_order, generates

DATA_DIR = Path(__file__).with_name("data")


def _canonical_pair(x, y, conjugators):
    best = None
    for h in conjugators:
        hi = ~h
        key = ((h * x * hi).images, (h * y * hi).images)
        if best is None or key < best:
            best = key
    return best


def generating_pairs(G, p, q, r):
    """All (x, y) with x a class representative of order p, y of order q,
    order((x y)^-1) = r, and <x, y> = G."""
    cc = G.classes
    xs = [rep for rep, m in zip(cc.representatives, cc.orders) if m == p]
    ys = [y for y in G.elements if element_order(y) == q]
    out = []
    for x in xs:
        for y in ys:
            if element_order(x * y) == r and generates(G, [x, y]):
                out.append((x, y))
    return out


def triples_up_to(G, p, q, r, overgroup=None):
    """One representative pair per orbit of simultaneous conjugation by ``overgroup``.

    Representatives are the lexicographically smallest pair in each orbit,
    returned in increasing order.
    """
    A = overgroup if overgroup is not None else G
    seen = set()
    for x, y in generating_pairs(G, p, q, r):
        seen.add(_canonical_pair(x, y, A.elements))
    return [(Permutation._raw(a), Permutation._raw(b)) for a, b in sorted(seen)]


def simultaneously_conjugate(pair1, pair2, conjugators):
    x1, y1 = pair1
    x2, y2 = pair2
    for h in conjugators:
        hi = ~h
        if h * x1 * hi == x2 and h * y1 * hi == y2:
            return True
    return False


CATALOG_PLAN = [
    # name, group builder, signature, overgroup builder, how many orbits kept
    ("bolza", groups.gl2_3, (2, 3, 8), None, 1),
    ("klein", lambda: groups.psl2_prime(7), (2, 3, 7), None, 1),
    ("macbeath", groups.psl2_8, (2, 3, 7), None, 1),
    ("hurwitz14", lambda: groups.psl2_prime(13), (2, 3, 7), lambda: groups.pgl2_prime(13), 3),
]

GROUP_LABELS = {
    "bolza": "GL(2,3) on the 8 nonzero vectors of F_3^2",
    "klein": "PSL(2,7) on the projective line over F_7",
    "macbeath": "PSL(2,8) on the projective line over F_8",
    "hurwitz14": "PSL(2,13) on the projective line over F_13",
}


def build_catalog():
    entries = []
    for name, build, sig, over, count in CATALOG_PLAN:
        G = build()
        A = over() if over else None
        reps = triples_up_to(G, *sig, overgroup=A)
        if len(reps) < count:
            raise RuntimeError(f"{name}: found {len(reps)} triple classes, need {count}")
        if count > 1 and len(reps) != count:
            raise RuntimeError(f"{name}: expected exactly {count} classes, found {len(reps)}")
        scope = "PGL(2,13)" if over else "G"
        for k, (x, y) in enumerate(reps[:count]):
            label = name if count == 1 else f"{name}{'abc'[k]}"
            entries.append({
                "name": label,
                "signature": list(sig),
                "degree": G.degree,
                "d0": x.to_cycle_string(),
                "d1": y.to_cycle_string(),
                "group_order": G.order,
                "group": GROUP_LABELS[name],
                "provenance": (
                    f"periodspan.search: exhaustive search over x in order-{sig[0]} class "
                    f"representatives and all y of order {sig[1]} with order((xy)^-1) = {sig[2]} "
                    f"and <x,y> = G; {len(reps)} orbit(s) under simultaneous conjugation by "
                    f"{scope}; lexicographically smallest orbit representative #{k}"),
            })
    return entries


def main(argv=None):
    DATA_DIR.mkdir(exist_ok=True)
    for entry in build_catalog():
        path = DATA_DIR / f"{entry['name']}.json"
        path.write_text(json.dumps(entry, indent=2) + "\n")
        print(f"wrote {path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
