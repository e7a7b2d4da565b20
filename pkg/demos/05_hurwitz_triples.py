"""Finding the three genus-14 Hurwitz curves.

Generating (2,3,7) pairs of PSL(2,13) fall into three orbits under the
automorphism group PGL(2,13); each orbit is one curve.  All three have the
same bound B = 2, and an exact matrix model of the 14-dimensional
canonical representation confirms dim H^1 = 2 by direct computation.
"""

from __future__ import annotations

import time

from periodspan import catalog, groups
from periodspan.report import analyze
from periodspan.search import triples_up_to

G = groups.psl2_prime(13)
t0 = time.perf_counter()
reps = triples_up_to(G, 2, 3, 7, overgroup=groups.pgl2_prime(13))
print(f"{len(reps)} classes of generating (2,3,7) pairs in PSL(2,13) ({time.perf_counter() - t0:.1f}s)")

for name in ("hurwitz14a", "hurwitz14b", "hurwitz14c"):
    r = analyze(catalog.load(name))
    print(f"{name}: g = {r['genus']}, (d0, d1, dinf) = ({r['d0']}, {r['d1']}, {r['dinf']}), "
          f"B = {r['bound']}; {r['jacobian']['summary']}")

t0 = time.perf_counter()
r = analyze(catalog.load("hurwitz14a"), oracle=True, samples=5)
o = r["oracle"]
print(f"explicit cohomology: dim H^1 = {o['h1_triangle']} "
      f"(full solve {o['h1_triangle_full_solve']}, {time.perf_counter() - t0:.1f}s)")
