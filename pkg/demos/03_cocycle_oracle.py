"""Checking dim H^1 against the eigenvalue formula by explicit linear algebra.

For the deleted regular representation of a finite group generated by g0
and g1, we solve for cocycles directly and compare with dim V - d0 - d1
(free product of two cyclic groups) and dim V - d0 - d1 - dinf (triangle
group).  We then build the extension representation from a fundamental
cocycle and check that it does not split.
"""

from __future__ import annotations

from periodspan import cohomology as co
from periodspan import groups
from periodspan.cyclotomic import ONE, ZERO
from periodspan.permgroup import element_order, parse_cycles

G = groups.symmetric(4)
g0 = parse_cycles("(1,2,3,4)", 4)
g1 = parse_cycles("(1,2)", 4)
r = element_order(~(g0 * g1))
rep = co.deleted_perm_rep(G, g0, g1, r)
d0, d1, dinf = co.fixed_dims(rep)
print(f"S4 at orders (p, q, r) = ({rep.p}, {rep.q}, {r}), dim V = {rep.dimension}")
print(f"(d0, d1, dinf) = ({d0}, {d1}, {dinf})")
print("free product:   H^1 =", co.h1_dim_free_product(rep), " formula:", rep.dimension - d0 - d1)
print("triangle group: H^1 =", co.h1_dim_triangle(rep), " full solve:", co.h1_dim_triangle_explicit(rep),
      " formula:", rep.dimension - d0 - d1 - dinf)

kappas = co.fundamental_cocycles(rep)
ext = co.extension_rep(rep, kappas[0])
print(f"{len(kappas)} fundamental cocycles; first one splits: {ext.splits()}")
print("sampled law violations:", co.check_multiplicativity(ext, samples=50, seed=0))

v = [ONE] + [ZERO] * (rep.dimension - 1)  # any vector gives a coboundary
print("coboundary extension splits:", co.extension_rep(rep, co.coboundary(rep, v)).splits())
