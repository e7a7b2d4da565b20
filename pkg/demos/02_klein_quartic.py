"""The full pipeline on the Klein quartic.

Klein's quartic is the quotient of the (2,3,7) triangle group by a normal
subgroup with quotient PSL(2,7).  We compute its genus, split the space of
holomorphic differentials into irreducibles, read off the eigenvalue-one
dimensions (d0, d1, dinf) and the bound B, and list the Jacobian
decompositions that survive.
"""

from __future__ import annotations

import json

from periodspan import catalog
from periodspan.report import analyze, render_text

spec = catalog.load("klein")
print("generator images:", spec.g0.to_cycle_string(), spec.g1.to_cycle_string())
print("third image (g0 g1)^-1:", spec.ginf.to_cycle_string())

report = analyze(spec, oracle=True)
print(render_text(report))

# the JSON form is what the CLI emits with --format json
print(json.dumps({k: report[k] for k in ("genus", "d0", "d1", "dinf", "bound")}, indent=2))
