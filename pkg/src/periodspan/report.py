"""The full analysis pipeline and its JSON/text report."""

from __future__ import annotations

import time

from . import __version__
from . import cohomology as co
from .chartable import character_table
from .chevalley_weil import canonical_multiplicities
from .cover import cover_to_json, genus, spec_hash, validate
from .errors import InvariantViolation
from .jacobian import feasibility_verdict
from .period_bound import period_bound
from .representations import canonical_model

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 20


def run_oracle(spec, table, dec, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES):
    """Explicit cohomology of an exact matrix model of the canonical representation."""
    A, B = canonical_model(spec, table, dec)
    rep = co.MatrixRep(A, B, spec.p, spec.q, spec.r)
    problems = co.check_rep(rep, triangle=True)
    if problems:
        raise InvariantViolation("canonical model is invalid: " + "; ".join(problems))
    d0, d1, dinf = co.fixed_dims(rep)
    free = co.h1_dim_free_product(rep)
    tri = co.h1_dim_triangle(rep)
    tri_full = co.h1_dim_triangle_explicit(rep)
    kappas = co.fundamental_cocycles(rep)
    ext = co.extension_rep(rep, kappas[0]) if kappas else None
    return {
        "model_dimension": rep.dimension,
        "d_from_matrices": [d0, d1, dinf],
        "h1_free_product": free,
        "h1_triangle": tri,
        "h1_triangle_full_solve": tri_full,
        "fundamental_cocycles": len(kappas),
        "extension_split": ext.splits() if ext else None,
        "word_samples": samples if ext else 0,
        "word_failures": co.check_multiplicativity(ext, samples, seed) if ext else 0,
        "seed": seed,
    }


def analyze(spec, oracle=False, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES):
    """Run validate, genus, table, Chevalley-Weil, bound, [oracle], verdict; return a report dict."""
    t0 = time.perf_counter()
    validate(spec)
    g = genus(spec)
    table = character_table(spec.group)
    dec = canonical_multiplicities(spec, table)
    if dec.genus != g:
        raise InvariantViolation(f"canonical decomposition has dimension {dec.genus}, genus is {g}")
    if dec.multiplicities[0] != 0:
        raise InvariantViolation("trivial character occurs in the canonical representation")
    pb = period_bound(spec, dec, table, g)
    report = {"version": __version__}
    report["input"] = dict(name=spec.name, **cover_to_json(spec), sha256=spec_hash(spec))
    report["group_order"] = spec.group.order
    report.update(pb.to_json())
    report["canonical"] = {
        "irreducible": dec.irreducible,
        "constituents": [{"index": i, "multiplicity": m, "degree": d} for i, m, d in dec.constituents],
        "rendered": dec.render(),
    }
    oracle_out = None
    if oracle:
        oracle_out = run_oracle(spec, table, dec, seed, samples)
        expected = [pb.d0, pb.d1, pb.dinf]
        if (oracle_out["d_from_matrices"] != expected
                or oracle_out["h1_triangle"] != pb.bound
                or oracle_out["h1_triangle_full_solve"] != pb.bound
                or oracle_out["h1_free_product"] != g - pb.d0 - pb.d1
                or oracle_out["word_failures"]):
            raise InvariantViolation(f"oracle disagrees with the character computation: {oracle_out}")
        oracle_out["agrees"] = True
    report["oracle"] = oracle_out
    report["jacobian"] = feasibility_verdict(g, pb.bound, isotypic=dec.irreducible).to_json()
    report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    return report


def render_text(report):
    lines = []
    inp = report["input"]
    title = inp["name"] or "cover"
    lines.append(f"{title}: signature {tuple(inp['signature'])}, |G| = {report['group_order']}")
    lines.append(f"  genus g = {report['genus']}")
    can = report["canonical"]
    kind = "irreducible" if can["irreducible"] else "reducible"
    lines.append(f"  canonical representation ({kind}): " + ", ".join(can["rendered"]))
    lines.append(f"  (d0, d1, dinf) = ({report['d0']}, {report['d1']}, {report['dinf']})")
    lines.append(f"  period-span bound B = {report['bound']}  "
                 f"(genus bound {report['wolfart_bound']}, trivial bound {report['trivial_bound']})")
    if report["oracle"]:
        o = report["oracle"]
        lines.append(f"  oracle: dim H^1 = {o['h1_triangle']} (full solve {o['h1_triangle_full_solve']}), "
                     f"free product {o['h1_free_product']}, "
                     f"{o['word_samples']} word pairs checked, extension split: {o['extension_split']}")
    jac = report["jacobian"]
    lines.append(f"  Jacobian: {jac['summary']}")
    for s in jac["signatures"]:
        fac = " x ".join(f"(dim {f['dim']}, power {f['power']}, End dim {f['endo_dim']})" for f in s["factors"])
        lines.append(f"    {fac}: dim V = {s['v_dim']}{', CM' if s['cm'] else ''}")
    return "\n".join(lines) + "\n"
