"""Triangle-cover data: a finite quotient G of Delta(p, q, r) given by generator images.

Convention: ``g0 * g1 * ginf == identity``, i.e. ginf = (g0 g1)^-1.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, ValidationError
from .permgroup import MAX_DEGREE, PermGroup, Permutation, close, element_order, generates, parse_cycles


@dataclass(frozen=True, eq=False)
class TriangleCoverSpec:
    signature: tuple
    group: PermGroup
    g0: Permutation
    g1: Permutation
    ginf: Permutation
    name: str = ""

    @property
    def p(self):
        return self.signature[0]

    @property
    def q(self):
        return self.signature[1]

    @property
    def r(self):
        return self.signature[2]

    @property
    def generator_images(self):
        return (self.g0, self.g1, self.ginf)

    def conjugate(self, h):
        """The same cover with all three images conjugated by h."""
        hi = ~h
        return TriangleCoverSpec(self.signature, self.group, h * self.g0 * hi,
                                 h * self.g1 * hi, h * self.ginf * hi, self.name)


def from_generators(signature, g0, g1, name="", cap=None):
    g0, g1 = Permutation(g0.images), Permutation(g1.images)
    G = close([g0, g1]) if cap is None else close([g0, g1], cap=cap)
    return TriangleCoverSpec(tuple(signature), G, g0, g1, ~(g0 * g1), name)


def check(spec):
    """Every violated invariant, as a list of messages (empty when valid)."""
    problems = []
    p, q, r = spec.signature
    if min(p, q, r) < 1:
        problems.append(f"signature entries must be positive, got {spec.signature}")
    elif Fraction(1, p) + Fraction(1, q) + Fraction(1, r) >= 1:
        problems.append(f"signature {spec.signature} is not hyperbolic (1/p + 1/q + 1/r >= 1)")
    if not (spec.g0 * spec.g1 * spec.ginf).is_identity():
        problems.append("relator g0*g1*ginf != identity")
    for label, x, m in (("g0", spec.g0, p), ("g1", spec.g1, q), ("ginf", spec.ginf, r)):
        k = element_order(x)
        if k != m:
            problems.append(f"order mismatch: {label} has order {k}, expected {m}")
    members = [x for x in (spec.g0, spec.g1) if x not in spec.group]
    if members:
        problems.append("generator images do not lie in the group")
    elif not generates(spec.group, [spec.g0, spec.g1]):
        problems.append("g0 and g1 do not generate the group")
    return problems


def validate(spec):
    problems = check(spec)
    if problems:
        raise ValidationError("invalid triangle cover: " + "; ".join(problems), problems)
    return spec


def genus(spec):
    """Riemann-Hurwitz genus of X(N) -> X(Delta) for a validated spec."""
    p, q, r = spec.signature
    g = 1 + Fraction(spec.group.order, 2) * (1 - Fraction(1, p) - Fraction(1, q) - Fraction(1, r))
    if g.denominator != 1:
        raise InvariantViolation(f"non-integral genus {g}")
    return int(g)


# -- JSON input ------------------------------------------------------------

def parse_cover(obj, name=""):
    """Build a spec from the on-disk cover object; field errors are collected."""
    problems = []
    if not isinstance(obj, dict):
        raise ValidationError("cover input must be a JSON object")
    for key in ("signature", "degree", "d0", "d1"):
        if key not in obj:
            problems.append(f"missing field '{key}'")
    if problems:
        raise ValidationError("; ".join(problems), problems)
    sig = obj["signature"]
    if not (isinstance(sig, list) and len(sig) == 3
            and all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in sig)):
        problems.append(f"field 'signature': expected three positive integers, got {sig!r}")
    deg = obj["degree"]
    if not (isinstance(deg, int) and not isinstance(deg, bool) and 1 <= deg <= MAX_DEGREE):
        problems.append(f"field 'degree': expected an integer in 1..{MAX_DEGREE}, got {deg!r}")
    perms = {}
    if not problems:
        for key in ("d0", "d1"):
            try:
                perms[key] = parse_cycles(obj[key], deg)
            except ValidationError as exc:
                problems.append(f"field '{key}': {exc}")
    if problems:
        raise ValidationError("; ".join(problems), problems)
    return from_generators(tuple(sig), perms["d0"], perms["d1"], name=name or obj.get("name", ""))


def load_cover(text, name=""):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_cover(obj, name=name)


def cover_to_json(spec):
    return {
        "signature": list(spec.signature),
        "degree": spec.group.degree,
        "d0": spec.g0.to_cycle_string(),
        "d1": spec.g1.to_cycle_string(),
    }


def spec_hash(spec):
    blob = json.dumps(cover_to_json(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()
