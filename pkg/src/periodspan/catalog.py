"""The bundled catalog of triangle covers, re-validated on every load."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .cover import parse_cover, validate
from .errors import ValidationError
from .search import simultaneously_conjugate

NAMES = ("bolza", "klein", "macbeath", "hurwitz14a", "hurwitz14b", "hurwitz14c")


def _raw(name):
    if name not in NAMES:
        raise ValidationError(f"unknown catalog entry '{name}'; known: {', '.join(NAMES)}")
    text = resources.files("periodspan").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def entries():
    """Metadata of every entry, in catalog order."""
    out = []
    for name in NAMES:
        obj = _raw(name)
        out.append({k: obj[k] for k in ("name", "signature", "group_order", "group", "provenance")})
    return out


@lru_cache(maxsize=None)
def load(name):
    """Parse and validate a catalog cover; the stored group order is checked too."""
    obj = _raw(name)
    spec = validate(parse_cover(obj, name=name))
    if spec.group.order != obj["group_order"]:
        raise ValidationError(
            f"catalog entry '{name}': generated group has order {spec.group.order}, "
            f"file says {obj['group_order']}")
    return spec


def hurwitz_pairwise_nonconjugate():
    """True when no two genus-14 triples are simultaneously conjugate in their group."""
    specs = [load(n) for n in NAMES if n.startswith("hurwitz14")]
    G = specs[0].group
    for i in range(len(specs)):
        for j in range(i + 1, len(specs)):
            a = (specs[i].g0, specs[i].g1)
            b = (specs[j].g0, specs[j].g1)
            if simultaneously_conjugate(a, b, G.elements):
                return False
    return True
