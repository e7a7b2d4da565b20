from __future__ import annotations

import pytest

from periodspan import catalog, groups
from periodspan.errors import ValidationError
from periodspan.search import simultaneously_conjugate, triples_up_to


def test_listing():
    es = catalog.entries()
    assert [e["name"] for e in es] == list(catalog.NAMES)
    assert [e["group_order"] for e in es] == [48, 168, 504, 1092, 1092, 1092]
    assert [tuple(e["signature"]) for e in es] == [(2, 3, 8)] + [(2, 3, 7)] * 5
    assert all("exhaustive search" in e["provenance"] for e in es)


def test_unknown_name():
    with pytest.raises(ValidationError, match="unknown catalog entry"):
        catalog.load("fermat")


def test_hurwitz_triples_distinct():
    assert catalog.hurwitz_pairwise_nonconjugate()


def test_hurwitz_classes_under_automorphisms():
    # exactly three orbits of generating (2,3,7) pairs under PGL(2,13), matching the bundled files
    G = groups.psl2_prime(13)
    reps = triples_up_to(G, 2, 3, 7, overgroup=groups.pgl2_prime(13))
    assert len(reps) == 3
    specs = [catalog.load(n) for n in ("hurwitz14a", "hurwitz14b", "hurwitz14c")]
    for (x, y), spec in zip(reps, specs):
        assert (x, y) == (spec.g0, spec.g1)


def test_bolza_group_is_gl23():
    spec = catalog.load("bolza")
    assert spec.group.order == 48
    assert sorted(spec.group.classes.class_sizes) == sorted(groups.gl2_3().classes.class_sizes)


def test_conjugate_pair_detected():
    spec = catalog.load("klein")
    h = spec.group.elements[5]
    pair = (spec.g0, spec.g1)
    moved = (h * spec.g0 * ~h, h * spec.g1 * ~h)
    assert simultaneously_conjugate(pair, moved, spec.group.elements)
