from __future__ import annotations

import json

import pytest

from periodspan import catalog, groups
from periodspan.cover import (TriangleCoverSpec, check, cover_to_json, from_generators, genus, load_cover,
                              spec_hash, validate)
from periodspan.errors import ValidationError
from periodspan.permgroup import parse_cycles


def s3_spec(sig=(2, 3, 2)):
    return from_generators(sig, parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3))


def test_relator_convention():
    spec = s3_spec()
    assert (spec.g0 * spec.g1 * spec.ginf).is_identity()


def test_non_hyperbolic_is_reported():
    problems = check(s3_spec())
    assert any("hyperbolic" in p for p in problems)


def test_order_mismatch_is_reported():
    problems = check(s3_spec((2, 3, 7)))
    assert any("ginf has order 2" in p for p in problems)


def test_all_problems_collected():
    with pytest.raises(ValidationError) as info:
        validate(s3_spec((3, 3, 3)))
    assert len(info.value.problems) >= 2


def test_non_generating_pair():
    S4 = groups.symmetric(4)
    x = parse_cycles("(1,2)", 4)
    y = parse_cycles("(1,2,3)", 4)
    spec = TriangleCoverSpec((2, 3, 2), S4, x, y, ~(x * y))
    assert "g0 and g1 do not generate the group" in check(spec)


@pytest.mark.parametrize("name, g", [("bolza", 2), ("klein", 3), ("macbeath", 7),
                                     ("hurwitz14a", 14), ("hurwitz14b", 14), ("hurwitz14c", 14)])
def test_catalog_genus(name, g):
    assert genus(catalog.load(name)) == g


def test_json_round_trip():
    spec = catalog.load("klein")
    again = load_cover(json.dumps(cover_to_json(spec)))
    assert again.g0 == spec.g0 and again.g1 == spec.g1
    assert spec_hash(again) == spec_hash(spec)


@pytest.mark.parametrize("obj, fragment", [
    ({"signature": [2, 3], "degree": 3, "d0": "(1,2)", "d1": "(1,2,3)"}, "field 'signature'"),
    ({"signature": [2, 3, 7], "degree": 0, "d0": "()", "d1": "()"}, "field 'degree'"),
    ({"signature": [2, 3, 7], "degree": 3, "d0": "(1,4)", "d1": "()"}, "field 'd0'"),
    ({"signature": [2, 3, 7], "degree": 3}, "missing field 'd0'"),
])
def test_schema_diagnostics(obj, fragment):
    with pytest.raises(ValidationError) as info:
        load_cover(json.dumps(obj))
    assert any(fragment in p for p in info.value.problems)


def test_json_syntax_error_has_position():
    with pytest.raises(ValidationError, match="line 2, column"):
        load_cover('{"signature": [2,3,7],\n "degree": }')
