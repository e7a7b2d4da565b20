from __future__ import annotations

import pytest

from conftest import decomposition_of, random_valid_specs, table_of
from periodspan import catalog
from periodspan.chartable import character_table
from periodspan.chevalley_weil import canonical_multiplicities, is_irreducible
from periodspan.cover import genus


# index of the unique constituent, frozen from the first run and cross-checked by
# the genus identity and the explicit matrix model in test_period_bound
@pytest.mark.parametrize("name, index, degree", [
    ("bolza", 2, 2), ("klein", 2, 3), ("macbeath", 1, 7),
    ("hurwitz14a", 7, 14), ("hurwitz14b", 7, 14), ("hurwitz14c", 7, 14),
])
def test_catalog_decompositions(name, index, degree):
    dec = decomposition_of(name)
    assert dec.irreducible
    assert dec.constituents == [(index, 1, degree)]
    assert dec.genus == genus(catalog.load(name))


def test_klein_picks_one_of_two_conjugate_threes():
    dec = decomposition_of("klein")
    T = table_of("klein")
    threes = [i for i, d in enumerate(T.degrees) if d == 3]
    assert sorted(dec.multiplicities[i] for i in threes) == [0, 1]


def test_random_specs():
    for spec in random_valid_specs(8, seed=5):
        T = character_table(spec.group)
        dec = canonical_multiplicities(spec, T)
        assert dec.multiplicities[0] == 0
        assert dec.genus == genus(spec)
        assert all(m >= 0 for m in dec.multiplicities)


def test_conjugate_triple_gives_same_decomposition():
    spec = catalog.load("macbeath")
    T = table_of("macbeath")
    h = spec.group.elements[17]
    assert canonical_multiplicities(spec.conjugate(h), T).multiplicities == decomposition_of("macbeath").multiplicities


def test_render():
    assert decomposition_of("klein").render() == ["1 x (degree-3 irreducible #2)"]
    assert is_irreducible(decomposition_of("bolza"))
