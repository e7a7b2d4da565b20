from __future__ import annotations

import pytest

from conftest import random_small_groups
from periodspan import groups
from periodspan.chartable import (character_table, dixon_prime, eigenvalue_multiplicities, format_table,
                                  read_table, verify)
from periodspan.cyclotomic import Cyclo, ONE
from periodspan.errors import ValidationError
from periodspan.permgroup import Permutation, close, element_order


def test_s3_table_matches_brute_force():
    # rows frozen from the hand computation on classes (1, 3-cycles, transpositions)
    G = groups.symmetric(3)
    T = character_table(G)
    assert G.classes.class_sizes == [1, 2, 3]
    assert [[v.as_integer() for v in chi] for chi in T.irreducibles] == [[1, 1, 1], [1, 1, -1], [2, -1, 0]]


def test_trivial_group():
    T = character_table(close([Permutation([0])]))
    assert T.degrees == [1] and T.irreducibles == [[ONE]]


@pytest.mark.parametrize("build, degrees", [
    (lambda: groups.symmetric(4), [1, 1, 2, 3, 3]),
    (lambda: groups.alternating(5), [1, 3, 3, 4, 5]),
    (groups.gl2_3, [1, 1, 2, 2, 2, 3, 3, 4]),
    (lambda: groups.psl2_prime(7), [1, 3, 3, 6, 7, 8]),
    (groups.psl2_8, [1, 7, 7, 7, 7, 8, 9, 9, 9]),
])
def test_degrees(build, degrees):
    G = build()
    T = character_table(G)
    assert T.degrees == degrees
    assert verify(T, G.order) == []


def test_dixon_prime():
    p = dixon_prime(168, 84)
    assert p % 84 == 1 and p * p > 4 * 168


def natural_eigenvalue_counts(x, m):
    """Eigenvalue multiplicities of a permutation matrix from its cycle type."""
    counts = [0] * m
    for cyc in _all_cycles(x):
        L = len(cyc)
        for a in range(m):
            if (a * L) % m == 0:
                counts[a] += 1
    return counts


def _all_cycles(x):
    seen, out = set(), []
    for i in range(x.degree):
        if i not in seen:
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = x.images[j]
            out.append(cyc)
    return out


@pytest.mark.parametrize("build", [lambda: groups.symmetric(4), groups.gl2_3, lambda: groups.psl2_prime(7)])
def test_eigenvalue_multiplicities_against_cycle_type(build):
    G = build()
    T = character_table(G)
    cc = G.classes
    perm_char = [Cyclo.rational(sum(1 for i in range(G.degree) if x.images[i] == i))
                 for x in cc.representatives]
    coeffs = T.decompose(perm_char)
    for x in cc.representatives:
        m = element_order(x)
        total = [0] * m
        for a_chi, chi in zip(coeffs, T.irreducibles):
            for a, n in enumerate(eigenvalue_multiplicities(T, chi, x)):
                total[a] += a_chi * n
        assert total == natural_eigenvalue_counts(x, m)


def test_random_groups_verify():
    for G in random_small_groups(6, seed=3):
        T = character_table(G)
        assert verify(T, G.order) == []


def test_table_closed_under_galois():
    G = groups.psl2_prime(7)
    T = character_table(G)
    rows = {tuple(chi) for chi in T.irreducibles}
    for chi in T.irreducibles:
        assert tuple(v.conj() for v in chi) in rows


def test_table_file_round_trip():
    G = groups.psl2_prime(7)
    T = character_table(G)
    T2 = read_table(format_table(T), G)
    assert T2.irreducibles == T.irreducibles


def test_table_file_rejects_bad_values():
    G = groups.symmetric(3)
    text = format_table(character_table(G)).replace("2 -1 0", "2 1 0")
    with pytest.raises(ValidationError):
        read_table(text, G)
