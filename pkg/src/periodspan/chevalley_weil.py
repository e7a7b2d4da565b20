"""Decomposition of the canonical representation of X(N) into irreducibles of G.

For a nontrivial irreducible chi of degree n, with branch data g0, g1, ginf
of orders p, q, r over a genus-zero base::

    mult(chi) = -n + sum_x sum_{a=1}^{m_x-1} N_{x,a}(chi) * (1 - a/m_x)

where N_{x,a} counts the eigenvalue zeta_{m_x}^{+a} of chi at the image of
delta_x.  The trivial character has multiplicity zero.  Reversing the sign
convention swaps complex-conjugate constituents and changes nothing else
computed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import eigenvalue_multiplicities
from .cyclotomic import ZERO
from .errors import InvariantViolation


@dataclass(frozen=True)
class CanonicalDecomposition:
    multiplicities: list
    degrees: list
    canonical_character: list

    @property
    def genus(self):
        return sum(m * d for m, d in zip(self.multiplicities, self.degrees))

    @property
    def irreducible(self):
        return is_irreducible(self)

    @property
    def constituents(self):
        """(index, multiplicity, degree) for every constituent present."""
        return [(i, m, d) for i, (m, d) in enumerate(zip(self.multiplicities, self.degrees)) if m]

    def render(self):
        return [f"{m} x (degree-{d} irreducible #{i})" for i, m, d in self.constituents]


def multiplicity(spec, table, index):
    if index == 0:
        return 0
    chi = table.irreducibles[index]
    total = Fraction(-table.degrees[index])
    for x, m in zip(spec.generator_images, spec.signature):
        counts = eigenvalue_multiplicities(table, chi, x)
        if len(counts) != m:
            raise InvariantViolation(f"branch image has order {len(counts)}, expected {m}")
        for a in range(1, m):
            total += counts[a] * (1 - Fraction(a, m))
    if total.denominator != 1 or total < 0:
        raise InvariantViolation(
            f"Chevalley-Weil multiplicity {total} for irreducible #{index} is not a "
            "nonnegative integer (branch-cycle convention error)")
    return int(total)


def canonical_multiplicities(spec, table):
    mults = [multiplicity(spec, table, i) for i in range(len(table.irreducibles))]
    k = len(table.classes)
    chi_n = [ZERO] * k
    for m, chi in zip(mults, table.irreducibles):
        if m:
            chi_n = [a + b * m for a, b in zip(chi_n, chi)]
    return CanonicalDecomposition(mults, list(table.degrees), chi_n)


def is_irreducible(dec):
    nonzero = [m for m in dec.multiplicities if m]
    return nonzero == [1]
