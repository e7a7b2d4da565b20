"""The period-span bound B = g - d0 - d1 - dinf and the comparison bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import fixed_space_dim
from .cyclotomic import ZERO
from .errors import InvariantViolation


@dataclass(frozen=True)
class PeriodBoundReport:
    genus: int
    d0: int
    d1: int
    dinf: int
    canonical: object = field(repr=False)

    @property
    def bound(self):
        return self.genus - self.d0 - self.d1 - self.dinf

    @property
    def dim_h1(self):
        # dim H^1(Delta, rho_N) equals the bound; kept as a separate field
        # because the bound constrains dim V_X and need not equal it
        return self.bound

    @property
    def wolfart_bound(self):
        return self.genus

    @property
    def trivial_bound(self):
        return 2 * self.genus**2

    def to_json(self):
        return {
            "genus": self.genus,
            "d0": self.d0,
            "d1": self.d1,
            "dinf": self.dinf,
            "bound": self.bound,
            "dim_h1": self.dim_h1,
            "wolfart_bound": self.wolfart_bound,
            "trivial_bound": self.trivial_bound,
        }


def fixed_dim_by_averaging(table, chi, x):
    """(1/m) sum_j chi(x^j), evaluated through the power map."""
    cc = table.classes
    c = cc.class_index[x]
    m = cc.orders[c]
    s = ZERO
    for j in range(m):
        s = s + chi[cc.power_class(c, j)]
    d = (s * Fraction(1, m)).as_integer()
    if d is None or d < 0:
        raise InvariantViolation(f"fixed-space dimension {s * Fraction(1, m)} is not a nonnegative integer")
    return d


def d_values(spec, dec, table):
    """(d0, d1, dinf) from the assembled canonical character, cross-checked per constituent."""
    out = []
    for x in spec.generator_images:
        d = fixed_dim_by_averaging(table, dec.canonical_character, x)
        by_parts = sum(m * fixed_space_dim(table, table.irreducibles[i], x)
                       for i, m, _ in dec.constituents)
        if d != by_parts:
            raise InvariantViolation(f"d-value mismatch: {d} vs {by_parts}")
        out.append(d)
    return tuple(out)


def bound(genus, d, dec):
    report = PeriodBoundReport(genus, d[0], d[1], d[2], dec)
    if not 1 <= report.bound <= genus:
        raise InvariantViolation(f"bound B = {report.bound} outside [1, g = {genus}]")
    return report


def period_bound(spec, dec, table, genus):
    return bound(genus, d_values(spec, dec, table), dec)
