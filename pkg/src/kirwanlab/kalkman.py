"""Fixed-point localization integrals over symplectic quotients.

The integral of a (top complementary degree) class over the quotient at a
regular value c is the sum, over fixed points with moment value above c, of
the class's fixed-point value divided by the isotropy weight product.  Summing
over *all* fixed points gives zero, which doubles as a cross-check.

Two tables package these sums for a whole action: a contribution table with
one row per fixed point, and a chamber table whose row for chamber j adds the
contributions of every fixed point lying above that chamber.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CriticalLevel, WrongDegree
from .exactcore import Monomial, Polynomial, homogeneous_exponent_sum
from .hamspace import (
    Chamber,
    FixedPoint,
    ManifoldSpec,
    _fixed_points_tuple,
    chambers,
    fixed_points,
    restrict,
    restrict_monomial,
)


def _check_degree(alpha: Polynomial, spec: ManifoldSpec) -> None:
    if not alpha:
        return
    s = homogeneous_exponent_sum(alpha)
    if s is None or 2 * s != 2 * spec.m - 2:
        raise WrongDegree(
            f"class must be homogeneous of degree {2 * spec.m - 2}"
        )


def integrate(alpha: Polynomial, c, spec: ManifoldSpec) -> Fraction:
    """Localization sum ``sum_{mu(p) > c} alpha(p) / w(p)`` at a regular value c."""
    level = Fraction(c)
    _check_degree(alpha, spec)
    points = _fixed_points_tuple(spec)
    if any(p.mu == level for p in points):
        raise CriticalLevel(f"{level} is a critical value")
    total = Fraction(0)
    for p in points:
        if p.mu > level:
            total += restrict(alpha, p) / p.weight_product
    return total


def full_sum(alpha: Polynomial, spec: ManifoldSpec) -> Fraction:
    """Sum over all fixed points; vanishes for degree 2m-2 classes."""
    _check_degree(alpha, spec)
    total = Fraction(0)
    for p in _fixed_points_tuple(spec):
        total += restrict(alpha, p) / p.weight_product
    return total


@dataclass(frozen=True)
class ContributionTable:
    """Per-fixed-point values ``e(p)/w(p)``, rows ordered by increasing moment value."""

    points: tuple[FixedPoint, ...]
    basis: tuple[Monomial, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(col, Fraction(0)) for col in zip(*self.rows))


@dataclass(frozen=True)
class SuffixTable:
    """Per-chamber integrals of the basis classes (suffix sums of a contribution table)."""

    chambers: tuple[Chamber, ...]
    basis: tuple[Monomial, ...]
    rows: tuple[tuple[Fraction, ...], ...]


def contribution_table(spec: ManifoldSpec, basis: Sequence[Monomial]) -> ContributionTable:
    basis = tuple(tuple(m) for m in basis)
    for m in basis:
        if 2 * sum(m) != 2 * spec.m - 2:
            raise WrongDegree("basis must sit in degree 2m-2")
    points = sorted(
        fixed_points(spec), key=lambda p: (p.mu, p.choice)
    )
    rows = tuple(
        tuple(restrict_monomial(m, p) / p.weight_product for m in basis)
        for p in points
    )
    return ContributionTable(points=tuple(points), basis=basis, rows=rows)


def suffix_table(table: ContributionTable, chamber_list: Sequence[Chamber]) -> SuffixTable:
    rows = []
    for ch in chamber_list:
        acc = [Fraction(0)] * len(table.basis)
        for p, row in zip(table.points, table.rows):
            if p.mu > ch.representative:
                acc = [a + v for a, v in zip(acc, row)]
        rows.append(tuple(acc))
    return SuffixTable(
        chambers=tuple(chamber_list), basis=table.basis, rows=tuple(rows)
    )


def tables_for(spec: ManifoldSpec, basis: Sequence[Monomial]) -> tuple[ContributionTable, SuffixTable]:
    t1 = contribution_table(spec, basis)
    return t1, suffix_table(t1, chambers(spec))
