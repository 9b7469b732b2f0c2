"""Hamiltonian circle actions on products of complex projective spaces.

A manifold is a product of projective factors CP^{n_1} x ... x CP^{n_k}; the
circle acts on factor i with an integer weight on each homogeneous coordinate.
Weights within a factor must be pairwise distinct so that the fixed points are
isolated.  Everything downstream (moment values, isotropy weight products,
chambers of regular values, restriction of classes to fixed points) is derived
from this data with exact rational arithmetic.

The equivariant cohomology ring has one degree-2 generator per factor plus the
parameter t, with the relation ``prod_a (x_i - j_{i,a} t)`` in factor i.  With
that sign choice the relation restricts to zero at every fixed point under
``t -> 1, x_i -> mu_i``, which is the consistency the localization formulas
rely on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateSpec, SpecValidationError
from .exactcore import (
    Monomial,
    Polynomial,
    QuotientRing,
    product_of_linear_factors,
)

ONE = Fraction(1)


@dataclass(frozen=True)
class Factor:
    n: int
    weights: tuple[int, ...]


@dataclass(frozen=True)
class ManifoldSpec:
    factors: tuple[Factor, ...]

    @property
    def m(self) -> int:
        """Half the real dimension: sum of the factor dimensions n_i."""
        return sum(f.n for f in self.factors)

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    @property
    def variable_names(self) -> tuple[str, ...]:
        if self.num_factors == 1:
            return ("t", "x")
        return ("t",) + tuple(f"x{i}" for i in range(self.num_factors))


def make_spec(factors: list[tuple[int, list[int]]]) -> ManifoldSpec:
    """Build and validate a spec from ``(n, weights)`` pairs.

    Validation errors name the offending factor index.
    """
    if not factors:
        raise SpecValidationError("a manifold needs at least one factor")
    built = []
    for idx, (n, weights) in enumerate(factors):
        if not isinstance(n, int) or n < 1:
            raise SpecValidationError(f"factor {idx}: dimension n must be a positive integer")
        if len(weights) != n + 1:
            raise SpecValidationError(
                f"factor {idx}: expected {n + 1} weights for CP^{n}, got {len(weights)}"
            )
        if any(not isinstance(w, int) or isinstance(w, bool) for w in weights):
            raise SpecValidationError(f"factor {idx}: weights must be integers")
        if len(set(weights)) != len(weights):
            raise SpecValidationError(f"factor {idx}: weights must be pairwise distinct")
        built.append(Factor(n=n, weights=tuple(int(w) for w in weights)))
    return ManifoldSpec(factors=tuple(built))


@lru_cache(maxsize=None)
def ring_for(spec: ManifoldSpec) -> QuotientRing:
    """Equivariant cohomology ring of a manifold description (minus-sign relations)."""
    nvars = spec.num_factors + 1
    relations = {
        i + 1: product_of_linear_factors(nvars, i + 1, 0, f.weights)
        for i, f in enumerate(spec.factors)
    }
    return QuotientRing(spec.variable_names, relations)


@dataclass(frozen=True)
class FixedPoint:
    choice: tuple[int, ...]
    per_factor_mu: tuple[Fraction, ...]
    mu: Fraction
    weight_product: Fraction


def _point_for_choice(spec: ManifoldSpec, choice: tuple[int, ...]) -> FixedPoint:
    mus = []
    w = ONE
    for f, a in zip(spec.factors, choice):
        mus.append(Fraction(f.weights[a]))
        for b, jb in enumerate(f.weights):
            if b != a:
                w *= jb - f.weights[a]
    return FixedPoint(
        choice=choice,
        per_factor_mu=tuple(mus),
        mu=sum(mus, Fraction(0)),
        weight_product=w,
    )


@lru_cache(maxsize=None)
def _fixed_points_tuple(spec: ManifoldSpec) -> tuple[FixedPoint, ...]:
    ranges = [range(f.n + 1) for f in spec.factors]
    return tuple(_point_for_choice(spec, choice) for choice in itertools.product(*ranges))


def fixed_points(spec: ManifoldSpec) -> list[FixedPoint]:
    """The prod(n_i + 1) isolated fixed points, in lexicographic choice order.

    Each point picks one homogeneous coordinate per factor; its moment value
    is the sum of the chosen weights and its isotropy weight product is
    ``prod_i prod_{b != a_i} (j_{i,b} - j_{i,a_i})``.
    """
    return list(_fixed_points_tuple(spec))


@dataclass(frozen=True)
class Chamber:
    lower: Fraction
    upper: Fraction
    representative: Fraction


def critical_values(spec: ManifoldSpec) -> list[Fraction]:
    return sorted({p.mu for p in _fixed_points_tuple(spec)})


@lru_cache(maxsize=None)
def _chambers_tuple(spec: ManifoldSpec) -> tuple[Chamber, ...]:
    crits = critical_values(spec)
    if len(crits) < 2:
        # Distinct weights within each factor force at least two critical values.
        raise DegenerateSpec("action has a single critical value")
    return tuple(
        Chamber(lower=lo, upper=hi, representative=(lo + hi) / 2)
        for lo, hi in zip(crits, crits[1:])
    )


def chambers(spec: ManifoldSpec) -> list[Chamber]:
    """Open intervals between consecutive critical values, midpoints as representatives."""
    return list(_chambers_tuple(spec))


def restrict(alpha: Polynomial, point: FixedPoint) -> Fraction:
    """Evaluate a class at a fixed point: ``t -> 1``, ``x_i -> mu_i(p)``.

    This is a ring homomorphism to Q for every fixed point, so it does not
    matter whether ``alpha`` was reduced to normal form first.
    """
    total = Fraction(0)
    for mono, coeff in alpha.items():
        value = coeff
        for mu, e in zip(point.per_factor_mu, mono[1:]):
            if e:
                value *= mu**e
        total += value
    return total


def restrict_monomial(mono: Monomial, point: FixedPoint) -> Fraction:
    value = ONE
    for mu, e in zip(point.per_factor_mu, mono[1:]):
        if e:
            value *= mu**e
    return value


def wall_points(spec: ManifoldSpec, level: Fraction) -> list[FixedPoint]:
    """Fixed points sitting exactly on a given moment level."""
    return [p for p in fixed_points(spec) if p.mu == level]
