"""Exact multivariate polynomials and quotient-ring normal forms.

A polynomial is a dict mapping monomial exponent tuples to rational
coefficients (``Fraction``); zero coefficients are never stored, so dict
equality is polynomial equality.  Every variable sits in cohomological
degree 2, hence the degree of a monomial is twice its exponent sum.

Quotient rings are given by one relation per "bounded" variable, each a monic
polynomial whose leading monomial is a pure power of that variable (e.g.
``prod_a (x_i - j_a t)`` with leading monomial ``x_i^(n_i+1)``).  Leading
monomials in distinct variables are coprime, so naive rewriting is confluent
and terminates; no general Groebner machinery is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import CustomBasisNotABasis

Monomial = tuple[int, ...]
Polynomial = dict[Monomial, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def zero() -> Polynomial:
    return {}


def const(nvars: int, value) -> Polynomial:
    c = Fraction(value)
    if c == 0:
        return {}
    return {(0,) * nvars: c}


def variable(nvars: int, index: int) -> Polynomial:
    if not 0 <= index < nvars:
        raise ValueError(f"variable index {index} out of range for {nvars} variables")
    exps = [0] * nvars
    exps[index] = 1
    return {tuple(exps): ONE}


def monomial(exponents: Sequence[int], coeff=1) -> Polynomial:
    c = Fraction(coeff)
    if c == 0:
        return {}
    if any(e < 0 for e in exponents):
        raise ValueError("negative exponent")
    return {tuple(int(e) for e in exponents): c}


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, ZERO) + c
        if s == 0:
            out.pop(m, None)
        else:
            out[m] = s
    return out


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return add(a, scale(b, -1))


def scale(a: Polynomial, value) -> Polynomial:
    c = Fraction(value)
    if c == 0:
        return {}
    return {m: k * c for m, k in a.items()}


def mul_raw(a: Polynomial, b: Polynomial) -> Polynomial:
    """Product in the free polynomial ring (no relation rewriting)."""
    out: Polynomial = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, ZERO) + ca * cb
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
    return out


def exponent_sum(m: Monomial) -> int:
    return sum(m)


def homogeneous_exponent_sum(p: Polynomial) -> int | None:
    """Common exponent sum of the terms of ``p``, or None if mixed.

    The zero polynomial is homogeneous of every degree; it returns None and
    callers treat it specially.
    """
    sums = {sum(m) for m in p}
    if len(sums) == 1:
        return sums.pop()
    return None


def cohomological_degree(p: Polynomial) -> int | None:
    s = homogeneous_exponent_sum(p)
    return None if s is None else 2 * s


def term_sort_key(m: Monomial):
    """Degree first, then the alphabet order t < x0 < x1 < ...

    Within one degree this is word-lexicographic order on monomials read as
    words, which is the same as decreasing lexicographic order on exponent
    tuples.
    """
    return (sum(m), tuple(-e for e in m))


def sorted_terms(p: Polynomial) -> list[tuple[Monomial, Fraction]]:
    return sorted(p.items(), key=lambda item: term_sort_key(item[0]))


def product_of_linear_factors(
    nvars: int, var_index: int, param_index: int, roots: Iterable[int]
) -> Polynomial:
    """Return ``prod_a (x - j_a * t)`` where x is ``var_index``, t is ``param_index``."""
    p = const(nvars, 1)
    x = variable(nvars, var_index)
    t = variable(nvars, param_index)
    for j in roots:
        p = mul_raw(p, sub(x, scale(t, j)))
    return p


class QuotientRing:
    """A polynomial ring with confluent pure-power rewriting relations.

    Parameters
    ----------
    variables:
        Variable names, fixing positions and the display/order alphabet.
    relations:
        Map from variable index to its monic relation polynomial.  The
        relation's leading monomial must be a pure power of that variable;
        every other term may involve only that variable and *free* variables
        (those without a relation).  Relations must be degree-homogeneous so
        normal forms preserve the grading.
    """

    def __init__(self, variables: Sequence[str], relations: dict[int, Polynomial]):
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.relations = {i: dict(r) for i, r in relations.items()}
        self.lead_exponent: dict[int, int] = {}
        bounded = set(relations)
        for i, rel in self.relations.items():
            self._validate_relation(i, rel, bounded)
        self.free_indices = tuple(i for i in range(self.nvars) if i not in bounded)
        # replacement for x_i^d: the relation minus its leading term, negated
        self._replacement: dict[int, Polynomial] = {}
        for i, rel in self.relations.items():
            d = self.lead_exponent[i]
            lead = tuple(d if k == i else 0 for k in range(self.nvars))
            repl = {m: -c for m, c in rel.items() if m != lead}
            self._replacement[i] = repl
        self._nf_cache: dict[Monomial, Polynomial] = {}

    def _validate_relation(self, i: int, rel: Polynomial, bounded: set[int]) -> None:
        if not rel:
            raise ValueError(f"empty relation for variable {self.variables[i]}")
        degree = homogeneous_exponent_sum(rel)
        if degree is None:
            raise ValueError(f"relation for {self.variables[i]} is not homogeneous")
        lead = tuple(degree if k == i else 0 for k in range(self.nvars))
        if rel.get(lead) != 1:
            raise ValueError(
                f"relation for {self.variables[i]} is not monic with leading "
                f"monomial {self.variables[i]}^{degree}"
            )
        for m in rel:
            for k, e in enumerate(m):
                if e and k != i and k in bounded:
                    raise ValueError(
                        f"relation for {self.variables[i]} involves bounded "
                        f"variable {self.variables[k]}"
                    )
            if m != lead and m[i] >= degree:
                raise ValueError(f"relation for {self.variables[i]} has a bad term")
        self.lead_exponent[i] = degree

    def max_exponent(self, index: int) -> int | None:
        """Largest exponent of a variable surviving in normal form (None if free)."""
        d = self.lead_exponent.get(index)
        return None if d is None else d - 1

    def _reduce_monomial(self, m: Monomial) -> Polynomial:
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        target = None
        for i, d in self.lead_exponent.items():
            if m[i] >= d:
                target = (i, d)
                break
        if target is None:
            result: Polynomial = {m: ONE}
        else:
            i, d = target
            rest = list(m)
            rest[i] -= d
            rest_t = tuple(rest)
            result = {}
            for rm, rc in self._replacement[i].items():
                prod = tuple(x + y for x, y in zip(rest_t, rm))
                result = add(result, scale(self._reduce_monomial(prod), rc))
        self._nf_cache[m] = result
        return result

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Canonical representative of ``p`` modulo the relation ideal."""
        out: Polynomial = {}
        for m, c in p.items():
            out = add(out, scale(self._reduce_monomial(m), c))
        return out

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        """Ring product: multiply then reduce to normal form."""
        return self.normal_form(mul_raw(a, b))

    def is_normal(self, p: Polynomial) -> bool:
        return all(
            m[i] < d for m in p for i, d in self.lead_exponent.items()
        )

    def standard_basis(self, degree: int) -> list[Monomial]:
        """All normal-form monomials of the given (even) cohomological degree."""
        if degree < 0 or degree % 2:
            raise ValueError("degree must be an even non-negative integer")
        half = degree // 2
        out: list[Monomial] = []

        def rec(index: int, remaining: int, prefix: tuple[int, ...]) -> None:
            if index == self.nvars:
                if remaining == 0:
                    out.append(prefix)
                return
            cap = self.max_exponent(index)
            top = remaining if cap is None else min(cap, remaining)
            for e in range(top + 1):
                rec(index + 1, remaining - e, prefix + (e,))

        rec(0, half, ())
        out.sort(key=term_sort_key)
        return out

    def graded_basis(
        self, degree: int, custom: Sequence[Monomial] | None = None
    ) -> list[Monomial]:
        """Basis of the degree-``degree`` graded piece.

        With ``custom=None`` this is the standard-monomial basis.  A custom
        list of monomials is returned unchanged once it is verified to be a
        basis: right cardinality, right degree, and full rank when its normal
        forms are expanded over the standard monomials.
        """
        standard = self.standard_basis(degree)
        if custom is None:
            return standard
        custom = [tuple(m) for m in custom]
        for m in custom:
            if len(m) != self.nvars:
                raise CustomBasisNotABasis(f"monomial {m} has wrong arity")
            if 2 * sum(m) != degree:
                raise CustomBasisNotABasis(
                    f"monomial {m} has degree {2 * sum(m)}, expected {degree}"
                )
        if len(custom) != len(standard):
            raise CustomBasisNotABasis(
                f"{len(custom)} monomials given but the degree-{degree} piece "
                f"has dimension {len(standard)}"
            )
        index = {m: k for k, m in enumerate(standard)}
        rows = []
        for m in custom:
            nf = self._reduce_monomial(m)
            row = [ZERO] * len(standard)
            for mm, c in nf.items():
                row[index[mm]] = c
            rows.append(row)
        from .linalg import ExactMatrix

        if ExactMatrix(rows).rank() != len(standard):
            raise CustomBasisNotABasis("monomials are linearly dependent in the quotient")
        return list(custom)


def normal_form(p: Polynomial, ring: QuotientRing) -> Polynomial:
    return ring.normal_form(p)


def ring_product(a: Polynomial, b: Polynomial, ring: QuotientRing) -> Polynomial:
    return ring.mul(a, b)


def graded_basis(
    ring: QuotientRing, degree: int, custom: Sequence[Monomial] | None = None
) -> list[Monomial]:
    return ring.graded_basis(degree, custom)
