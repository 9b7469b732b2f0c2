"""Biinvariant diagonal classes via common pseudoinverses of pairing matrices.

For each even degree q and each chamber of regular values there is a pairing
matrix A (shape d_q x d_{2m-2-q}) of quotient integrals of products of basis
classes.  A degree-(2m-2) class with coefficient blocks B^q is a diagonal
class at a chamber exactly when ``A (B^q)^t A = A`` for every q, i.e. when
``(B^q)^t`` is a pseudoinverse of A.  Classes that work at every chamber form
an affine space, computed here degree by degree from the stacked linear
systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import BasisMismatch, WrongDegree
from .exactcore import (
    AffineSolutionSpace,
    ExactMatrix,
    Monomial,
    Polynomial,
    add,
    homogeneous_exponent_sum,
    monomial,
    mul_raw,
    scale,
    solve_affine_rows,
)
from .hamspace import Chamber, ManifoldSpec, chambers, ring_for
from .kalkman import integrate
from .runtime import ordered_map

ZERO = Fraction(0)


@dataclass(frozen=True)
class PairingMatrix:
    q: int
    chamber: Chamber
    row_basis: tuple[Monomial, ...]
    col_basis: tuple[Monomial, ...]
    matrix: ExactMatrix


def even_degrees(spec: ManifoldSpec) -> list[int]:
    return list(range(0, 2 * spec.m - 1, 2))


def bases_for(
    spec: ManifoldSpec, custom: dict[int, Sequence[Monomial]] | None = None
) -> dict[int, list[Monomial]]:
    """Validated basis of every even graded piece up to degree 2m-2.

    ``custom`` may override individual degrees; overrides are rank-checked.
    """
    ring = ring_for(spec)
    custom = custom or {}
    out: dict[int, list[Monomial]] = {}
    for q in even_degrees(spec):
        out[q] = ring.graded_basis(q, custom.get(q))
    return out


@lru_cache(maxsize=4096)
def _pairing_entries(
    spec: ManifoldSpec,
    rep: Fraction,
    row_basis: tuple[Monomial, ...],
    col_basis: tuple[Monomial, ...],
) -> ExactMatrix:
    ring = ring_for(spec)
    entries = []
    for ei in row_basis:
        row = []
        for ej in col_basis:
            product = ring.normal_form(mul_raw(monomial(ei), monomial(ej)))
            row.append(integrate(product, rep, spec))
        entries.append(row)
    return ExactMatrix(entries)


def pairing_matrix(
    spec: ManifoldSpec,
    q: int,
    chamber: Chamber,
    bases: dict[int, Sequence[Monomial]] | None = None,
) -> PairingMatrix:
    """Matrix of quotient integrals of products of complementary-degree basis classes."""
    top = 2 * spec.m - 2
    if q % 2 or not 0 <= q <= top:
        raise WrongDegree(f"q must be even with 0 <= q <= {top}")
    all_bases = bases_for(spec) if bases is None else {k: list(v) for k, v in bases.items()}
    row_basis = tuple(tuple(m) for m in all_bases[q])
    col_basis = tuple(tuple(m) for m in all_bases[top - q])
    return PairingMatrix(
        q=q,
        chamber=chamber,
        row_basis=row_basis,
        col_basis=col_basis,
        matrix=_pairing_entries(spec, chamber.representative, row_basis, col_basis),
    )


def solve_common_pseudoinverse(matrices: Sequence[ExactMatrix]) -> AffineSolutionSpace:
    """All X with ``A X A = A`` for every matrix A in the list.

    The unknown X is the *transposed* coefficient block (s x r for r x s
    inputs) and is vectorized row-major, so the result's vectors reshape to X
    with ``reshape(vec, s, r)``; the block itself is ``X^t``.  Raises
    :class:`Inconsistent` when no common pseudoinverse exists (possible for
    arbitrary inputs, never for chamber pairing matrices).
    """
    if not matrices:
        raise ValueError("need at least one matrix")
    r, s = matrices[0].rows, matrices[0].cols
    if any(a.rows != r or a.cols != s for a in matrices):
        raise ValueError("matrices must share one shape")
    unknowns = s * r

    def rows():
        for a in matrices:
            for k in range(r):
                for l in range(s):
                    row = [ZERO] * (unknowns + 1)
                    for i in range(s):
                        aki = a.entry(k, i)
                        if aki == 0:
                            continue
                        for j in range(r):
                            c = aki * a.entry(j, l)
                            if c != 0:
                                row[i * r + j] += c
                    row[unknowns] = a.entry(k, l)
                    yield row

    return solve_affine_rows(rows(), unknowns)


def reshape(vec: Sequence[Fraction], rows: int, cols: int) -> ExactMatrix:
    """Row-major reshape of a vector into a matrix."""
    if len(vec) != rows * cols:
        raise ValueError("length mismatch")
    return ExactMatrix([[vec[i * cols + j] for j in range(cols)] for i in range(rows)])


def block_from_solution(vec: Sequence[Fraction], rows: int, cols: int) -> ExactMatrix:
    """Coefficient block B (rows x cols) from a solver vector for X = B^t."""
    return reshape(vec, cols, rows).transpose()


@dataclass(frozen=True)
class BdcClass:
    """Coefficient blocks of a degree-(2m-2) class of the doubled space.

    ``blocks[q]`` is the d_q x d_{2m-2-q} matrix of coefficients over
    ``bases[q] (x) bases[2m-2-q]``.
    """

    m: int
    bases: dict[int, tuple[Monomial, ...]]
    blocks: dict[int, ExactMatrix]

    def block(self, q: int) -> ExactMatrix:
        return self.blocks[q]


@dataclass(frozen=True)
class BdcFamily:
    """Affine space of global diagonal classes, solved degree by degree."""

    spec: ManifoldSpec
    bases: dict[int, tuple[Monomial, ...]]
    spaces: dict[int, AffineSolutionSpace]

    @property
    def per_degree_dimension(self) -> dict[int, int]:
        return {q: s.dimension for q, s in self.spaces.items()}

    @property
    def total_dimension(self) -> int:
        return sum(s.dimension for s in self.spaces.values())

    def representative(self) -> BdcClass:
        top = 2 * self.spec.m - 2
        blocks = {}
        for q, space in self.spaces.items():
            rows = len(self.bases[q])
            cols = len(self.bases[top - q])
            blocks[q] = block_from_solution(space.particular, rows, cols)
        return BdcClass(m=self.spec.m, bases=self.bases, blocks=blocks)

    def member(self, coefficients: dict[int, Sequence[Fraction]]) -> BdcClass:
        top = 2 * self.spec.m - 2
        blocks = {}
        for q, space in self.spaces.items():
            vec = space.element(coefficients.get(q, [0] * space.dimension))
            blocks[q] = block_from_solution(vec, len(self.bases[q]), len(self.bases[top - q]))
        return BdcClass(m=self.spec.m, bases=self.bases, blocks=blocks)

    def contains_block(self, q: int, block: ExactMatrix) -> bool:
        vec = [v for row in block.transpose().to_lists() for v in row]
        return self.spaces[q].contains(vec)


def global_bdc(
    spec: ManifoldSpec,
    custom_bases: dict[int, Sequence[Monomial]] | None = None,
    chamber_subset: Sequence[Chamber] | None = None,
) -> BdcFamily:
    """Affine family of classes diagonal at every requested chamber.

    Each even degree is solved independently; existence at all chambers is a
    guarantee for pairing matrices, so the solver never reports inconsistency
    here (asserted by the test suite rather than handled).
    """
    chamber_list = list(chamber_subset) if chamber_subset is not None else chambers(spec)
    bases = bases_for(spec, custom_bases)
    spaces: dict[int, AffineSolutionSpace] = {}
    for q in even_degrees(spec):
        mats = ordered_map(
            lambda ch: pairing_matrix(spec, q, ch, bases).matrix, chamber_list
        )
        spaces[q] = solve_common_pseudoinverse(mats)
    frozen = {q: tuple(b) for q, b in bases.items()}
    return BdcFamily(spec=spec, bases=frozen, spaces=spaces)


def _validate_class(beta: BdcClass, spec: ManifoldSpec) -> None:
    top = 2 * spec.m - 2
    if beta.m != spec.m:
        raise BasisMismatch("class was built for a different dimension")
    ring = ring_for(spec)
    for q, basis in beta.bases.items():
        if q % 2 or not 0 <= q <= top:
            raise BasisMismatch(f"bad degree {q}")
        for mono in basis:
            if len(mono) != ring.nvars:
                raise BasisMismatch("basis monomial arity does not match the ring")
            if 2 * sum(mono) != q:
                raise BasisMismatch(f"basis monomial of wrong degree in block {q}")
    for q, block in beta.blocks.items():
        if q not in beta.bases or top - q not in beta.bases:
            raise BasisMismatch(f"missing basis for block {q}")
        if block.rows != len(beta.bases[q]) or block.cols != len(beta.bases[top - q]):
            raise BasisMismatch(f"block {q} shape does not match its bases")


def is_bdc(beta: BdcClass, spec: ManifoldSpec, chamber: Chamber) -> bool:
    """Whether every degree block satisfies ``A (B^q)^t A = A`` at the chamber.

    Degrees absent from the class count as zero blocks, which fail unless the
    pairing matrix itself vanishes.
    """
    _validate_class(beta, spec)
    ring = ring_for(spec)
    top = 2 * spec.m - 2
    for q in even_degrees(spec):
        row_basis = list(beta.bases.get(q, ring.standard_basis(q)))
        col_basis = list(beta.bases.get(top - q, ring.standard_basis(top - q)))
        a = pairing_matrix(
            spec, q, chamber, {q: row_basis, top - q: col_basis}
        ).matrix
        block = beta.blocks.get(q)
        if block is None:
            block = ExactMatrix.zeros(len(row_basis), len(col_basis))
        if a @ block.transpose() @ a != a:
            return False
    return True


def apply_right_inverse(
    beta: BdcClass, alpha: Polynomial, spec: ManifoldSpec, chamber: Chamber
) -> Polynomial:
    """Right inverse of the quotient restriction induced by a diagonal class.

    For ``alpha`` homogeneous of even degree p, pairs ``alpha`` against the
    left legs of the degree-(2m-2-p) block and returns the matching
    combination of right-leg basis classes, a degree-p class whose quotient
    pairings agree with alpha's.
    """
    top = 2 * spec.m - 2
    if alpha:
        s = homogeneous_exponent_sum(alpha)
        if s is None:
            raise WrongDegree("class must be homogeneous")
        p = 2 * s
    else:
        p = 0
    if p % 2 or p > top:
        raise WrongDegree(f"degree must be even and at most {top}")
    _validate_class(beta, spec)
    q = top - p
    block = beta.blocks.get(q)
    if block is None:
        return {}
    eps = beta.bases[q]
    eta = beta.bases[p]
    ring = ring_for(spec)
    out: Polynomial = {}
    for i, e_i in enumerate(eps):
        paired = integrate(
            ring.normal_form(mul_raw(alpha, monomial(e_i))), chamber.representative, spec
        )
        if paired == 0:
            continue
        for j, h_j in enumerate(eta):
            c = block.entry(i, j)
            if c != 0:
                out = add(out, scale(monomial(h_j), c * paired))
    return out
