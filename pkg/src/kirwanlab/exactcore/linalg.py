"""Dense exact linear algebra over the rationals.

Everything is computed with ``Fraction`` entries: reduced row echelon form,
rank, nullspace, inverse, and affine solution spaces of linear systems.  No
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import Inconsistent, Singular

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple[Fraction, ...]


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


class ExactMatrix:
    """Immutable dense matrix over Q."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(Fraction(v) for v in row) for row in entries]
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if width == 0:
            raise ValueError("matrix needs at least one column")
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self._e = tuple(rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._e[i][j]

    def row(self, i: int) -> Vector:
        return self._e[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._e)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self._e[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._e == other._e
        )

    def __hash__(self):
        return hash(self._e)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._e)
        return f"ExactMatrix[{body}]"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def scale(self, value) -> "ExactMatrix":
        c = Fraction(value)
        return ExactMatrix([[c * v for v in row] for row in self._e])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        cols = other.transpose()._e
        return ExactMatrix(
            [[sum((a * b for a, b in zip(row, col)), ZERO) for col in cols] for row in self._e]
        )

    def mul_vector(self, v: Sequence) -> Vector:
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in self._e)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._e for v in row)

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self._e]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = ONE / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of the kernel; one vector per free column of the rref."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, c in enumerate(pivots):
                v[c] = -red.entry(r, f)
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise Singular("only square matrices can be inverted")
        n = self.rows
        aug = ExactMatrix([list(self._e[i]) + list(ExactMatrix.identity(n)._e[i]) for i in range(n)])
        red, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise Singular("matrix has no inverse over Q")
        return ExactMatrix([list(red.row(i))[n:] for i in range(n)])


@dataclass(frozen=True)
class AffineSolutionSpace:
    """All solutions of a linear system: ``particular + span(nullspace_basis)``."""

    particular: Vector
    nullspace_basis: tuple[Vector, ...]
    ambient_dim: int

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis)

    def element(self, coefficients: Sequence) -> Vector:
        coeffs = as_vector(coefficients)
        if len(coeffs) != self.dimension:
            raise ValueError("wrong number of coefficients")
        out = list(self.particular)
        for c, vec in zip(coeffs, self.nullspace_basis):
            for i, v in enumerate(vec):
                out[i] += c * v
        return tuple(out)

    def contains(self, vector: Sequence) -> bool:
        """Exact membership test of a vector in the affine space."""
        v = as_vector(vector)
        if len(v) != self.ambient_dim:
            return False
        delta = [a - b for a, b in zip(v, self.particular)]
        if not self.nullspace_basis:
            return all(d == 0 for d in delta)
        columns = ExactMatrix(
            [[vec[i] for vec in self.nullspace_basis] for i in range(self.ambient_dim)]
        )
        try:
            solve_affine(columns, delta)
        except Inconsistent:
            return False
        return True


def solve_affine(a: ExactMatrix, b: Sequence) -> AffineSolutionSpace:
    """Solve ``a x = b`` exactly, returning every solution.

    The particular solution has zeros in all free-variable positions of the
    rref.  Raises :class:`Inconsistent` when ``rank(A) < rank(A|b)``.
    """
    rhs = as_vector(b)
    if len(rhs) != a.rows:
        raise ValueError("right-hand side has wrong length")
    rows = (list(a.row(i)) + [rhs[i]] for i in range(a.rows))
    return solve_affine_rows(rows, a.cols)


def solve_affine_rows(augmented_rows: Iterable[Sequence], cols: int) -> AffineSolutionSpace:
    """Solve a system fed as augmented rows ``[coeffs..., rhs]``.

    Rows are eliminated incrementally and dependent rows are dropped on
    arrival, so heavily redundant stacked systems (many equations, small
    rank) stay cheap.
    """
    # echelon holds reduced pivot rows keyed by pivot column, kept reduced
    # against each other at all times.
    from bisect import insort

    echelon: dict[int, list[Fraction]] = {}
    pivot_order: list[int] = []
    width = cols + 1
    for raw in augmented_rows:
        row = [v if type(v) is Fraction else Fraction(v) for v in raw]
        if len(row) != width:
            raise ValueError("augmented row has wrong width")
        for c in pivot_order:
            f = row[c]
            if f:
                prow = echelon[c]
                row = [x - f * y if y else x for x, y in zip(row, prow)]
        pivot = next((c for c in range(cols) if row[c] != 0), None)
        if pivot is None:
            if row[cols] != 0:
                raise Inconsistent("system has no solution")
            continue
        inv = ONE / row[pivot]
        row = [v * inv if v else v for v in row]
        for c, prow in echelon.items():
            f = prow[pivot]
            if f:
                echelon[c] = [x - f * y if y else x for x, y in zip(prow, row)]
        echelon[pivot] = row
        insort(pivot_order, pivot)
    pivots = pivot_order
    particular = [ZERO] * cols
    for c in pivots:
        particular[c] = echelon[c][cols]
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for c in pivots:
            v[c] = -echelon[c][f]
        basis.append(tuple(v))
    return AffineSolutionSpace(
        particular=tuple(particular),
        nullspace_basis=tuple(basis),
        ambient_dim=cols,
    )


def invert(a: ExactMatrix) -> ExactMatrix:
    return a.inverse()
