"""Exact rational scalars and dense rational linear algebra.

Everything in the decision path runs over arbitrary-precision fractions;
no floating point appears anywhere. Operations that admit a canonical
answer (reduced row-echelon form, kernel bases, span coefficients) are
computed deterministically so downstream reports are reproducible
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]

__all__ = [
    "Matrix",
    "Rational",
    "RrefResult",
    "Vector",
    "format_rational",
    "in_span",
    "mat_mul",
    "mat_vec",
    "nullspace_basis",
    "parse_rational",
    "rank",
    "rref",
]


def parse_rational(value: object) -> Fraction:
    """Parse an exact rational from an int or a string.

    Accepts integer strings ("3"), fraction strings ("5/8"), and decimal
    literals ("0.3", read exactly as 3/10). Floats are rejected outright:
    they carry binary rounding error and would poison exact comparisons.
    """
    if isinstance(value, bool):
        raise TypeError("cannot interpret a boolean as a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; write it as a string such as '3/10'")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot parse {type(value).__name__} as a rational")


def format_rational(value: Fraction | int) -> str:
    """Render a rational in lowest terms: '5/8', '0', '2'."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Matrix:
    """Dense matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError("entry grid does not match the declared dimensions")

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Fraction | int]], *, cols: int | None = None
    ) -> "Matrix":
        grid = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if cols is None:
            if not grid:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} against {m.cols} columns")
    return tuple(sum((a * b for a, b in zip(row, v)), start=Fraction(0)) for row in m.entries)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    grid = [
        [
            sum((a.entries[i][k] * b.entries[k][j] for k in range(a.cols)), start=Fraction(0))
            for j in range(b.cols)
        ]
        for i in range(a.rows)
    ]
    return Matrix.from_rows(grid, cols=b.cols)


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    pivot_cols: tuple[int, ...]
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form with pivot columns and rank.

    The rref of a rational matrix is unique, which makes it usable as a
    canonical form in regression tests.
    """
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        source = None
        for r in range(pivot_row, m.rows):
            if work[r][col] != 0:
                source = r
                break
        if source is None:
            continue
        work[pivot_row], work[source] = work[source], work[pivot_row]
        factor = work[pivot_row][col]
        if factor != 1:
            work[pivot_row] = [x / factor for x in work[pivot_row]]
        for r in range(m.rows):
            if r != pivot_row and work[r][col] != 0:
                scale = work[r][col]
                work[r] = [a - scale * b for a, b in zip(work[r], work[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m.rows:
            break
    return RrefResult(Matrix.from_rows(work, cols=m.cols), tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def nullspace_basis(m: Matrix) -> list[Vector]:
    """Canonical kernel basis, one vector per free column.

    Each basis vector sets its free variable to 1 and every other free
    variable to 0, so the basis is determined by the matrix alone.
    """
    result = rref(m)
    pivot_set = set(result.pivot_cols)
    basis: list[Vector] = []
    for free_col in range(m.cols):
        if free_col in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free_col] = Fraction(1)
        for row_idx, pivot_col in enumerate(result.pivot_cols):
            v[pivot_col] = -result.matrix.entries[row_idx][free_col]
        basis.append(tuple(v))
    return basis


def in_span(basis: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector | None:
    """Exact span membership test.

    Returns coefficients c with sum(c[k] * basis[k]) == target, or None
    when the target lies outside the span. When the solution is not
    unique the free coefficients are pinned to 0, so the answer is
    canonical.
    """
    n = len(target)
    for v in basis:
        if len(v) != n:
            raise ValueError("span test requires vectors of one shared length")
    k = len(basis)
    if k == 0:
        return () if all(x == 0 for x in target) else None
    augmented = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    result = rref(Matrix.from_rows(augmented, cols=k + 1))
    if k in result.pivot_cols:
        return None
    coeffs = [Fraction(0)] * k
    for row_idx, pivot_col in enumerate(result.pivot_cols):
        coeffs[pivot_col] = result.matrix.entries[row_idx][k]
    return tuple(coeffs)
