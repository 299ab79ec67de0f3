"""Cochains, cocycle and coboundary tests, and rational cohomology dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

from urprior.complexes import Simplex, SimplicialComplex, coboundary_matrix
from urprior.numerics import in_span, mat_vec, nullspace_basis
from urprior.numerics import rank as matrix_rank

__all__ = [
    "Cochain",
    "coboundary",
    "coboundary_dim",
    "coboundary_witness",
    "cochain_from_vector",
    "cocycle_dim",
    "cohomology_dim",
    "is_cocycle",
    "noncoboundary_cocycle",
]


@dataclass(frozen=True)
class Cochain:
    """Rational-valued function on the k-simplices of a complex."""

    complex: SimplicialComplex
    degree: int
    values: Mapping[Simplex, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", {s: Fraction(v) for s, v in self.values.items()})
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        expected = set(self.complex.simplices(self.degree))
        if set(self.values) != expected:
            raise ValueError(f"values must cover exactly the {self.degree}-simplices")

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(self.values[s] for s in self.complex.simplices(self.degree))


def cochain_from_vector(X: SimplicialComplex, degree: int, vec: Sequence[Fraction]) -> Cochain:
    simplices = X.simplices(degree)
    if len(vec) != len(simplices):
        raise ValueError(f"expected {len(simplices)} values for degree {degree}, got {len(vec)}")
    return Cochain(X, degree, dict(zip(simplices, (Fraction(v) for v in vec))))


def coboundary(c: Cochain) -> Cochain:
    """Apply the degree-c coboundary map, yielding a cochain one degree up."""
    m = coboundary_matrix(c.complex, c.degree)
    return cochain_from_vector(c.complex, c.degree + 1, mat_vec(m, c.vector()))


def is_cocycle(c: Cochain) -> bool:
    return all(v == 0 for v in mat_vec(coboundary_matrix(c.complex, c.degree), c.vector()))


def coboundary_witness(c: Cochain) -> Cochain | None:
    """A degree k-1 cochain whose coboundary equals c, if one exists.

    The witness is canonical up to nothing: the span solver pins all free
    coefficients to zero.
    """
    if c.degree < 1:
        raise ValueError("a coboundary witness needs degree >= 1")
    below = coboundary_matrix(c.complex, c.degree - 1)
    coefficients = in_span(below.columns(), c.vector())
    if coefficients is None:
        return None
    return cochain_from_vector(c.complex, c.degree - 1, coefficients)


def cocycle_dim(X: SimplicialComplex, k: int) -> int:
    """Dimension of the space of k-cocycles (kernel of the degree-k map)."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return len(X.simplices(k)) - matrix_rank(coboundary_matrix(X, k))


def coboundary_dim(X: SimplicialComplex, k: int) -> int:
    """Dimension of the space of k-coboundaries (image of the degree k-1 map)."""
    if k < 1:
        raise ValueError("coboundaries start at degree 1")
    return matrix_rank(coboundary_matrix(X, k - 1))


def cohomology_dim(X: SimplicialComplex, k: int) -> int:
    """dim H^k over the rationals. Degree 0 is out of scope here."""
    if k < 1:
        raise ValueError("cohomology_dim supports k >= 1 only")
    return cocycle_dim(X, k) - coboundary_dim(X, k)


def noncoboundary_cocycle(X: SimplicialComplex) -> Cochain | None:
    """An integer 1-cocycle that is not a coboundary, or None.

    Scans the canonical kernel basis of the degree-1 map for the first
    vector outside the image of degree 0, then rescales it to coprime
    integers with a positive leading entry. Returns None exactly when
    every 1-cocycle is a coboundary.
    """
    if not X.simplices(1):
        return None
    kernel = nullspace_basis(coboundary_matrix(X, 1))
    image_columns = coboundary_matrix(X, 0).columns()
    for vec in kernel:
        if in_span(image_columns, vec) is None:
            return cochain_from_vector(X, 1, _coprime_integers(vec))
    return None


def _coprime_integers(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    denominator_lcm = lcm(*(x.denominator for x in vec))
    ints = [x * denominator_lcm for x in vec]
    common = gcd(*(abs(int(x)) for x in ints))
    scaled = [x / common for x in ints]
    lead = next((x for x in scaled if x != 0), Fraction(0))
    if lead < 0:
        scaled = [-x for x in scaled]
    return tuple(scaled)
