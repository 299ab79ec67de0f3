"""Simplicial complexes from agent overlaps or explicit facet lists.

A complex stores, per dimension, the lexicographically sorted tuples of
vertex indices. For overlap complexes the index order is the agent order
of the system, which fixes every orientation downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from urprior.credence import AgentSystem
from urprior.numerics import Matrix

Simplex = tuple[int, ...]

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "build_overlap_complex",
    "coboundary_matrix",
    "connected_components",
    "from_facets",
]


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex on labeled, ordered vertices."""

    vertices: tuple[str, ...]
    by_dim: tuple[tuple[Simplex, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "by_dim", tuple(tuple(level) for level in self.by_dim))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        n = len(self.vertices)
        for k, level in enumerate(self.by_dim):
            for s in level:
                if len(s) != k + 1:
                    raise ValueError(f"{s} listed at dimension {k}")
                if any(not isinstance(i, int) or not 0 <= i < n for i in s):
                    raise ValueError(f"simplex {s} uses an invalid vertex index")
                if any(s[a] >= s[a + 1] for a in range(len(s) - 1)):
                    raise ValueError(f"simplex {s} is not strictly increasing")
            if list(level) != sorted(set(level)):
                raise ValueError(f"dimension {k} is not in canonical sorted order")
        if self.by_dim:
            if set(self.by_dim[0]) != {(i,) for i in range(n)}:
                raise ValueError("every vertex must appear as a 0-simplex")
            if not self.by_dim[-1]:
                raise ValueError("trailing empty dimension; trim before constructing")
        elif n:
            raise ValueError("every vertex must appear as a 0-simplex")
        for k in range(1, len(self.by_dim)):
            lower = set(self.by_dim[k - 1])
            for s in self.by_dim[k]:
                for face in combinations(s, k):
                    if face not in lower:
                        raise ValueError(f"missing face {face} of {s}: complex is not closed downward")

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.by_dim):
            return self.by_dim[k]
        return ()

    def counts(self, upto: int | None = None) -> list[int]:
        """Simplex counts per dimension, zero-padded through ``upto``."""
        top = self.dim if upto is None else upto
        return [len(self.simplices(k)) for k in range(top + 1)]

    def label(self, simplex: Simplex) -> str:
        return "{" + ",".join(self.vertices[i] for i in simplex) + "}"

    def facets(self) -> list[Simplex]:
        """Maximal simplices: faces of nothing one dimension up."""
        out: list[Simplex] = []
        for k, level in enumerate(self.by_dim):
            covered: set[Simplex] = set()
            for s in self.simplices(k + 1):
                covered.update(combinations(s, k + 1))
            out.extend(s for s in level if s not in covered)
        return out


def from_facets(vertices: Sequence[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Smallest downward-closed complex containing the facets and all vertices."""
    verts = tuple(vertices)
    index = {label: i for i, label in enumerate(verts)}
    if len(index) != len(verts):
        raise ValueError("vertex labels must be unique")
    if not verts:
        return SimplicialComplex((), ())
    levels: dict[int, set[Simplex]] = {0: {(i,) for i in range(len(verts))}}
    for facet in facets:
        labels = list(facet)
        if not labels:
            raise ValueError("facets must be nonempty")
        unknown = [x for x in labels if x not in index]
        if unknown:
            raise ValueError(f"facet mentions unknown vertex {unknown[0]!r}")
        idxs = tuple(sorted({index[x] for x in labels}))
        for size in range(1, len(idxs) + 1):
            levels.setdefault(size - 1, set()).update(combinations(idxs, size))
    top = max(levels)
    by_dim = tuple(tuple(sorted(levels.get(k, set()))) for k in range(top + 1))
    return SimplicialComplex(verts, by_dim)


def build_overlap_complex(system: AgentSystem, max_dim: int | None = None) -> SimplicialComplex:
    """The complex of agent groups whose joint overlap every member weights.

    A group J is a simplex exactly when each member assigns positive mass
    to the intersection of all awareness sets of J. The family is closed
    downward (shrinking J grows the intersection), so enumeration runs
    level by level, extending a simplex only when all of its facets
    survived the previous level.
    """
    agents = system.agents
    n = len(agents)
    supports = [a.support for a in agents]
    pmfs = [a.pmf for a in agents]

    levels: list[tuple[Simplex, ...]] = [tuple((i,) for i in range(n))]
    k = 1
    while max_dim is None or k <= max_dim:
        prev = levels[k - 1]
        prev_set = set(prev)
        found: list[Simplex] = []
        for s in prev:
            shared = supports[s[0]]
            for i in s[1:]:
                shared = shared & supports[i]
            for v in range(s[-1] + 1, n):
                cand = s + (v,)
                if any(cand[:j] + cand[j + 1 :] not in prev_set for j in range(len(cand))):
                    continue
                overlap = shared & supports[v]
                if not overlap:
                    continue
                if all(sum(pmfs[i][x] for x in overlap) > 0 for i in cand):
                    found.append(cand)
        if not found:
            break
        levels.append(tuple(sorted(found)))
        k += 1
    return SimplicialComplex(system.names, tuple(levels))


def coboundary_matrix(X: SimplicialComplex, k: int) -> Matrix:
    """Matrix of the degree-k coboundary map in canonical simplex order.

    Rows are the (k+1)-simplices, columns the k-simplices; the entry
    against the face obtained by deleting vertex position j is (-1)**j.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    row_simplices = X.simplices(k + 1)
    col_simplices = X.simplices(k)
    col_index = {s: j for j, s in enumerate(col_simplices)}
    grid: list[list[Fraction]] = []
    for t in row_simplices:
        row = [Fraction(0)] * len(col_simplices)
        for j in range(len(t)):
            face = t[:j] + t[j + 1 :]
            row[col_index[face]] = Fraction(1) if j % 2 == 0 else Fraction(-1)
        grid.append(row)
    return Matrix.from_rows(grid, cols=len(col_simplices))


def connected_components(X: SimplicialComplex) -> list[tuple[int, ...]]:
    """Vertex sets of the 1-skeleton's components, each sorted, ordered by minimum."""
    parent = list(range(len(X.vertices)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in X.simplices(1):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for v in range(len(X.vertices)):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
