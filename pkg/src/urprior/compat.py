"""The decision pipeline for a common prior.

Steps: pairwise conditional checks, overlap-mass ratios on the 1-skeleton,
a spanning-forest scaling solution, gluing, and verification. Every
negative answer comes with a finite certificate (a conditional
disagreement, a one-sided overlap, or a cycle whose ratio product is
not 1), and every positive answer is re-verified before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Union

from urprior.complexes import SimplicialComplex, build_overlap_complex
from urprior.credence import AgentSystem
from urprior.numerics import format_rational

__all__ = [
    "Asymmetry",
    "Certificate",
    "CompatibilityReport",
    "CycleCertificate",
    "GluingError",
    "RatioCochain",
    "UrPriorResult",
    "VerificationReport",
    "Violation",
    "decide_urprior",
    "glue_urprior",
    "pairwise_compatibility",
    "ratio_cochain",
    "solve_scaling",
    "verify_urprior",
]


@dataclass(frozen=True)
class Violation:
    """Two agents disagree on a conditional over their shared outcomes."""

    pair: tuple[str, str]
    outcome: str
    conditional_left: Fraction
    conditional_right: Fraction


@dataclass(frozen=True)
class Asymmetry:
    """A nonempty overlap that exactly one of the two agents weights positively.

    Such a pair passes the conditional check vacuously, yet no common
    prior can exist: it would have to give the overlap both zero and
    positive mass.
    """

    pair: tuple[str, str]
    overlap_mass_left: Fraction
    overlap_mass_right: Fraction


@dataclass(frozen=True)
class CycleCertificate:
    """A closed cycle of agents whose edge-ratio product is not 1.

    The cycle starts at its smallest vertex and is traversed in the
    recorded order; ``holonomy`` is the product of overlap-mass ratios
    along that traversal and ``breaking_edge`` is the non-tree edge whose
    check failed.
    """

    cycle: tuple[str, ...]
    holonomy: Fraction
    breaking_edge: tuple[str, str]


Certificate = Union[Violation, Asymmetry, CycleCertificate]


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    violations: tuple[Violation, ...]
    asymmetries: tuple[Asymmetry, ...]


@dataclass(frozen=True)
class RatioCochain:
    """Multiplicative cochain of overlap-mass ratios on the 1-skeleton."""

    complex: SimplicialComplex
    ratios: Mapping[tuple[int, int], Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ratios", {e: Fraction(v) for e, v in self.ratios.items()})
        if set(self.ratios) != set(self.complex.simplices(1)):
            raise ValueError("ratios must cover exactly the edges of the complex")
        if any(v <= 0 for v in self.ratios.values()):
            raise ValueError("edge ratios must be strictly positive")


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    diagnostics: tuple[str, ...]


@dataclass(frozen=True)
class UrPriorResult:
    """Outcome of the decision: verdict, measure when it exists, certificate when not."""

    verdict: str
    measure: Mapping[str, Fraction] | None
    certificate: Certificate | None


class GluingError(RuntimeError):
    """Internal invariant failure while assembling the glued measure."""


def pairwise_compatibility(system: AgentSystem) -> CompatibilityReport:
    """Check every pair of agents on their shared outcomes.

    A pair is tested only when both sides give the overlap positive mass;
    conditionals are compared by cross-multiplication, so the test is
    exact. A pair where exactly one side weights the overlap is recorded
    as an asymmetry instead. The witness outcome of a violation is the
    alphabetically first failing one.
    """
    violations: list[Violation] = []
    asymmetries: list[Asymmetry] = []
    for left, right in combinations(system.agents, 2):
        shared = left.support & right.support
        if not shared:
            continue
        mass_left = left.mass(shared)
        mass_right = right.mass(shared)
        if mass_left > 0 and mass_right > 0:
            for x in sorted(shared):
                if left.pmf[x] * mass_right != right.pmf[x] * mass_left:
                    violations.append(
                        Violation(
                            (left.name, right.name),
                            x,
                            left.pmf[x] / mass_left,
                            right.pmf[x] / mass_right,
                        )
                    )
                    break
        elif mass_left > 0 or mass_right > 0:
            asymmetries.append(Asymmetry((left.name, right.name), mass_left, mass_right))
    return CompatibilityReport(not violations, tuple(violations), tuple(asymmetries))


def ratio_cochain(system: AgentSystem, X: SimplicialComplex) -> RatioCochain:
    """Edge ratios r[i,j] = mass_i(overlap) / mass_j(overlap).

    ``X`` must be (a truncation of) the system's overlap complex, which is
    exactly what guarantees both masses on every edge are positive.
    """
    agents = system.agents
    ratios: dict[tuple[int, int], Fraction] = {}
    for i, j in X.simplices(1):
        shared = agents[i].support & agents[j].support
        mass_i = agents[i].mass(shared)
        mass_j = agents[j].mass(shared)
        if mass_i <= 0 or mass_j <= 0:
            raise ValueError(
                f"edge {X.label((i, j))} lacks a two-sided positive overlap; "
                "X is not this system's overlap complex"
            )
        ratios[(i, j)] = mass_i / mass_j
    return RatioCochain(X, ratios)


def solve_scaling(
    X: SimplicialComplex, ratios: RatioCochain
) -> tuple[dict[str, Fraction] | None, CycleCertificate | None]:
    """Find positive per-vertex scales with ratio[i,j] == scale[j] / scale[i].

    Builds a spanning forest by scanning edges in canonical order,
    propagates scale 1 outward from the smallest vertex of each
    component, then verifies every non-tree edge. Exactly one element of
    the returned pair is not None: the scaling (keyed by vertex label) on
    success, a cycle certificate for the first failing edge otherwise.
    """
    n = len(X.vertices)
    table = ratios.ratios

    def step(u: int, v: int) -> Fraction:
        return table[(u, v)] if u < v else 1 / table[(v, u)]

    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
    non_tree: list[tuple[int, int]] = []
    for i, j in X.simplices(1):
        ri, rj = find(i), find(j)
        if ri == rj:
            non_tree.append((i, j))
        else:
            parent[rj] = ri
            adjacency[i].append(j)
            adjacency[j].append(i)

    scale: dict[int, Fraction] = {}
    tree_parent: dict[int, int] = {}
    for root in range(n):
        if root in scale:
            continue
        scale[root] = Fraction(1)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(adjacency[u]):
                if v not in scale:
                    scale[v] = scale[u] * step(u, v)
                    tree_parent[v] = u
                    queue.append(v)

    for i, j in non_tree:
        if scale[i] * step(i, j) == scale[j]:
            continue
        path = _forest_path(j, i, tree_parent)
        cycle = [i, j] + path[1:-1]
        start = cycle.index(min(cycle))
        cycle = cycle[start:] + cycle[:start]
        holonomy = Fraction(1)
        for u, v in zip(cycle, cycle[1:] + [cycle[0]]):
            holonomy *= step(u, v)
        labels = tuple(X.vertices[v] for v in cycle)
        return None, CycleCertificate(labels, holonomy, (X.vertices[i], X.vertices[j]))

    return {X.vertices[v]: scale[v] for v in range(n)}, None


def _forest_path(a: int, b: int, tree_parent: dict[int, int]) -> list[int]:
    """Vertex path from a to b inside the spanning forest (inclusive)."""

    def chain(v: int) -> list[int]:
        out = [v]
        while out[-1] in tree_parent:
            out.append(tree_parent[out[-1]])
        return out

    up_a = chain(a)
    up_b = chain(b)
    positions = {v: idx for idx, v in enumerate(up_a)}
    meet_b = next(idx for idx, v in enumerate(up_b) if v in positions)
    meet_a = positions[up_b[meet_b]]
    return up_a[: meet_a + 1] + list(reversed(up_b[:meet_b]))


def glue_urprior(system: AgentSystem, scaling: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """Rescale each agent by its factor, merge, and normalize to total 1.

    Under the pipeline's preconditions (pairwise compatible, no overlap
    asymmetry, scaling solved) the rescaled masses agree wherever
    awareness sets meet. A disagreement means an internal invariant
    broke, so it raises GluingError rather than guessing.
    """
    merged: dict[str, Fraction] = {}
    first_source: dict[str, str] = {}
    for agent in system.agents:
        factor = scaling.get(agent.name)
        if factor is None or factor <= 0:
            raise ValueError(f"scaling must assign a positive factor to agent {agent.name}")
        for outcome, p in agent.pmf.items():
            mass = factor * p
            if outcome in merged:
                if merged[outcome] != mass:
                    raise GluingError(
                        f"agents {first_source[outcome]} and {agent.name} assign different "
                        f"rescaled masses to {outcome!r}"
                    )
            else:
                merged[outcome] = mass
                first_source[outcome] = agent.name
    total = sum(merged.values(), start=Fraction(0))
    if total <= 0:
        raise GluingError("glued measure has zero total mass")
    return {x: merged[x] / total for x in system.space.outcomes if x in merged}


def verify_urprior(system: AgentSystem, measure: Mapping[str, Fraction]) -> VerificationReport:
    """Exact check that conditioning the measure recovers every agent.

    Verifies nonnegativity, total mass 1, no mass outside the union of
    awareness sets, and for every agent a positive sector mass with
    measure(x) == pmf(x) * sector for each aware outcome. One diagnostic
    line per agent.
    """
    diagnostics: list[str] = []
    ok = True
    values = {x: Fraction(v) for x, v in measure.items()}

    negatives = sorted(x for x, v in values.items() if v < 0)
    if negatives:
        ok = False
        diagnostics.append(f"negative mass on {negatives[0]!r}")
    total = sum(values.values(), start=Fraction(0))
    if total != 1:
        ok = False
        diagnostics.append(f"total mass is {format_rational(total)}, not 1")
    union = system.union_support()
    stray = sorted(x for x, v in values.items() if v != 0 and x not in union)
    if stray:
        ok = False
        diagnostics.append(f"positive mass outside every awareness set: {stray}")

    for agent in system.agents:
        sector = sum((values.get(x, Fraction(0)) for x in agent.support), start=Fraction(0))
        if sector == 0:
            ok = False
            diagnostics.append(f"agent {agent.name}: awareness set carries zero mass")
            continue
        bad = None
        for x in sorted(agent.support):
            if values.get(x, Fraction(0)) != agent.pmf[x] * sector:
                bad = x
                break
        if bad is None:
            diagnostics.append(f"agent {agent.name}: ok")
        else:
            ok = False
            got = values.get(bad, Fraction(0)) / sector
            diagnostics.append(
                f"agent {agent.name}: conditional of {bad!r} is {format_rational(got)}, "
                f"expected {format_rational(agent.pmf[bad])}"
            )
    return VerificationReport(ok, tuple(diagnostics))


def decide_urprior(system: AgentSystem) -> UrPriorResult:
    """Decide whether a common prior exists, constructively.

    Obstructions are checked in order: a pairwise conditional violation,
    then a one-sided overlap, then an inconsistent ratio cycle. Each is a
    genuine blocker on its own. When none fires, the scaled credences
    glue into a measure, which is verified exactly before being returned.
    """
    report = pairwise_compatibility(system)
    if report.violations:
        return UrPriorResult("none", None, report.violations[0])
    if report.asymmetries:
        return UrPriorResult("none", None, report.asymmetries[0])
    skeleton = build_overlap_complex(system, max_dim=1)
    scaling, cycle = solve_scaling(skeleton, ratio_cochain(system, skeleton))
    if cycle is not None:
        return UrPriorResult("none", None, cycle)
    assert scaling is not None
    measure = glue_urprior(system, scaling)
    check = verify_urprior(system, measure)
    if not check.ok:
        raise GluingError("glued measure failed verification: " + "; ".join(check.diagnostics))
    return UrPriorResult("exists", measure, None)
