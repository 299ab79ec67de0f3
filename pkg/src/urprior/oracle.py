"""Independent feasibility check for a common prior.

This path never looks at overlap complexes, cochains, or scaling
solutions: it treats the problem as plain linear feasibility in the
sector masses and propagates constraints through the graph of outcomes
that two agents both weight positively. It exists to cross-check the
main pipeline, so it deliberately shares nothing with it beyond the data
model and exact rational arithmetic.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from urprior.credence import AgentSystem

__all__ = ["feasibility_oracle"]


def feasibility_oracle(system: AgentSystem) -> dict[str, Fraction] | None:
    """A measure whose conditionals recover every agent, or None.

    The unknowns are the sector masses s_i (the total the measure must
    give agent i's awareness set): any valid measure satisfies
    measure(x) == pmf_i(x) * s_i wherever agent i is aware of x. Two
    agents giving the same outcome positive mass therefore pin the ratio
    of their sector masses; propagating those links fixes every sector up
    to one scale per linkage class, and a single global normalization
    settles the scales. Every defining constraint is re-checked on the
    candidate before it is returned, so the oracle is sound on its own.
    """
    agents = system.agents
    n = len(agents)
    union = [x for x in system.space.outcomes if any(x in a.pmf for a in agents)]

    # An outcome one agent rules out and another weights positively is an
    # immediate contradiction: the measure would need to be 0 and > 0.
    positive_at: dict[str, list[int]] = {}
    for x in union:
        aware = [(i, agents[i].pmf[x]) for i in range(n) if x in agents[i].pmf]
        positives = [i for i, m in aware if m > 0]
        if positives and len(positives) != len(aware):
            return None
        positive_at[x] = positives

    links: list[tuple[int, int, Fraction]] = []  # s_j == s_i * ratio
    adjacency: dict[int, list[tuple[int, Fraction]]] = {i: [] for i in range(n)}
    for x in union:
        positives = positive_at[x]
        for a in range(len(positives)):
            for b in range(a + 1, len(positives)):
                i, j = positives[a], positives[b]
                ratio = agents[i].pmf[x] / agents[j].pmf[x]
                links.append((i, j, ratio))
                adjacency[i].append((j, ratio))
                adjacency[j].append((i, 1 / ratio))

    sector: dict[int, Fraction] = {}
    for root in range(n):
        if root in sector:
            continue
        sector[root] = Fraction(1)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, ratio in adjacency[u]:
                if v not in sector:
                    sector[v] = sector[u] * ratio
                    queue.append(v)
    for i, j, ratio in links:
        if sector[j] != sector[i] * ratio:
            return None

    raw: dict[str, Fraction] = {}
    for x in union:
        positives = positive_at[x]
        raw[x] = agents[positives[0]].pmf[x] * sector[positives[0]] if positives else Fraction(0)
    total = sum(raw.values(), start=Fraction(0))
    if total <= 0:
        return None
    candidate = {x: raw[x] / total for x in union}

    # Full direct re-check of the constraints that define feasibility.
    for agent in agents:
        s = sum((candidate[x] for x in union if x in agent.pmf), start=Fraction(0))
        if s <= 0:
            return None
        for x in agent.pmf:
            if candidate[x] != agent.pmf[x] * s:
                return None
    return candidate
