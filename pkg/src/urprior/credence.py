"""Outcome spaces, per-agent credence functions, and validated systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from urprior.numerics import format_rational, parse_rational

__all__ = [
    "AgentSystem",
    "CredenceFunction",
    "OutcomeSpace",
    "ValidationError",
    "overlap_mass",
    "validate",
]


class ValidationError(ValueError):
    """A raw system description broke one or more structural rules."""

    def __init__(self, violations: Iterable[str]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class OutcomeSpace:
    """Finite set of outcome labels with a fixed presentation order."""

    outcomes: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        if len(set(self.outcomes)) != len(self.outcomes):
            raise ValueError("outcome labels must be unique")


@dataclass(frozen=True)
class CredenceFunction:
    """One agent's probability mass function on its awareness set.

    The key set of ``pmf`` is the awareness set. An outcome carried with
    mass zero is awareness without weight, which is different from the
    outcome being absent.
    """

    name: str
    pmf: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pmf", dict(self.pmf))
        if not self.pmf:
            raise ValueError(f"agent {self.name}: awareness set is empty")
        if any(v < 0 for v in self.pmf.values()):
            raise ValueError(f"agent {self.name}: negative mass")
        if sum(self.pmf.values()) != 1:
            raise ValueError(f"agent {self.name}: masses must sum to exactly 1")

    @property
    def support(self) -> frozenset[str]:
        """Awareness set: all pmf keys, zero-mass outcomes included."""
        return frozenset(self.pmf)

    def mass(self, event: Iterable[str]) -> Fraction:
        """Exact mass of an event, restricted to the awareness set."""
        return sum((self.pmf[x] for x in event if x in self.pmf), start=Fraction(0))


@dataclass(frozen=True)
class AgentSystem:
    """Validated collection of agents over a shared outcome space.

    The order of ``agents`` induces the total order used for simplex
    orientations downstream, so it is part of the system's identity.
    """

    space: OutcomeSpace
    agents: tuple[CredenceFunction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "agents", tuple(self.agents))
        if not self.agents:
            raise ValueError("a system needs at least one agent")
        names = [a.name for a in self.agents]
        if len(set(names)) != len(names):
            raise ValueError("agent names must be unique")
        known = set(self.space.outcomes)
        for agent in self.agents:
            stray = agent.support - known
            if stray:
                raise ValueError(f"agent {agent.name}: unknown outcomes {sorted(stray)}")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.agents)

    def agent(self, name: str) -> CredenceFunction:
        for a in self.agents:
            if a.name == name:
                return a
        raise KeyError(f"no agent named {name!r}")

    def union_support(self) -> frozenset[str]:
        out: set[str] = set()
        for a in self.agents:
            out |= a.support
        return frozenset(out)


def validate(raw: object) -> AgentSystem:
    """Check a raw (JSON-shaped) description and build the system.

    All structural violations are collected into a single
    ValidationError so the caller sees every problem at once, each line
    naming the agent, the outcome involved, and the rule broken.
    """
    if not isinstance(raw, Mapping):
        raise ValidationError(["system description must be a JSON object"])
    violations: list[str] = []

    outcomes_raw = raw.get("outcomes")
    outcomes: list[str] = []
    if not isinstance(outcomes_raw, (list, tuple)):
        violations.append("'outcomes' must be a list of labels")
    else:
        seen: set[str] = set()
        for x in outcomes_raw:
            if not isinstance(x, str):
                violations.append(f"outcome label {x!r} is not a string")
            elif x in seen:
                violations.append(f"duplicate outcome label {x!r}")
            else:
                seen.add(x)
                outcomes.append(x)

    agents_raw = raw.get("agents")
    if not isinstance(agents_raw, (list, tuple)) or not agents_raw:
        violations.append("'agents' must be a nonempty list")
        agents_raw = []

    agents: list[CredenceFunction] = []
    seen_names: set[str] = set()
    known = set(outcomes)
    for position, entry in enumerate(agents_raw):
        if not isinstance(entry, Mapping):
            violations.append(f"agent #{position}: entry must be an object")
            continue
        name = entry.get("name")
        if not isinstance(name, str) or not name:
            violations.append(f"agent #{position}: missing or invalid name")
            continue
        if name in seen_names:
            violations.append(f"duplicate agent name {name!r}")
            continue
        seen_names.add(name)
        table = entry.get("credence")
        if not isinstance(table, Mapping) or not table:
            violations.append(f"agent {name}: 'credence' must be a nonempty mapping")
            continue
        pmf: dict[str, Fraction] = {}
        ok = True
        total = Fraction(0)
        for outcome, value in table.items():
            if outcome not in known:
                violations.append(f"agent {name}: outcome {outcome!r} is not in the outcome space")
                ok = False
                continue
            try:
                q = parse_rational(value)
            except (TypeError, ValueError) as exc:
                violations.append(f"agent {name}: outcome {outcome!r}: {exc}")
                ok = False
                continue
            if q < 0:
                violations.append(
                    f"agent {name}: outcome {outcome!r} has negative mass {format_rational(q)}"
                )
                ok = False
                continue
            pmf[outcome] = q
            total += q
        if ok and total != 1:
            violations.append(f"pmf sum != 1 for agent {name} (sum {format_rational(total)})")
            ok = False
        if ok:
            agents.append(CredenceFunction(name, pmf))

    if violations:
        raise ValidationError(violations)
    return AgentSystem(OutcomeSpace(tuple(outcomes)), tuple(agents))


def overlap_mass(system: AgentSystem, agent_name: str, group: Iterable[str]) -> Fraction:
    """Mass one agent assigns to the joint overlap of a group of agents.

    ``agent_name`` must belong to ``group``, and every group member must
    name an agent of the system.
    """
    members = list(group)
    known = set(system.names)
    unknown = sorted(m for m in members if m not in known)
    if unknown:
        raise ValueError(f"unknown agent name(s): {unknown}")
    if agent_name not in members:
        raise ValueError(f"agent {agent_name!r} is not a member of the group")
    overlap: frozenset[str] | None = None
    for member in members:
        support = system.agent(member).support
        overlap = support if overlap is None else overlap & support
    return system.agent(agent_name).mass(overlap or ())
