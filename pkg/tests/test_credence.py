from __future__ import annotations

from fractions import Fraction

import pytest

from urprior import cli
from urprior.credence import (
    AgentSystem,
    CredenceFunction,
    OutcomeSpace,
    ValidationError,
    overlap_mass,
    validate,
)


def _raw(outcomes, agents):
    return {"outcomes": list(outcomes), "agents": agents}


class TestValidate:
    def test_accepts_well_formed_input(self):
        system = validate(
            _raw(
                ["a", "b", "c"],
                [
                    {"name": "1", "credence": {"a": "1/2", "b": "1/2"}},
                    {"name": "2", "credence": {"b": "0.25", "c": "3/4"}},
                ],
            )
        )
        assert system.names == ("1", "2")
        assert system.agent("2").pmf["b"] == Fraction(1, 4)

    def test_broken_sum_reports_agent_and_total(self):
        with pytest.raises(ValidationError) as exc:
            validate(
                _raw(
                    ["a", "b"],
                    [{"name": "1", "credence": {"a": "1/2", "b": "5/8"}}],
                )
            )
        assert any("sum" in v and "1" in v and "9/8" in v for v in exc.value.violations)

    def test_collects_multiple_violations(self):
        with pytest.raises(ValidationError) as exc:
            validate(
                _raw(
                    ["a", "b"],
                    [
                        {"name": "1", "credence": {"a": "2"}},
                        {"name": "1", "credence": {"a": "1"}},
                        {"name": "2", "credence": {"zzz": "1"}},
                    ],
                )
            )
        text = "\n".join(exc.value.violations)
        assert "duplicate" in text
        assert "zzz" in text
        assert len(exc.value.violations) >= 3

    def test_negative_mass(self):
        with pytest.raises(ValidationError) as exc:
            validate(
                _raw(
                    ["a", "b"],
                    [{"name": "1", "credence": {"a": "3/2", "b": "-1/2"}}],
                )
            )
        assert any("negative" in v for v in exc.value.violations)

    def test_rejects_float_masses(self):
        with pytest.raises(ValidationError):
            validate(_raw(["a"], [{"name": "1", "credence": {"a": 1.0}}]))

    def test_rejects_duplicate_outcomes(self):
        with pytest.raises(ValidationError):
            validate(_raw(["a", "a"], [{"name": "1", "credence": {"a": "1"}}]))

    def test_rejects_missing_sections(self):
        with pytest.raises(ValidationError):
            validate({"outcomes": ["a"]})
        with pytest.raises(ValidationError):
            validate({"agents": []})
        with pytest.raises(ValidationError):
            validate([1, 2, 3])

    def test_rejects_empty_agent_list(self):
        with pytest.raises(ValidationError):
            validate(_raw(["a"], []))


class TestModel:
    def test_pmf_is_defensively_copied(self):
        pmf = {"a": Fraction(1)}
        agent = CredenceFunction("1", pmf)
        pmf["a"] = Fraction(0)
        assert agent.pmf["a"] == Fraction(1)

    def test_support_is_awareness_set(self):
        # a zero-mass key stays in the support: the agent is aware of the
        # outcome and rules it out, which is not the same as ignorance
        agent = CredenceFunction("1", {"a": Fraction(1), "b": Fraction(0)})
        assert agent.support == frozenset({"a", "b"})

    def test_mass_of_event(self):
        agent = CredenceFunction("1", {"a": Fraction(1, 4), "b": Fraction(3, 4)})
        assert agent.mass({"a", "b"}) == Fraction(1)
        assert agent.mass({"c"}) == Fraction(0)

    def test_pmf_must_sum_to_one(self):
        with pytest.raises(ValueError):
            CredenceFunction("1", {"a": Fraction(1, 2)})

    def test_space_rejects_duplicates(self):
        with pytest.raises(ValueError):
            OutcomeSpace(("a", "a"))

    def test_system_rejects_stray_outcomes(self):
        space = OutcomeSpace(("a",))
        agent = CredenceFunction("1", {"b": Fraction(1)})
        with pytest.raises(ValueError):
            AgentSystem(space, (agent,))

    def test_union_support(self, ex1):
        assert ex1.union_support() == frozenset(ex1.space.outcomes)

    def test_unknown_agent_lookup(self, ex1):
        with pytest.raises(KeyError):
            ex1.agent("nope")


class TestOverlapMass:
    def test_pair_overlap(self, ex1):
        assert overlap_mass(ex1, "1", ("1", "2")) == Fraction(5, 8)
        assert overlap_mass(ex1, "2", ("1", "2")) == Fraction(1, 2)

    def test_triple_overlap_can_vanish(self, ex2):
        assert overlap_mass(ex2, "1", ("1", "2", "3")) == Fraction(0)

    def test_agent_must_belong_to_group(self, ex1):
        with pytest.raises(ValueError):
            overlap_mass(ex1, "1", ("2", "3"))

    def test_unknown_member_rejected(self, ex1):
        with pytest.raises(ValueError):
            overlap_mass(ex1, "1", ("1", "9"))


class TestRoundTrip:
    def test_serialize_then_validate(self, ex1):
        raw = cli.system_to_dict(ex1)
        again = validate(raw)
        assert again == ex1

    def test_serialized_credences_follow_outcome_order(self, ex1):
        raw = cli.system_to_dict(ex1)
        order = {label: i for i, label in enumerate(raw["outcomes"])}
        for entry in raw["agents"]:
            keys = list(entry["credence"])
            assert keys == sorted(keys, key=order.__getitem__)
