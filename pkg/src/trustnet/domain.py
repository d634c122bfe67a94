"""Core identifiers and value types shared by every other module.

Everything here is an immutable value: ids, match-action policies, flow
entries, and the binary outcome of comparing an expected policy against an
installed flow table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class ControllerId:
    """A controller, rendered "C1", "C2", ... in configs and reports."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"controller index must be non-negative, got {self.index}")

    @property
    def label(self) -> str:
        return f"C{self.index}"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, label: str) -> "ControllerId":
        if not label.startswith("C") or not label[1:].isdigit():
            raise ValueError(f"not a controller label: {label!r}")
        return cls(int(label[1:]))


@dataclass(frozen=True, order=True)
class SwitchId:
    """A switch, rendered "S1", "S2", ...; each switch has one owning controller."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"switch index must be non-negative, got {self.index}")

    @property
    def label(self) -> str:
        return f"S{self.index}"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, label: str) -> "SwitchId":
        if not label.startswith("S") or not label[1:].isdigit():
            raise ValueError(f"not a switch label: {label!r}")
        return cls(int(label[1:]))


class Action(str, Enum):
    """What a flow rule does with matching traffic."""

    DROP = "drop"
    ALLOW = "allow"

    def flipped(self) -> "Action":
        return Action.ALLOW if self is Action.DROP else Action.DROP


class ComparisonOutcome(Enum):
    """Result of checking one expected policy against one flow table."""

    MATCH = "match"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class Policy:
    """A flow tuple: match fields plus an action, with a stable id.

    ``match`` accepts any mapping (or iterable of pairs) and is normalized to
    a sorted tuple of (field, value) pairs, so equality and hashing are exact
    and field-order independent. No wildcard or prefix semantics: two
    policies are equal iff every match field and the action agree exactly.
    """

    policy_id: str
    match: tuple[tuple[str, str], ...]
    action: Action

    def __post_init__(self) -> None:
        raw = self.match
        pairs: Iterable[tuple[str, str]]
        if isinstance(raw, Mapping):
            pairs = raw.items()
        else:
            pairs = raw
        normalized = tuple(sorted((str(k), str(v)) for k, v in pairs))
        if not normalized:
            raise ValueError(f"policy {self.policy_id!r}: match map must be non-empty")
        object.__setattr__(self, "match", normalized)
        object.__setattr__(self, "action", Action(self.action))

    @property
    def match_fields(self) -> dict[str, str]:
        return dict(self.match)

    def with_action(self, action: Action) -> "Policy":
        return Policy(self.policy_id, self.match, action)

    def to_json(self) -> dict:
        return {"id": self.policy_id, "match": dict(self.match), "action": self.action.value}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Policy":
        return cls(policy_id=str(obj["id"]), match=dict(obj["match"]), action=Action(obj["action"]))


@dataclass(frozen=True)
class FlowEntry:
    """One installed flow rule and the controller that installed it."""

    policy: Policy
    installed_by: ControllerId


def compare_policy(expected: Policy, flow_table: Iterable[FlowEntry]) -> ComparisonOutcome:
    """Check whether ``expected`` is installed somewhere in ``flow_table``.

    Returns MATCH iff some entry's policy is field-for-field equal to the
    expected one (same match map, same action; the id plays no part in the
    comparison). An absent policy and a tampered action both yield MISMATCH.
    Entries for other policies are ignored: the check is per assigned
    policy, never a whole-table diff.
    """
    for entry in flow_table:
        if entry.policy.match == expected.match and entry.policy.action == expected.action:
            return ComparisonOutcome.MATCH
    return ComparisonOutcome.MISMATCH
