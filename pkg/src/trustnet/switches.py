"""Simulated switches: passive flow-table holders with no control logic.

All faults live in controllers; a switch just stores whatever its owner
installed and answers probes from any controller (full-mesh access).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domain import ControllerId, FlowEntry, Policy, SwitchId
from .errors import UnknownSwitchError
from .noticeboard import Noticeboard


@dataclass
class SimSwitch:
    """One switch: fixed owner, at most one flow entry per policy id."""

    switch_id: SwitchId
    owner: ControllerId
    flow_table: dict[str, FlowEntry] = field(default_factory=dict)

    def entries(self) -> tuple[FlowEntry, ...]:
        return tuple(self.flow_table[pid] for pid in sorted(self.flow_table))


class SwitchFabric:
    """All switches of a scenario, addressed by id."""

    def __init__(self, switches: list[SimSwitch], board: Noticeboard) -> None:
        self._switches = {s.switch_id: s for s in switches}
        self._board = board

    def __len__(self) -> int:
        return len(self._switches)

    @property
    def switch_ids(self) -> list[SwitchId]:
        return sorted(self._switches)

    def owner_of(self, switch_id: SwitchId) -> ControllerId:
        return self._get(switch_id).owner

    def owned_by(self, controller: ControllerId) -> list[SwitchId]:
        return sorted(s.switch_id for s in self._switches.values() if s.owner == controller)

    def _get(self, switch_id: SwitchId) -> SimSwitch:
        try:
            return self._switches[switch_id]
        except KeyError:
            raise UnknownSwitchError(f"no such switch: {switch_id}") from None

    def install_flow(self, switch_id: SwitchId, policy: Policy, installer: ControllerId) -> None:
        """Install (or overwrite, by policy id) one flow rule."""
        switch = self._get(switch_id)
        switch.flow_table[policy.policy_id] = FlowEntry(policy=policy, installed_by=installer)

    def fetch_flow_table(self, switch_id: SwitchId, prober: ControllerId) -> tuple[FlowEntry, ...]:
        """Immutable snapshot of a switch's flow table; counts one probe."""
        switch = self._get(switch_id)
        self._board.record_probe(prober, switch_id)
        return switch.entries()

    def tables_json(self) -> dict:
        return {
            s.label: [e.policy.to_json() | {"installed_by": self._switches[s].flow_table[e.policy.policy_id].installed_by.label}
                      for e in self._switches[s].entries()]
            for s in self.switch_ids
        }
