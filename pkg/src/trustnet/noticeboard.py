"""Central publish-subscribe noticeboard with exact message accounting.

All coordination between the policy distributor, the trust collector, and
the controllers flows through this board: a command or data message is
written once and read by any number of subscribers, so a single publish
replaces a broadcast. The board also counts controller-to-switch probe
exchanges, which dominate the per-round message total.

Counting rules (the per-round total is what the acceptance suite asserts):

* one publish = one message, however many subscribers read it;
* one probe (query plus reply) = one message exchange;
* total messages for a round = publishes + probe exchanges;
* (message, reader) pairs are tracked separately as ``paired_reads`` for
  transparency, never mixed into the total.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Optional

from .domain import ControllerId, SwitchId
from .errors import RoundNotFinishedError, TrustNetError, UnknownTopicError

TOPICS = frozenset(
    {
        "policy_assignments",
        "trust_commands",
        "ratings_submissions",
        "aggregated_ratings",
        "trust_reports",
        "verdicts",
    }
)


@dataclass(frozen=True)
class BoardMessage:
    """One immutable board entry; ``seq`` is globally unique and monotone."""

    seq: int
    topic: str
    sender: str
    round_id: int
    payload: dict


@dataclass(frozen=True)
class MessageMetrics:
    """Frozen per-round message counters."""

    publishes: int
    paired_reads: int
    probe_exchanges: int

    @property
    def total_messages(self) -> int:
        return self.publishes + self.probe_exchanges

    def to_json(self) -> dict:
        return {
            "publishes": self.publishes,
            "paired_reads": self.paired_reads,
            "probe_exchanges": self.probe_exchanges,
            "total_messages": self.total_messages,
        }


class Noticeboard:
    """In-process message board; a serialization point for the whole run.

    Rounds are explicit: ``begin_round`` opens a counting window, every
    publish/read/probe is attributed to the open round, and ``end_round``
    freezes its metrics. The full message log doubles as an ordered audit
    trail and can be mirrored to a JSON-lines file.
    """

    def __init__(self, audit_log: Optional[IO[str]] = None) -> None:
        self._messages: list[BoardMessage] = []
        self._next_seq = 1
        self._audit_log = audit_log
        self._open_round: Optional[int] = None
        self._publishes = 0
        self._paired_reads = 0
        self._probe_exchanges = 0
        self._frozen: dict[int, MessageMetrics] = {}
        # (seq, reader) pairs already counted, so re-polls stay idempotent.
        self._seen_reads: set[tuple[int, str]] = set()

    # -- round lifecycle -------------------------------------------------

    def begin_round(self, round_id: int) -> None:
        if self._open_round is not None:
            raise TrustNetError(
                f"round {self._open_round} still open; cannot begin round {round_id}"
            )
        self._open_round = round_id
        self._publishes = 0
        self._paired_reads = 0
        self._probe_exchanges = 0

    def end_round(self, round_id: int) -> MessageMetrics:
        if self._open_round != round_id:
            raise TrustNetError(f"round {round_id} is not the open round")
        metrics = MessageMetrics(self._publishes, self._paired_reads, self._probe_exchanges)
        self._frozen[round_id] = metrics
        self._open_round = None
        return metrics

    def snapshot_metrics(self, round_id: int) -> MessageMetrics:
        """Frozen counters for a completed round."""
        if round_id not in self._frozen:
            raise RoundNotFinishedError(f"round {round_id} has not finished")
        return self._frozen[round_id]

    # -- messaging -------------------------------------------------------

    def publish(self, topic: str, sender: str, round_id: int, payload: dict) -> int:
        """Append a message; returns its sequence number."""
        if topic not in TOPICS:
            raise UnknownTopicError(f"unknown topic {topic!r}")
        message = BoardMessage(
            seq=self._next_seq,
            topic=topic,
            sender=sender,
            round_id=round_id,
            payload=payload,
        )
        self._next_seq += 1
        self._messages.append(message)
        self._publishes += 1
        if self._audit_log is not None:
            line = {
                "seq": message.seq,
                "topic": message.topic,
                "sender": message.sender,
                "round": message.round_id,
                "payload": message.payload,
            }
            self._audit_log.write(json.dumps(line) + "\n")
        return message.seq

    def poll(self, topic: str, reader: str, after_seq: int) -> list[BoardMessage]:
        """All messages on ``topic`` with seq > after_seq, in publish order.

        Each (message, reader) pair is counted once across the run, so
        polling with a stale cursor never inflates paired_reads.
        """
        if topic not in TOPICS:
            raise UnknownTopicError(f"unknown topic {topic!r}")
        result = [m for m in self._messages if m.topic == topic and m.seq > after_seq]
        for message in result:
            key = (message.seq, reader)
            if key not in self._seen_reads:
                self._seen_reads.add(key)
                self._paired_reads += 1
        return result

    def record_probe(self, controller: ControllerId, switch: SwitchId) -> None:
        """Count one controller-to-switch probe transaction."""
        if self._open_round is None:
            raise TrustNetError(
                f"probe {controller}->{switch} outside any trust round"
            )
        self._probe_exchanges += 1

    # -- inspection ------------------------------------------------------

    @property
    def messages(self) -> tuple[BoardMessage, ...]:
        """The complete ordered audit log of the run so far."""
        return tuple(self._messages)

    @property
    def latest_seq(self) -> int:
        return self._next_seq - 1
