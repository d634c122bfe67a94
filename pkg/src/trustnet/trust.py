"""Pure trust mathematics: rating, opinions, reputation, risk, trustworthiness.

A rater accumulates per-round (good, bad) outcome counts for each peer.
Counts are folded into a normalized opinion in [0, 1]; a peer's final
trustworthiness blends the rater's own accumulated opinion, the mean of
third-party opinions, and a recent-window safety measure:

    opinion(g, b)   = g*s1 / (g*s1 + b*|s2|)          with s1 > 0 > s2, |s2| > s1
    reputation      = w_peer * peer_mean + w_direct * own_opinion
    safety          = opinion over the last `risk_window` rounds only
    trustworthiness = w_reputation * reputation + w_safety * safety

Mismatches carry more weight than matches (|s2| > s1), so one bad install
costs more than one good install earns, without a single slip zeroing a
long good record.

Absence of evidence is represented as ``None`` (never coerced to 0 or 1);
callers exclude evidence-free pairs from aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .domain import ComparisonOutcome

# One (good_count, bad_count) pair per completed round for one rater/ratee pair.
History = Sequence[tuple[int, int]]

#: Tolerance for the composition identities (re = w_er*er + w_ir*ir, etc.).
COMPOSITION_TOL = 1e-12


@dataclass(frozen=True)
class TrustParams:
    """Scoring constants, blend weights, risk window, and verdict threshold.

    JSON field names (scenario key "trust_params"): s1, s2, w_er, w_ir,
    w_re, w_ri, risk_window, tau.
    """

    match_score: float = 1.0        # s1, > 0
    mismatch_score: float = -2.0    # s2, < 0 and |s2| > s1
    weight_peer: float = 0.2        # w_er
    weight_direct: float = 0.8      # w_ir
    weight_reputation: float = 0.5  # w_re
    weight_safety: float = 0.5      # w_ri
    risk_window: int = 10           # rounds considered by the safety measure
    tau: float = 0.5                # verdict threshold on trustworthiness

    def __post_init__(self) -> None:
        if not self.match_score > 0:
            raise ValueError(f"s1 must be positive, got {self.match_score}")
        if not self.mismatch_score < 0:
            raise ValueError(f"s2 must be negative, got {self.mismatch_score}")
        if not abs(self.mismatch_score) > self.match_score:
            raise ValueError(
                f"|s2| must exceed s1, got s1={self.match_score} s2={self.mismatch_score}"
            )
        for name, value in (
            ("w_er", self.weight_peer),
            ("w_ir", self.weight_direct),
            ("w_re", self.weight_reputation),
            ("w_ri", self.weight_safety),
        ):
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if abs(self.weight_peer + self.weight_direct - 1.0) > 1e-9:
            raise ValueError(
                f"w_er + w_ir must equal 1, got {self.weight_peer + self.weight_direct}"
            )
        if abs(self.weight_reputation + self.weight_safety - 1.0) > 1e-9:
            raise ValueError(
                f"w_re + w_ri must equal 1, got {self.weight_reputation + self.weight_safety}"
            )
        if not (isinstance(self.risk_window, int) and self.risk_window >= 1):
            raise ValueError(f"risk_window must be a positive integer, got {self.risk_window}")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError(f"tau must lie in [0, 1], got {self.tau}")

    def to_json(self) -> dict:
        return {
            "s1": self.match_score,
            "s2": self.mismatch_score,
            "w_er": self.weight_peer,
            "w_ir": self.weight_direct,
            "w_re": self.weight_reputation,
            "w_ri": self.weight_safety,
            "risk_window": self.risk_window,
            "tau": self.tau,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TrustParams":
        known = {"s1", "s2", "w_er", "w_ir", "w_re", "w_ri", "risk_window", "tau"}
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"trust_params: unknown key {sorted(unknown)[0]!r}")
        defaults = cls()
        return cls(
            match_score=float(obj.get("s1", defaults.match_score)),
            mismatch_score=float(obj.get("s2", defaults.mismatch_score)),
            weight_peer=float(obj.get("w_er", defaults.weight_peer)),
            weight_direct=float(obj.get("w_ir", defaults.weight_direct)),
            weight_reputation=float(obj.get("w_re", defaults.weight_reputation)),
            weight_safety=float(obj.get("w_ri", defaults.weight_safety)),
            risk_window=int(obj.get("risk_window", defaults.risk_window)),
            tau=float(obj.get("tau", defaults.tau)),
        )


@dataclass(frozen=True)
class TrustState:
    """All trust components for one (rater, ratee) pair after one round.

    ``peer_recommendation`` is None when no third-party opinion existed
    (e.g. a two-controller network); reputation then equals the direct
    opinion alone. JSON keys: er, ir, re, ri, t.
    """

    peer_recommendation: Optional[float]  # er
    direct_opinion: float                 # ir
    reputation: float                     # re
    safety: float                         # ri
    trust: float                          # t

    def to_json(self) -> dict:
        return {
            "er": self.peer_recommendation,
            "ir": self.direct_opinion,
            "re": self.reputation,
            "ri": self.safety,
            "t": self.trust,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TrustState":
        er = obj["er"]
        return cls(
            peer_recommendation=None if er is None else float(er),
            direct_opinion=float(obj["ir"]),
            reputation=float(obj["re"]),
            safety=float(obj["ri"]),
            trust=float(obj["t"]),
        )


def rate(outcome: ComparisonOutcome, params: TrustParams) -> float:
    """Score a single comparison outcome: s1 for a match, s2 for a mismatch."""
    if outcome is ComparisonOutcome.MATCH:
        return params.match_score
    return params.mismatch_score


def opinion_score(good: int, bad: int, params: TrustParams) -> Optional[float]:
    """Normalize outcome counts into an opinion in [0, 1].

    Returns good*s1 / (good*s1 + bad*|s2|), i.e. the positively-scored share
    of all scored evidence, so |s2| > s1 makes each mismatch cost more than a
    match earns. Returns None when there is no evidence at all.
    """
    if good < 0 or bad < 0:
        raise ValueError(f"counts must be non-negative, got good={good} bad={bad}")
    if good == 0 and bad == 0:
        return None
    positive = good * params.match_score
    negative = bad * abs(params.mismatch_score)
    return positive / (positive + negative)


def compute_direct_opinion(history: History, params: TrustParams) -> Optional[float]:
    """The rater's own accumulated opinion of a peer over its entire history.

    Sums every round's counts and normalizes; deliberately ignores what any
    other controller says. None when the whole history carries no evidence.
    """
    good = sum(g for g, _ in history)
    bad = sum(b for _, b in history)
    return opinion_score(good, bad, params)


def compute_peer_recommendation(opinions: Sequence[float]) -> Optional[float]:
    """Mean of the current-round opinions other controllers hold about a ratee.

    The caller supplies opinions from controllers other than the rater and
    the ratee. None on an empty list (nobody else had an opinion).
    """
    if not opinions:
        return None
    return sum(opinions) / len(opinions)


def compute_reputation(
    peer_recommendation: Optional[float], direct_opinion: float, params: TrustParams
) -> float:
    """Blend third-party consensus with the rater's own accumulated opinion.

    With no third-party evidence the full weight shifts to the rater's own
    opinion rather than inventing a neutral prior.
    """
    if peer_recommendation is None:
        return direct_opinion
    return params.weight_peer * peer_recommendation + params.weight_direct * direct_opinion


def compute_safety(history: History, params: TrustParams) -> Optional[float]:
    """Recent-window safety measure from the rater's own observations only.

    Sums counts over the most recent ``risk_window`` rounds; the windowed
    risk is the negatively-scored share of that evidence, and the returned
    value is 1 - risk (higher = safer) so it composes positively into
    trustworthiness. None when the window holds no evidence.
    """
    window = history[-params.risk_window:]
    good = sum(g for g, _ in window)
    bad = sum(b for _, b in window)
    if good == 0 and bad == 0:
        return None
    risk = bad * abs(params.mismatch_score) / (good * params.match_score + bad * abs(params.mismatch_score))
    return 1.0 - risk


def compute_trust(reputation: float, safety: float, params: TrustParams) -> float:
    """Final trustworthiness: weighted blend of reputation and safety."""
    return params.weight_reputation * reputation + params.weight_safety * safety
