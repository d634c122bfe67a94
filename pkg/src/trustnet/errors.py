"""Exception hierarchy for the simulator.

Config problems (bad file, bad field) derive from ``ConfigError`` so the CLI
can map them to exit code 2; everything else is a runtime failure (exit 3).
"""

from __future__ import annotations


class TrustNetError(Exception):
    """Base class for all simulator errors."""


class ConfigError(TrustNetError):
    """A scenario could not be loaded."""


class ScenarioParseError(ConfigError):
    """Scenario file missing or not valid JSON."""


class ScenarioValidationError(ConfigError):
    """Scenario parsed but violates an invariant; message names the field."""


class UnknownScenarioError(ConfigError):
    """Requested builtin scenario name does not exist."""


class UnknownTopicError(TrustNetError):
    """Publish attempted on a topic outside the closed topic set."""


class RoundNotFinishedError(TrustNetError):
    """Metrics snapshot requested for a round that has not completed."""


class UnknownSwitchError(TrustNetError):
    """Operation addressed a switch id not present in the topology."""


class UnknownControllerError(TrustNetError):
    """Operation addressed a controller id not present in the scenario."""


class MissingAssignmentsError(TrustNetError):
    """Policy checker ran before any assignment push was observed."""


class MissingAggregatesError(TrustNetError):
    """Trust report requested before the aggregated ratings arrived."""


class DuplicateRatingError(TrustNetError):
    """A rater submitted twice in one round; the first submission is kept."""


class MissingRatingError(TrustNetError):
    """Fewer ratings maps than controllers arrived for a round."""


class MissingReportsError(TrustNetError):
    """Fewer trust reports than controllers arrived for a round."""


class RoundAlreadyOpenError(TrustNetError):
    """startRound called while a previous round is still open."""
