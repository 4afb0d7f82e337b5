"""Exception types shared across the package.

The distinction matters for the CLI exit-code contract: parse/domain
problems are usage errors, capability errors mean an input exceeded a
supported size or search budget (never a wrong answer), and invariant
violations flag internal contradictions that should be impossible.
"""


class DomicertError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(DomicertError, ValueError):
    """Malformed graph input; the message names the offending line."""


class DomainError(DomicertError, ValueError):
    """Input outside a solver's domain (isolated vertex, too few vertices, not a tree)."""


class CapabilityError(DomicertError):
    """Input exceeds a supported size bound or search budget."""


class NotMinimumWitness(DomicertError):
    """Private-vertex search failed.

    The search is guaranteed to succeed when the edge set is a minimum
    ev-dominating set in the configuration the twinning step assumes, so
    failure is diagnostic: the inputs are not what the caller claimed.
    """


class InvariantViolation(DomicertError):
    """An internal consistency check failed; indicates a bug, never bad input."""
