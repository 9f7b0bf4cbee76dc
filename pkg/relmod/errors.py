"""Exception hierarchy for relmod."""

from __future__ import annotations


class RelmodError(Exception):
    """Base class for every error raised by relmod."""


class WordSyntaxError(RelmodError, ValueError):
    """Raised when a word literal cannot be parsed."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class MissingImageError(RelmodError, KeyError):
    """Raised when a substitution has no image for a generator."""

    def __init__(self, gen: object) -> None:
        super().__init__(f"no image for generator {gen}")
        self.gen = gen

    def __str__(self) -> str:
        return str(self.args[0])


class PresentationSyntaxError(RelmodError, ValueError):
    """Raised when a presentation file cannot be parsed."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class PresentationError(RelmodError):
    """Raised when a presentation violates its invariants."""


class GeneratorCollisionError(PresentationError):
    """Raised when a Tietze move adds a generator that already exists."""


class NotEliminableError(PresentationError):
    """Raised when a relator cannot be used to eliminate a generator."""


class TietzeError(PresentationError):
    """Raised when a relator rewrite is not a valid Tietze move."""


class HomomorphismError(RelmodError):
    """Raised when generator images do not define a homomorphism."""


class UnknownGeneratorError(RelmodError):
    """Raised when a word mentions a generator the oracle does not know."""


class WindowExceededError(UnknownGeneratorError):
    """Raised when an indexed generator falls outside an oracle window."""


class UnsupportedOracleError(RelmodError):
    """Raised when an operation is not available for an oracle kind."""


class ArityMismatchError(RelmodError):
    """Raised when witness letters and subgroup generators do not match."""


class OracleMismatchError(RelmodError):
    """Raised when group ring elements over different oracles are combined."""


class FactorizationError(RelmodError):
    """Raised when a group element cannot be factored within the index window."""


class ZeroElementError(RelmodError):
    """Raised when an operation needs a nonzero element."""


class IdentityViolationError(RelmodError):
    """Raised when the Fox fundamental identity fails (internal inconsistency)."""


class NotARelatorError(RelmodError):
    """Raised when a word expected to be a relator is nontrivial."""


class BallExceededError(RelmodError):
    """Raised when a path leaves a finite Cayley ball."""

    def __init__(self, message: str, prefix: object) -> None:
        super().__init__(message)
        self.prefix = prefix


class BallBudgetError(RelmodError):
    """Raised when a Cayley ball would exceed its vertex budget."""


class SupportOutsideBallError(RelmodError):
    """Raised when a group ring element is supported outside a Cayley ball."""


class NotACycleError(RelmodError):
    """Raised when an edge chain has nonzero boundary."""


class UnknownScenarioError(RelmodError, KeyError):
    """Raised when a scenario id is not in the catalog."""

    def __str__(self) -> str:
        return str(self.args[0])


class DescriptorError(RelmodError, ValueError):
    """Raised when an oracle descriptor string is malformed."""
