"""
Exception types raised by epitab.

Input problems are ValueError subclasses so callers that only care about
"bad input" can catch ValueError; internal consistency failures are
RuntimeError subclasses and indicate a bug in the procedure.
"""
from typing import List, Optional


class FormulaSyntaxError(ValueError):
    """Formula text does not conform to the grammar."""

    def __init__(self, message: str, position: int, text: str):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position}): {text!r}")


class UnknownAgentError(ValueError):
    """A formula mentions an agent that is not in the declared agent set."""

    def __init__(self, agent: str, declared: Optional[List[str]] = None):
        self.agent = agent
        self.declared = list(declared or [])
        known = ", ".join(self.declared) if self.declared else "none"
        super().__init__(f"Unknown agent '{agent}' (declared agents: {known})")


class AgentSetError(ValueError):
    """Malformed or too small agent set."""


class ModelFormatError(ValueError):
    """Malformed JSON model or reference to a world that does not exist."""


class OracleBoundError(ValueError):
    """Model enumeration requested beyond the configured limits."""


class HintikkaValidationError(ValueError):
    """
    A Hintikka structure (or the pseudo-model derived from it) fails its checks.

    Attributes:
        violations: Human-readable violation lines, one per failed condition
    """

    def __init__(self, message: str, violations: List[str]):
        self.violations = list(violations)
        detail = "; ".join(self.violations[:5])
        if len(self.violations) > 5:
            detail += f"; ... ({len(self.violations)} violations in total)"
        super().__init__(f"{message}: {detail}")


class InvariantBreach(RuntimeError):
    """An internal invariant of the tableau procedure does not hold."""
