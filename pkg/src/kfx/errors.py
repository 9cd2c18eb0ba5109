"""Exception hierarchy shared by all kfx modules."""


class KfxError(Exception):
    """Base class for all library errors."""


class GraphParseError(KfxError):
    """Malformed edge-list input (syntax, duplicate edges, loops, bad indices)."""


class ParameterError(KfxError, ValueError):
    """Family/formula parameters outside their admissible range."""


class NotConnectedError(KfxError):
    """Operation requires a connected graph."""


class NotUnicyclicError(KfxError):
    """Operation requires a connected graph with exactly one cycle."""


class EngineMismatchError(KfxError):
    """Structural engine given a graph it cannot handle."""


class CapExceededError(KfxError):
    """Enumeration produced more isomorphism classes than the configured cap."""
