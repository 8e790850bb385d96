"""Exception types shared across the package."""


class SymtcError(Exception):
    """Base class for all library errors."""


class RingMismatch(SymtcError):
    """Operands belong to different rings or generator sets."""


class MixedFields(SymtcError):
    """A product or tensor was requested across different coefficient fields."""


class NoTopDegree(SymtcError):
    """An operation needing finite dimensionality met a ring without one."""


class SizeLimitExceeded(SymtcError):
    """A brute-force computation would exceed its configured size budget."""


class InexactValue(SymtcError):
    """An exact value was required but only an interval is certified."""


class UnsupportedSpace(SymtcError):
    """The space expression is outside the catalog."""


class ParseError(SymtcError):
    """Space-expression syntax error, with position information."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
