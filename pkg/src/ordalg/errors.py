"""Exception types shared across the engine."""


class OrdalgError(Exception):
    """Base class for all engine errors."""


class UnsupportedFragment(OrdalgError):
    """The requested computation falls outside the supported term fragment."""


class NoEndpoint(OrdalgError):
    """End-element surgery was requested on an order lacking that endpoint."""


class InvalidCode(OrdalgError):
    """A point code does not denote an element of the given term."""


class InvalidSample(OrdalgError):
    """A law-checker sample violates the checker's precondition."""


class VerificationFailed(OrdalgError):
    """A constructed certificate failed its sampled order check."""


class ParseError(OrdalgError):
    """Syntax error in a surface expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
