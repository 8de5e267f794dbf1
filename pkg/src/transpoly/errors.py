"""Exception hierarchy shared by every module."""

from __future__ import annotations


class TranspolyError(Exception):
    """Base class for all library errors."""


class RepresentationLimit(TranspolyError):
    """A configured size cap (depth, terms, families, degrees) was exceeded."""


class InfiniteTailUnderflow(TranspolyError):
    """An infinite descending run would reach negative exponents."""


class ZeroPolyError(TranspolyError):
    """Degree or leading coefficient requested of the zero polynomial."""


class ZeroDivisorError(TranspolyError, ZeroDivisionError):
    pass


class NonDescendingInput(TranspolyError, ValueError):
    pass


class ModulusMismatch(TranspolyError):
    pass


class BudgetExhausted(TranspolyError):
    """A division ran out of successor steps before terminating.

    ``partial`` holds whatever partial result the caller produced (a
    :class:`~transpoly.division.DivisionTrace`, or a list of remainders for
    the Euclidean chain).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NotInvertible(TranspolyError):
    """Raised by quotient inversion; ``witness`` is the nontrivial gcd found."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(TranspolyError, ValueError):
    def __init__(self, offset: int, length: int, expected: str, found: str):
        self.offset = offset
        self.length = length
        self.expected = expected
        self.found = found
        super().__init__(
            f"parse error at offset {offset}: expected {expected}, found {found}"
        )

    @property
    def span(self) -> tuple[int, int]:
        return (self.offset, self.length)


class UnboundName(ParseError):
    def __init__(self, offset: int, name: str):
        self.name = name
        TranspolyError.__init__(self, f"unbound identifier '{name}' at offset {offset}")
        self.offset = offset
        self.length = len(name)
        self.expected = "a bound name"
        self.found = repr(name)


class SchemaError(TranspolyError, ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
