"""Exception taxonomy shared across the package.

Error messages carry fixed key phrases ("group too large", "rebuild scalar
context", ...) that the CLI maps onto exit codes and that tests assert on.
"""


class QellError(Exception):
    """Base class for all errors raised by this package."""


class GroupTooLargeError(QellError):
    """Generated group exceeds the configured order cap."""


class InvalidGeneratorError(QellError):
    """A permutation or generator list is malformed."""


class NotHomomorphismError(QellError):
    """A candidate map fails the homomorphism property."""


class NotSubgroupError(QellError):
    """A claimed subgroup relation does not hold."""


class PreconditionError(QellError):
    """An operation's documented precondition was violated."""


class ScalarContextError(QellError):
    """The scalar context cannot serve the requested computation."""


class SchemaError(QellError):
    """A JSON payload does not match the expected schema."""


class ParseError(QellError):
    """Group-spec text failed to parse; carries a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


class InternalCheckError(QellError):
    """A runtime consistency assertion failed; signals a bug, not bad input."""
