from __future__ import annotations


class MatroidError(ValueError):
    """Base class for every input or invariant failure raised by triconn."""


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ElementOutOfRange(MatroidError):
    pass


class NotAMatroid(MatroidError):
    """A bases family that fails the exchange axiom."""


class NoEdges(MatroidError):
    pass


class DeleteAll(MatroidError):
    pass


class RankZero(MatroidError):
    pass


class NotThreeConnected(MatroidError):
    pass


class InternalContradiction(MatroidError):
    """A statement known to hold was refuted: the engine itself is wrong."""


class NTooSmall(MatroidError):
    pass


class TargetTooLarge(MatroidError):
    pass


class UnknownLemma(MatroidError):
    pass


class FormatError(MatroidError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
