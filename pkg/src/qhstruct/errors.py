"""Exception types. Everything raised on bad domain input derives from QhError."""

from __future__ import annotations


class QhError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class CycleError(QhError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("relation has a cycle: " + " < ".join(map(str, self.cycle)))


class SizeError(QhError):
    pass


class UnsupportedError(QhError):
    pass


class ParallelArrowError(QhError):
    pass


class PreconditionError(QhError):
    pass


class NotCut(QhError):
    pass


class NotSinkSourceError(QhError):
    pass


class NotTypeAError(QhError):
    pass


class NotTreeOrder(QhError):
    def __init__(self, condition: int, witness, message: str):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition ({condition}) fails at {witness}: {message}")
