"""Shared error types."""


class DegreeOverflowError(ValueError):
    """An operation left the computed degree range."""


class BoundInsufficientError(RuntimeError):
    """A truncation bound was too small to determine the requested data.

    Carries the homological step and internal degree where determination
    failed.
    """

    def __init__(self, step: int, degree: int, message: str = ""):
        self.step = step
        self.degree = degree
        super().__init__(message or f"bound insufficient at step {step}, internal degree {degree}")
