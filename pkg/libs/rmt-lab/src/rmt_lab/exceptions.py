from __future__ import annotations

__all__ = [
    "RmtLabError",
    "ConfigurationError",
    "DomainError",
    "SingularConfigurationError",
    "RefinementError",
    "NumericError",
    "StiffnessError",
]


class RmtLabError(Exception):
    """Base class for every error raised by rmt_lab."""


class ConfigurationError(RmtLabError, ValueError):
    """An ensemble spec, flow config or experiment document is invalid.

    Params:
        reason (str): Single-line, machine-parsable description of the problem.

    """

    def __init__(self, reason: str):
        self.reason: str = reason
        super().__init__(reason)


class DomainError(RmtLabError, ValueError):
    """An operation was evaluated outside of its mathematical domain."""


class SingularConfigurationError(DomainError):
    """Two points coincide (or a covariance point is not positive)."""

    def __init__(self, msg: str, indices: tuple[int, int] | None = None):
        self.indices = indices
        super().__init__(msg)

    def __reduce__(self):
        return (type(self), (str(self), self.indices))


class RefinementError(DomainError):
    """A grid is too coarse to resolve the problem."""


class NumericError(RmtLabError, RuntimeError):
    """A numerical routine failed. Carries the seed that produced the input."""

    def __init__(self, msg: str, seed: int | None = None):
        self.seed = seed
        self.detail = msg
        if seed is not None:
            msg = f"{msg} (seed={seed})"
        super().__init__(msg)

    def __reduce__(self):
        ## Rebuild from the constructor arguments when crossing a process boundary
        return (type(self), (self.detail, self.seed))


class StiffnessError(NumericError):
    """The SDE integrator exhausted its step halvings near a collision."""

    def __init__(self, msg: str, gap: float, seed: int | None = None):
        self.gap = gap
        self.reason = msg
        super().__init__(f"{msg}; offending gap={gap:.3e}", seed=seed)

    def __reduce__(self):
        return (type(self), (self.reason, self.gap, self.seed))
