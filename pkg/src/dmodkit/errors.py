"""Failure modes surfaced by the engine and the algorithm layer."""


class ComputationError(Exception):
    """A computation could not be completed (resource cap, unsupported case)."""

    reason = "computation-error"


class CapExceeded(ComputationError):
    """A degree cap was hit; the result so far is unusable."""

    reason = "cap-exceeded"


class ZeroIntersection(ComputationError):
    """A principal intersection is provably or presumably zero."""

    reason = "zero-intersection"


class UnsupportedBranch(ComputationError):
    """The input falls into a case this implementation deliberately omits."""

    reason = "unsupported-branch"
