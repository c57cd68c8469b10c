"""Exception types raised across the toolkit."""

from __future__ import annotations


class DrawkitError(Exception):
    """Base class for all toolkit errors."""


class UnrealizableQuadruple(DrawkitError):
    """A 4-vertex sub-rotation-system matches no drawable K4 class."""

    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__(f"unrealizable 4-vertex subsystem on {self.subset}")


class SubsetTooSmall(DrawkitError):
    pass


class TooLarge(DrawkitError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the size cap {cap} (override with DRAWKIT_MAX_N)")


class DegeneratePointSet(DrawkitError):
    pass


class GaveUp(DrawkitError):
    def __init__(self, attempts):
        self.attempts = attempts
        super().__init__(f"gave up after {attempts} rejection-sampling attempts")


class InvalidDrawing(DrawkitError):
    pass


class WrongFace(DrawkitError):
    pass


class RangeTooWide(DrawkitError):
    pass


class NonTermination(DrawkitError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"double-spiral removal did not finish within {budget} moves")


class RealizationMismatch(DrawkitError):
    pass


class BothDirectionsForbidden(DrawkitError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"circle edge {edge} has no direction compatible with the lateral edges")


class NotStronglyCMonotone(DrawkitError):
    pass


class CutBlocked(DrawkitError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"cut ray passes through the wedge of edge {edge}")


class InternalAssertion(DrawkitError):
    """A constructive algorithm produced an invalid result; the input is inconsistent."""


class EdgeIsCrossed(DrawkitError):
    pass


class BadRotation(DrawkitError):
    pass


class IncomparableAtRequiredVertex(DrawkitError):
    pass


class InconsistentInput(DrawkitError):
    pass


class UnrenderableModel(DrawkitError):
    pass
