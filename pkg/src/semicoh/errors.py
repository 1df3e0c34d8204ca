"""Exception hierarchy shared by every semicoh module."""


class SemicohError(Exception):
    """Base class for all errors raised by semicoh."""


class ZeroVector(SemicohError, ValueError):
    pass


class DimMismatch(SemicohError, ValueError):
    pass


class NotInGroup(SemicohError, ValueError):
    """A degree does not lie in the Grothendieck group of the semigroup."""


class NotSaturated(SemicohError, ValueError):
    pass


class NotSimplicial(SemicohError, ValueError):
    pass


class WrongRank(SemicohError, ValueError):
    pass


class FaceNotInLattice(SemicohError, ValueError):
    pass


class NotAnEdge(SemicohError, ValueError):
    pass


class SpecError(SemicohError, ValueError):
    """Malformed semigroup definition file."""


class BudgetExhausted(SemicohError, RuntimeError):
    """A bounded search ran out of budget before it could certify its result.

    Attributes:
        level: the last sigma-level (or band top) that was fully processed.
        partial: whatever was collected before the budget ran out.
    """

    def __init__(self, message, level=None, partial=None):
        super().__init__(message)
        self.level = level
        self.partial = partial
