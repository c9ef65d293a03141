"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SymbreakError(Exception):
    """Base class for every error raised by this package."""


class MalformedGraph6(SymbreakError, ValueError):
    pass


class UnsupportedSize(SymbreakError, ValueError):
    pass


class EmptySourceSet(SymbreakError, ValueError):
    pass


class NotATree(SymbreakError, ValueError):
    pass


class OrderTooSmall(SymbreakError, ValueError):
    pass


class CycleBudgetExceeded(SymbreakError, RuntimeError):
    pass


class GroupBudgetExceeded(SymbreakError, RuntimeError):
    pass


class SearchBudgetExceeded(SymbreakError, RuntimeError):
    pass


class NoCycles(SymbreakError, ValueError):
    pass


class NotDefined(SymbreakError, ValueError):
    """No edge labeling can break a nontrivial automorphism (e.g. K2)."""


class Step1Infeasible(SymbreakError, RuntimeError):
    pass


class PreconditionViolated(SymbreakError, ValueError):
    pass


class ConstructionFailed(SymbreakError, RuntimeError):
    pass
