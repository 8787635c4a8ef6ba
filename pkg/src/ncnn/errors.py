"""Exception hierarchy shared by every module of the package."""


class NCNNError(ValueError):
    """Base class for all errors raised by :mod:`ncnn`."""


class RankError(NCNNError):
    pass


class NonRootArgument(NCNNError):
    pass


class MembershipError(NCNNError):
    pass


class NotAntichain(NCNNError):
    pass


class BadCut(NCNNError):
    pass


class OrderMismatch(NCNNError):
    pass


class InvariantViolation(NCNNError):
    pass


class PredicateViolation(NCNNError):
    pass


class BadArity(NCNNError):
    pass


class NotNoncrossing(NCNNError):
    pass


class InvalidTags(NCNNError):
    pass


class InvalidStatistics(NCNNError):
    pass


class InternalContradiction(RuntimeError):
    """Raised when an algorithm reaches a state that validation should exclude."""


class UnsupportedCombination(NCNNError):
    pass
