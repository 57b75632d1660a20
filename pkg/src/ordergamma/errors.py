"""Exception hierarchy shared by every module of the package."""


class OrderGammaError(ValueError):
    """Base class; the CLI maps it to exit status 2."""


# posets
class EmptyPoset(OrderGammaError):
    pass


class InvalidCovers(OrderGammaError):
    pass


class IdentifierClash(OrderGammaError):
    pass


class NotConsistent(OrderGammaError):
    pass


class NotParityConsistent(OrderGammaError):
    pass


class NotOneGraded(OrderGammaError):
    pass


class RankOutOfParityRange(OrderGammaError):
    pass


class NotASubgroupOfAut(OrderGammaError):
    pass


class NotAnAutomorphism(OrderGammaError):
    pass


class QuotientNotPartialOrder(OrderGammaError):
    pass


# groups and characters
class GroupTooLarge(OrderGammaError):
    pass


class NotASubgroup(OrderGammaError):
    pass


class SizeMismatch(OrderGammaError):
    pass


class NotVirtual(OrderGammaError):
    """A class function whose irreducible multiplicities are not all integers."""


# ehrhart / gamma
class TruncationUnstable(OrderGammaError):
    pass


class Unbounded(OrderGammaError):
    pass


class GroupDoesNotPreserve(OrderGammaError):
    pass


class NotPalindromic(OrderGammaError):
    pass


class DegreeMismatch(OrderGammaError):
    pass


class NonEffective(OrderGammaError):
    """Raised when a coefficient that must be a genuine character is not."""


# cli
class ParseError(OrderGammaError):
    pass


class GuardExceeded(OrderGammaError):
    pass
