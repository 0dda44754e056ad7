"""Exception types raised across the package."""


class UnfriendlyError(Exception):
    pass


class BudgetExceeded(UnfriendlyError):
    """A lazy neighbor enumerator ran past its enumeration budget."""


class UnknownFamilyError(UnfriendlyError, ValueError):
    pass


class PartialDomainError(UnfriendlyError, ValueError):
    """A partial coloring was passed where a total one is required."""


class ExhaustiveBoundError(UnfriendlyError):
    """Graph too large for exhaustive enumeration; use local search instead."""


class PreconditionError(UnfriendlyError, ValueError):
    pass


class NoCommonExtension(UnfriendlyError):
    def __init__(self, message, deepest_level):
        super().__init__(message)
        self.deepest_level = deepest_level


class ParseError(UnfriendlyError, ValueError):
    pass
