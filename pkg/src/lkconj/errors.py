"""Exception types raised across the package."""


class NotAUnit(ValueError):
    """Raised when inverting a Laurent polynomial that is not +-q^k."""


class ZeroSpecialization(ZeroDivisionError):
    """Raised when q = 0 is substituted into a polynomial with negative powers."""


class DimMismatch(ValueError):
    pass


class ModeMismatch(ValueError):
    pass


class UnsupportedDim(ValueError):
    pass


class WordSyntaxError(SyntaxError):
    """Word text that does not follow the token grammar.

    ``position`` is the character offset of the offending token.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class GeneratorIndexError(IndexError):
    """A generator index that does not exist for the ambient n."""


class TOnlyForN3(ValueError):
    pass


class SpecInvalid(ValueError):
    pass


class CaseNotApplicable(ValueError):
    pass


class ExcludedPoint(ValueError):
    pass


class ZeroQ(ValueError):
    pass


class UnknownCase(KeyError):
    pass


class UnsupportedSet(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass
