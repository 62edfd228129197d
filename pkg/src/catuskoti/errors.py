"""Exception hierarchy shared by every module in the package."""


class CatuskotiError(Exception):
    """Base class for all errors raised by this package."""


class FormulaSyntaxError(CatuskotiError, ValueError):
    """Malformed formula text.

    ``position`` is the 0-based character offset where parsing failed and
    ``expected`` a short description of what the parser wanted there.
    """

    def __init__(self, message, text="", position=0, expected=None):
        self.text = text
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class UndeclaredLetterError(CatuskotiError, KeyError):
    """A valuation was asked for a letter outside its declared domain."""

    def __init__(self, letter):
        self.letter = letter
        super().__init__(letter)

    def __str__(self):
        return f"letter {self.letter!r} is not declared by the valuation"


class CapExceededError(CatuskotiError):
    """An exhaustive enumeration would exceed the configured size cap."""


class ArityError(CatuskotiError, TypeError):
    """Wrong number of generators or operands."""


class PreconditionError(CatuskotiError):
    """A conditional claim was checked while its hypothesis does not hold."""


class ConnectiveError(CatuskotiError):
    """The requested connective does not exist in the chosen semantics."""


class OpenFormulaError(CatuskotiError):
    """A predicate formula with free variables was handed to the evaluator."""


class UnknownPredicateError(CatuskotiError, KeyError):
    """A predicate has no extension in the model."""

    def __str__(self):
        return f"predicate {self.args[0]!r} has no extension in the model"
