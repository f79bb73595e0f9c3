"""Exception types shared across the package."""


class PalfacError(Exception):
    """Base class for all errors raised by palfac."""


class NotAPrefix(PalfacError, ValueError):
    pass


class NotASuffix(PalfacError, ValueError):
    pass


class NotProlongable(PalfacError, ValueError):
    pass


class EmptyWordInSet(PalfacError, ValueError):
    pass


class InputTooLarge(PalfacError, ValueError):
    pass


class AlphabetMismatch(PalfacError, ValueError):
    pass


class InvalidM(PalfacError, ValueError):
    pass


class EmptyWord(PalfacError, ValueError):
    pass


class NonBinaryAlphabet(PalfacError, ValueError):
    pass


class IndexBelowRange(PalfacError, ValueError):
    pass


class StripMismatch(PalfacError, RuntimeError):
    """A quotient that must exist by construction did not; indicates a bug."""


class BudgetExceeded(PalfacError, MemoryError):
    pass


class EmptyInput(PalfacError, ValueError):
    pass


class GenerationFailed(PalfacError, RuntimeError):
    pass


class ParseError(PalfacError, ValueError):
    pass
