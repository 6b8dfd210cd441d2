"""Exception hierarchy shared by every module in the package."""


class SlpGramError(Exception):
    """Base class for all library errors."""


class ForwardReference(SlpGramError):
    def __init__(self, index):
        super().__init__(f"rule {index} references itself or a later rule")
        self.index = index


class EmptyProgram(SlpGramError):
    pass


class LengthOverflow(SlpGramError):
    pass


class CountOverflow(SlpGramError):
    pass


class LimitExceeded(SlpGramError):
    pass


class BadFormat(SlpGramError):
    pass


class QZero(SlpGramError, ValueError):
    pass


class QTooSmall(SlpGramError, ValueError):
    pass


class InputTooLarge(SlpGramError):
    pass


class PositionOutOfRange(SlpGramError, IndexError):
    pass


class KernelOverflow(SlpGramError):
    pass


class EmptySet(SlpGramError, ValueError):
    pass


class NoQgram(SlpGramError):
    pass
