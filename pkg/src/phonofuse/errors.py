"""Exception hierarchy shared by the phonofuse modules."""


class PhonofuseError(Exception):
    """Base class for all errors raised by phonofuse."""


class NumeralError(PhonofuseError, ValueError):
    """A numeral token could not be converted to words."""

    def __init__(self, token, reason="not a supported numeral"):
        self.token = token
        super().__init__(f"cannot convert numeral {token!r}: {reason}")


class DataError(PhonofuseError):
    """Bad input data (lexicon or dataset). The CLI maps these to exit code 2."""


class LexiconError(DataError):
    pass


class EmptyLexiconError(LexiconError):
    pass


class DatasetError(DataError):
    pass


class ClassificationError(PhonofuseError, ValueError):
    """An unknown ARPAbet symbol reached the phoneme classifier."""


class InvalidKeywordError(PhonofuseError, ValueError):
    pass
