"""Exception hierarchy shared by all focuslog modules."""


class FocuslogError(Exception):
    """Base class for errors raised by focuslog."""


class ReductionDepthExceeded(FocuslogError):
    """Beta reduction ran past its step budget (usually a bad lexical entry)."""


class SexprError(FocuslogError, ValueError):
    pass


class LexiconError(FocuslogError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotFocusable(FocuslogError):
    pass


class FootClash(FocuslogError):
    """Both daughters of a combination carry a non-vacuous foot feature."""


class FreeVarLeak(FocuslogError):
    pass


class OrphanEntry(FocuslogError):
    pass


class NoFocus(FocuslogError):
    pass


class UnknownWord(FocuslogError):
    def __init__(self, token: str):
        self.token = token
        super().__init__(f"unknown word: {token!r}")


class NoParse(FocuslogError):
    pass
