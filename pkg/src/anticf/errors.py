"""Exception hierarchy. The CLI reports ``type(err).__name__`` on stderr."""


class AnticfError(Exception):
    """Base class for domain errors raised by this package."""


class DuplicateAddress(AnticfError):
    pass


class UnknownSymbol(AnticfError):
    pass


class UnknownLetter(AnticfError):
    pass


class IncompatibleAlphabets(AnticfError):
    pass


class NotProjective(AnticfError):
    pass


class NotAnOrdering(AnticfError):
    """A mixed linearisation dropped or repeated some entry of the tree."""


class NotGreibach(AnticfError):
    def __init__(self, message, rule=None):
        super().__init__(message)
        self.rule = rule


class NotTransformed(AnticfError):
    pass


class SpecError(AnticfError):
    """A locality spec or linearisation is malformed."""


class FormatError(AnticfError):
    """Text input does not parse under the expected file format."""
