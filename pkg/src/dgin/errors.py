"""Exception hierarchy shared by the library and the command-line front end."""


class DginError(Exception):
    """Base class for all library errors."""


class ParseError(DginError, ValueError):
    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)
        self.text = text
        self.position = position


class DimensionError(DginError, ValueError):
    pass


class UndefinedMinError(DginError, ValueError):
    pass


class AdmissibilityError(DginError, ValueError):
    """Raised when a polynomial cannot be a Hilbert polynomial in the given setting."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class ResourceError(DginError, RuntimeError):
    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class PreconditionError(DginError, ValueError):
    pass


class UnsupportedInputError(PreconditionError):
    pass


class GenericityError(DginError, RuntimeError):
    """Monte-Carlo certificate for a generic change of coordinates was not reached."""


class NotStabilizedError(DginError, RuntimeError):
    pass


class DegenerateSaturationWarning(UserWarning):
    """Saturation of a Borel ideal containing a pure power of x0 is the unit ideal."""
