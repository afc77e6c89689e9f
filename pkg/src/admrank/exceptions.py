"""Exception hierarchy. Every domain error derives from :class:`AdmrankError`."""


class AdmrankError(Exception):
    pass


class ParseError(AdmrankError, ValueError):
    """Malformed textual input (form strings, polynomial strings, files)."""


class ZeroFormError(AdmrankError, ValueError):
    pass


class LengthMismatchError(AdmrankError, ValueError):
    pass


class DegreeTooHighError(AdmrankError, ValueError):
    pass


class DegreeOutOfRangeError(AdmrankError, ValueError):
    pass


class NotSigmaStableError(AdmrankError, ValueError):
    """The form (or its root set) is not stable under the fixed-point-free involution."""


class DegenerateDehomogenizationError(AdmrankError, ArithmeticError):
    pass


class CertificateSearchExhaustedError(AdmrankError, RuntimeError):
    """No square-free apolar member was found; indicates a bug, not a property of the input."""


class NotAPencilError(AdmrankError, ValueError):
    pass


class DegenerateConfigurationError(AdmrankError, ValueError):
    pass
