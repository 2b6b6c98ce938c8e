"""Exception types shared across the package."""


class KLError(Exception):
    """Base class for all errors raised by klcanon."""


class BarAsymmetryError(KLError, ValueError):
    """A polynomial expected to satisfy bar(f) = -f does not."""


class LengthMismatch(KLError, ValueError):
    pass


class IndexOutOfRange(KLError, IndexError):
    pass


class NotCosetMinimal(KLError, ValueError):
    pass


class FormatError(KLError, ValueError):
    """An extracted coefficient does not have the expected sign/degree shape."""


class ContextMismatch(KLError, ValueError):
    pass


class CapacityError(KLError, RuntimeError):
    """The requested weight space is larger than the configured guard."""


class DenominatorError(KLError, ArithmeticError):
    pass


class WeightMismatch(KLError, ValueError):
    pass


class NotControlled(KLError, ValueError):
    pass
