"""Exception hierarchy shared by every module."""


class DescentError(Exception):
    """Base class for all errors raised by superdescent."""


class ZeroPolynomial(DescentError, ValueError):
    pass


class NegativeEvenPower(DescentError, ValueError):
    pass


class ZeroInput(DescentError, ValueError):
    pass


class FactorizationTimeout(DescentError):
    """The factorization work budget ran out before a complete factorization."""


class PerfectSquareInput(DescentError, ValueError):
    pass


class DigitBudgetExceeded(DescentError):
    """An exact quantity would exceed the configured decimal-digit budget."""

    def __init__(self, needed: int, budget: int):
        super().__init__(f"needs ~{needed} digits, budget is {budget}")
        self.needed = needed
        self.budget = budget


class NotMonicCubic(DescentError, ValueError):
    pass


class SingularCurve(DescentError, ValueError):
    pass


class CommonRoots(DescentError, ValueError):
    pass


class NotBinomial(DescentError, ValueError):
    pass


class UnsupportedShape(DescentError, ValueError):
    pass


class ZeroScale(DescentError, ValueError):
    pass


class AdapterError(DescentError):
    pass


class AdapterUnavailable(AdapterError):
    pass


class AdapterProtocolError(AdapterError):
    pass


class AdapterTimeout(AdapterError):
    pass


class CacheCorrupt(DescentError):
    pass


class CacheCorruptWarning(UserWarning):
    pass
