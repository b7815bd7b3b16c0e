"""Exception hierarchy shared by all modules."""


class BolError(Exception):
    """Base class for errors raised by bolpq."""


class InvalidPrimes(BolError, ValueError):
    pass


class DivisionByZero(BolError, ZeroDivisionError):
    pass


class NoRootOfUnity(BolError):
    """q does not divide p**2 - 1, so F_{p^2} holds no primitive q-th root of unity."""


class NotRealSolution(BolError, ValueError):
    """The parameter gamma yields a sequence outside the base field."""


class BadGamma(BolError, ValueError):
    """The parameter gamma yields a sequence containing 0 or -1 ratios."""


class InvalidTheta(BolError, ValueError):
    pass


class NotCompleteMapping(BolError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotUniquelyTwoDivisible(BolError):
    pass


class NotBolStructure(BolError):
    pass


class EnumerationLimit(BolError):
    pass


class IncompatibleOrders(BolError, ValueError):
    pass


class RequiresBruck(BolError, ValueError):
    pass
