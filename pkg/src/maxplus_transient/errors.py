"""Exception hierarchy shared by all modules."""


class TransienceError(Exception):
    """Base class for every error raised by this package."""


class InputError(TransienceError, ValueError):
    """Malformed input: dimension mismatch, bad index, reducible matrix, ..."""


class CapacityError(TransienceError):
    """An exact exponential search was asked to run beyond its node cap."""


class PreconditionError(TransienceError):
    """A bound was requested on an instance outside its domain of validity."""


class HorizonError(TransienceError):
    """The transient oracle did not observe stabilization below its horizon.

    The horizon is derived from proven transience bounds, so this signals a
    bug in a bound (or in the oracle), never a legitimate outcome.
    """
