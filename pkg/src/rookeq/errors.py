"""Exception types raised by rookeq."""


class RookeqError(ValueError):
    """Base class; every error here is an invalid-input condition."""


class InvalidPartitionError(RookeqError):
    pass


class InvalidTransformError(RookeqError):
    pass


class NotEquivalentError(RookeqError):
    pass


class PreconditionError(RookeqError):
    pass
