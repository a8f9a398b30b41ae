"""Exception types raised across the package."""


class DemhopError(ValueError):
    """Base class for all validation errors raised by demhop."""


class InvalidWindowError(DemhopError):
    """A window, word or hop list is malformed for the declared family and rank."""


class RankMismatchError(DemhopError):
    """Two operands of a binary operation have different ranks."""


class MalformedUnfoldingError(DemhopError):
    """A length-2n window is not anti-symmetric, so it cannot be folded."""


class CapacityError(DemhopError):
    """A request exceeds a configured enumeration bound."""
