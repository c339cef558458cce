"""Exception types raised across the package."""


class DiscordError(ValueError):
    """Base class for all validation errors raised by this package."""


class InvalidDistribution(DiscordError):
    pass


class NegativeEntry(InvalidDistribution):
    pass


class NotNormalized(InvalidDistribution):
    pass


class NotSquare(DiscordError):
    pass


class ColumnNotNormalized(DiscordError):
    pass


class DimensionMismatch(DiscordError):
    pass


class OutOfRange(DiscordError):
    pass


class SizeMismatch(DiscordError):
    pass


class InvalidWeights(DiscordError):
    pass


class EmptyFamily(DiscordError):
    pass


class DimensionTooLarge(DiscordError):
    pass


class NumericalFailure(ArithmeticError):
    """A numerical routine failed to converge or produced a bad residual."""
