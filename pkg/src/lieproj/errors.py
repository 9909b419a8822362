class LieProjError(Exception):
    """Base class for library errors."""


class ParseError(LieProjError, ValueError):
    pass


class InvalidTypeError(LieProjError, ValueError):
    """Unknown series or a rank outside the series' valid range."""


class NonDominantWeightError(LieProjError, ValueError):
    pass


class DimensionCapError(LieProjError):
    """The requested module is larger than the configured dimension cap."""


class InvariantError(LieProjError, RuntimeError):
    """An internal consistency check failed; indicates a bug upstream."""
