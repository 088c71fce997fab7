"""Exception hierarchy shared by all modules."""


class TilingError(Exception):
    """Base class for every error raised by this package."""


class FormatError(TilingError, ValueError):
    """Malformed or unsupported serialized input."""


# core
class DisconnectedCells(TilingError, ValueError):
    pass


class BoundaryIncomplete(TilingError, ValueError):
    pass


class BoundaryExtraneous(TilingError, ValueError):
    pass


class UnknownTileId(TilingError, KeyError):
    pass


# tilesets
class OverrideOnExternalEdge(TilingError, ValueError):
    pass


class ParallelSidesEqual(TilingError, ValueError):
    pass


# reduction
class InstanceError(TilingError, ValueError):
    """Base for invalid Cubic Monotone 1-in-3 SAT instances."""


class NotCubic(InstanceError):
    pass


class NegationPresent(InstanceError):
    pass


class ClauseArity(InstanceError):
    pass


class CountMismatch(InstanceError):
    pass


class WidthOutOfRange(TilingError, ValueError):
    pass


# solver
class NotOneInThree(TilingError, ValueError):
    pass


class MalformedVariableColumn(TilingError, ValueError):
    pass


# polytime
class NotDistinguishable(TilingError, ValueError):
    pass


class NotCornerDistinguishable(TilingError, ValueError):
    pass


class NotBarCase(TilingError, ValueError):
    pass


class TooManyTiles(TilingError, ValueError):
    pass


# satcheck
class LengthMismatch(TilingError, ValueError):
    pass


class TooLarge(TilingError, ValueError):
    pass


class SolverAborted(TilingError, RuntimeError):
    pass


# cli
class InvalidTiling(TilingError, ValueError):
    """A tiling handed to the renderer does not fit its region."""
