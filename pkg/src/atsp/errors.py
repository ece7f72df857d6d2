"""Exception types shared across the package."""


class AtspError(Exception):
    """Base class for all library errors."""


class InvalidRegionError(AtspError):
    """A region violates its structural invariants."""


class InvalidInstanceError(AtspError):
    """An instance cannot be evaluated (e.g. no regions)."""


class InvalidArgumentError(AtspError):
    """An argument is structurally wrong (asymmetric matrix, wrong kind, ...)."""


class TooLargeError(AtspError):
    """A size guard was exceeded; the message names the guard."""


class PackingTooDenseError(AtspError):
    """Rejection sampling could not place disjoint disks."""


class ParseError(AtspError):
    """An instance file is malformed; the message carries a location."""


class UnsupportedKindError(ParseError):
    """An instance file names a region kind this library does not support."""
