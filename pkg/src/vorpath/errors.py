"""Exception types shared across the package."""

from __future__ import annotations


class VorpathError(Exception):
    """Base class for all errors raised by this package."""


class NotTangentError(VorpathError):
    """Two disks expected to touch are not tangent within tolerance."""


class DegenerateInputError(VorpathError):
    """Input point set cannot support a diagram (too few / collinear)."""


class DegenerateInsertionError(VorpathError):
    """An insertion produced a conflict region the structure cannot represent."""


class InvalidHintError(VorpathError):
    """Insertion hint refers to a site that is not live."""


class HiddenSiteError(VorpathError):
    """Query addressed to a site that owns no cell."""


class NotAdjacentError(VorpathError):
    """Two sites expected to share a cell boundary do not."""


class UnboundedBisectorError(VorpathError):
    """The shared bisector arc is unbounded (no enclosing frame)."""


class NoPathError(VorpathError):
    """No secure path exists between the requested endpoints."""


class CsvParseError(VorpathError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class TooFewPointsError(VorpathError):
    """A point file held fewer points than the minimum supported."""


class TooFewInteriorError(VorpathError):
    """Endpoint selection found fewer than two points in the interior window."""


class TooLargeError(VorpathError):
    """Brute-force oracle asked to handle more points than its size cap."""
