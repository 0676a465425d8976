"""Typed errors shared by all flagdom modules.

Every domain failure raises a subclass of :class:`FlagdomError`; the CLI maps
these to exit code 1 (usage errors are exit code 2).
"""


class FlagdomError(Exception):
    """Base class for all domain errors raised by flagdom."""


class InvalidTypeError(FlagdomError):
    """Not a valid simple type (family, rank) pair."""


class UnsupportedFamilyError(FlagdomError):
    """Real form or (form, flag) pair outside the supported families."""


class RankMismatchError(FlagdomError):
    """Operands built over incompatible root systems or coordinate lengths."""


class CapExceededError(FlagdomError):
    """Requested enumeration is larger than the configured cap."""


class DominanceError(FlagdomError):
    """A weight violated a dominance precondition."""


class DegreeMismatchError(FlagdomError):
    """Dimension/degree precondition of a pairing or intersection failed."""


class ExceptionalOrbitError(FlagdomError):
    """Operation requires a Generic orbit; see classify_exception."""


class ConsistencyError(FlagdomError):
    """Internal consistency check failed; signals a data-table bug."""


class TableFormatError(FlagdomError):
    """Bundled data table is malformed or fails its checksum."""
