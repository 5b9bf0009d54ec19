"""Error hierarchy shared by all modules.

Every data-level failure derives from :class:`DataError` so the CLI and the
HTTP service can map them uniformly (exit code 1 / status 422).  Errors that
point at a position in a byte stream carry the offset.
"""

from __future__ import annotations


class DataError(Exception):
    """Base class for all data errors raised by this package."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset

    @property
    def error_name(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        base = super().__str__()
        if self.offset is not None:
            return f"{base} (at byte offset {self.offset})"
        return base


# -- code table -------------------------------------------------------------

class TableError(DataError):
    pass


class TableParseError(TableError):
    pass


class DuplicateCode(TableError):
    pass


class DuplicateChar(TableError):
    pass


class RowOutOfRange(TableError):
    pass


class BankOverlap(TableError):
    pass


class OutsideBank(TableError):
    pass


class NotAssigned(TableError):
    pass


class UnassignedCode(TableError):
    pass


# -- codec ------------------------------------------------------------------

class CodecError(DataError):
    pass


class TruncatedPair(CodecError):
    pass


class InvalidTrail(CodecError):
    pass


class IllegalByte(CodecError):
    pass


class FramingError(CodecError):
    pass


class ByteRangeError(CodecError):
    pass


class NoCounterpart(CodecError):
    pass


# -- font library -----------------------------------------------------------

class FontError(DataError):
    pass


class BadMagic(FontError):
    pass


class LengthNotMultiple(FontError):
    pass


class TruncatedBank(FontError):
    pass


class OutOfBank(FontError):
    pass


class SizeMismatch(FontError):
    pass


# -- shaping ----------------------------------------------------------------

class ShapingError(DataError):
    pass


class RuleError(ShapingError):
    pass


class UnknownChar(ShapingError):
    pass


class NotDecomposable(ShapingError):
    pass


# -- input method -----------------------------------------------------------

class ImeError(DataError):
    pass


class ConversionTableError(ImeError):
    pass


class InvalidKey(ImeError):
    pass


class IndexOutOfRange(ImeError):
    pass


# -- gloss resources --------------------------------------------------------

class ResourceError(DataError):
    pass


class MissingResources(ResourceError):
    pass
