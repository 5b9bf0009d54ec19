"""Internal and interchange byte codecs, plus parallel-block transliteration.

Internal streams mix single-byte ASCII with double-byte pairs whose bytes
both sit in [0xA1, 0xFE]; bytes in [0x80, 0xA0] and 0xFF never occur.  The
interchange form strips the high bit from every pair byte (so the stream is
7-bit clean) and frames double-byte runs with SO/SI shift controls, the
mechanism historically used to put such codes on 7-bit links.

Transliteration between parallel script blocks maps each character by a
fixed scalar offset; characters without a counterpart in the other block
are handled by a configurable fallback.
"""

from __future__ import annotations

from collections.abc import Sequence

from .codetable import AbstractChar, CodeTable
from .errors import (
    ByteRangeError,
    FramingError,
    IllegalByte,
    InvalidTrail,
    NoCounterpart,
    NotAssigned,
    TruncatedPair,
    UnassignedCode,
)
from .textfmt import is_ascii_token

SO = 0x0E  # shift out: start of a double-byte region
SI = 0x0F  # shift in: back to ASCII

LEAD_LO, LEAD_HI = 0xA1, 0xFE
INTER_LO, INTER_HI = 0x21, 0x7E

# (from_script, to_script) -> scalar offset.  The Devanagari and Bengali
# blocks sit 0x80 apart, column for column.
PARALLEL_PAIRS: dict[tuple[str, str], int] = {
    ("devanagari", "bengali"): 0x80,
    ("bengali", "devanagari"): -0x80,
}


def register_parallel_pair(from_script: str, to_script: str, offset: int) -> None:
    PARALLEL_PAIRS[(from_script, to_script)] = offset
    PARALLEL_PAIRS[(to_script, from_script)] = -offset


def _resolve(token: str, table: CodeTable) -> AbstractChar:
    if len(token) == 1:
        char = table.char_for_scalar(ord(token))
        if char is None:
            raise NotAssigned(f"character {token!r} (U+{ord(token):04X}) not in table")
        return char
    return table.char(token)


def encode_internal(text: Sequence[str], table: CodeTable) -> bytes:
    """Encode a token sequence to internal bytes.

    ASCII tokens pass through as single bytes; every other token must be
    assigned in the table and becomes its two-byte internal code.
    """
    out = bytearray()
    for token in text:
        if is_ascii_token(token):
            out.append(ord(token))
        else:
            char = _resolve(token, table)
            out += table.lookup_char(char.char_id).internal
    return bytes(out)


def decode_internal(stream: bytes, table: CodeTable, lossy: bool = False,
                    replacement: str = "?") -> list[str]:
    """Decode internal bytes to a token list.

    Strict by default: malformed input raises with the byte offset.  In
    lossy mode the offending unit is replaced and decoding continues.
    """
    tokens: list[str] = []
    i = 0
    n = len(stream)
    while i < n:
        b = stream[i]
        if b < 0x80:
            tokens.append(chr(b))
            i += 1
            continue
        if b < LEAD_LO or b == 0xFF:
            if lossy:
                tokens.append(replacement)
                i += 1
                continue
            raise IllegalByte(f"byte 0x{b:02X} is not valid internal code", offset=i)
        if i + 1 >= n:
            if lossy:
                tokens.append(replacement)
                i += 1
                continue
            raise TruncatedPair("lead byte at end of stream", offset=i)
        t = stream[i + 1]
        if not (LEAD_LO <= t <= LEAD_HI):
            if lossy:
                tokens.append(replacement)
                i += 1
                continue
            raise InvalidTrail(
                f"trail byte 0x{t:02X} outside [0xA1, 0xFE]", offset=i + 1
            )
        row, cell = b - 0xA0, t - 0xA0
        try:
            char = table.lookup_code((row, cell))
        except UnassignedCode:
            if lossy:
                tokens.append(replacement)
                i += 2
                continue
            raise UnassignedCode(
                f"pair (0x{b:02X}, 0x{t:02X}) maps to unassigned cell "
                f"({row}, {cell})", offset=i
            ) from None
        tokens.append(char.char_id)
        i += 2
    return tokens


def internal_to_interchange(stream: bytes) -> bytes:
    """Convert internal bytes to the 7-bit interchange form.

    Double-byte runs are wrapped in SO/SI and each pair byte drops 0x80.
    Raw SO/SI bytes in the ASCII portion cannot be represented and raise.
    """
    out = bytearray()
    shifted = False
    i = 0
    n = len(stream)
    while i < n:
        b = stream[i]
        if b < 0x80:
            if b in (SO, SI):
                raise ByteRangeError(
                    f"ASCII byte 0x{b:02X} collides with shift framing", offset=i
                )
            if shifted:
                out.append(SI)
                shifted = False
            out.append(b)
            i += 1
            continue
        if b < LEAD_LO or b == 0xFF:
            raise IllegalByte(f"byte 0x{b:02X} is not valid internal code", offset=i)
        if i + 1 >= n:
            raise TruncatedPair("lead byte at end of stream", offset=i)
        t = stream[i + 1]
        if not (LEAD_LO <= t <= LEAD_HI):
            raise InvalidTrail(f"trail byte 0x{t:02X} outside [0xA1, 0xFE]", offset=i + 1)
        if not shifted:
            out.append(SO)
            shifted = True
        out.append(b - 0x80)
        out.append(t - 0x80)
        i += 2
    if shifted:
        out.append(SI)
    return bytes(out)


def interchange_to_internal(stream: bytes) -> bytes:
    """Inverse of internal_to_interchange; accepts any valid framing."""
    out = bytearray()
    shifted = False
    pending: int | None = None
    for i, b in enumerate(stream):
        if b >= 0x80:
            raise ByteRangeError(
                f"byte 0x{b:02X} in 7-bit interchange stream", offset=i
            )
        if not shifted:
            if b == SO:
                shifted = True
            elif b == SI:
                raise FramingError("shift-in outside a shifted region", offset=i)
            else:
                out.append(b)
            continue
        # inside a shifted region
        if b == SI:
            if pending is not None:
                raise FramingError("shift-in splits a double-byte pair", offset=i)
            shifted = False
        elif b == SO:
            raise FramingError("nested shift-out", offset=i)
        elif not (INTER_LO <= b <= INTER_HI):
            raise ByteRangeError(
                f"byte 0x{b:02X} outside [0x21, 0x7E] in shifted region", offset=i
            )
        elif pending is None:
            pending = b
        else:
            out.append(pending + 0x80)
            out.append(b + 0x80)
            pending = None
    if shifted:
        raise FramingError("unterminated shifted region", offset=len(stream))
    return bytes(out)


def transliterate_parallel(text: Sequence[str], from_script: str, to_script: str,
                           table: CodeTable, fallback: str = "strict") -> list[str]:
    """Map chars of one script to the parallel block of another.

    Fallbacks for chart holes: ``strict`` raises NoCounterpart,
    ``passthrough`` copies the source char, ``mark`` prefixes it with '*'.
    """
    if fallback not in ("strict", "passthrough", "mark"):
        raise ValueError(f"unknown fallback {fallback!r}")
    try:
        offset = PARALLEL_PAIRS[(from_script, to_script)]
    except KeyError:
        raise NoCounterpart(
            f"scripts {from_script!r} and {to_script!r} are not a registered "
            "parallel pair"
        ) from None
    out: list[str] = []
    for token in text:
        if is_ascii_token(token):
            out.append(token)
            continue
        char = _resolve(token, table)
        if char.script != from_script:
            out.append(token)
            continue
        target = table.char_for_scalar(char.universal_scalar + offset)
        if target is not None and target.script == to_script:
            out.append(target.char_id)
        elif fallback == "passthrough":
            out.append(token)
        elif fallback == "mark":
            out.append("*")
            out.append(token)
        else:
            raise NoCounterpart(
                f"{char.char_id} (U+{char.universal_scalar:04X}) has no "
                f"{to_script} counterpart"
            )
    return out
