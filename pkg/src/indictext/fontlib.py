"""Packed bitmap font banks and monochrome line rendering.

Font files hold flat banks of fixed-size glyph bitmaps, one slot per grid
cell, addressed purely by offset arithmetic.  Supported sizes are 16, 24
and 48 pixels square (32, 72 and 288 bytes per glyph).  Bitmaps are
row-major, most significant bit first, size/8 bytes per row.

IFNT file layout (16-byte header, fixed):

    bytes 0..3   magic "IFNT"
    byte  4      glyph size in pixels (16, 24 or 48)
    byte  5      bank count (1 or 2)
    per bank     u8 level (1 or 2), u32 little-endian byte length
    padding      zero bytes up to offset 16
    body         bank data, in header order, contiguous

A level-1 bank starts at grid row 1, a level-2 bank at row 56 (the default
level boundary).  A glyph's slot inside its bank is

    ((row - bank_base_row) * 94 + (cell - 1)) * bytes_per_glyph

which for a bank based at row 1 is the familiar full-grid formula.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass

from .codetable import GRID, CodePoint, Level
from .errors import (
    BadMagic,
    LengthNotMultiple,
    OutOfBank,
    SizeMismatch,
    TruncatedBank,
)

MAGIC = b"IFNT"
HEADER_SIZE = 16
SIZES = (16, 24, 48)
BANK_BASE_ROW = {Level.L1: 1, Level.L2: 56}


def bytes_per_glyph(size: int) -> int:
    if size not in SIZES:
        raise ValueError(f"unsupported glyph size {size}; expected one of {SIZES}")
    return size * size // 8


def glyph_offset(codepoint: CodePoint, size: int) -> int:
    """Byte offset of a glyph in a full 94x94 bank (grid row 1 base)."""
    return ((codepoint.row - 1) * GRID + (codepoint.cell - 1)) * bytes_per_glyph(size)


@dataclass(frozen=True)
class BankRegion:
    level: Level
    start: int  # into the body blob
    length: int
    base_row: int


class FontLibrary:
    """Immutable view over a loaded font file."""

    def __init__(self, size: int, body: bytes, banks: list[BankRegion]):
        self.size = size
        self.bytes_per_glyph = bytes_per_glyph(size)
        self._body = body
        self.banks = {bank.level: bank for bank in banks}

    def get_glyph(self, codepoint: CodePoint) -> bytes:
        """The packed bitmap for one code point."""
        bank = self.banks.get(codepoint.level)
        if bank is None:
            raise OutOfBank(f"font has no {codepoint.level.name} bank")
        slot = (codepoint.row - bank.base_row) * GRID + (codepoint.cell - 1)
        offset = slot * self.bytes_per_glyph
        if slot < 0 or offset + self.bytes_per_glyph > bank.length:
            raise OutOfBank(
                f"({codepoint.row}, {codepoint.cell}) outside the "
                f"{codepoint.level.name} bank"
            )
        start = bank.start + offset
        return self._body[start:start + self.bytes_per_glyph]


def write_font(path: str | os.PathLike, size: int,
               banks: dict[Level, bytes]) -> None:
    """Write an IFNT file from per-level bank blobs."""
    bpg = bytes_per_glyph(size)
    header = bytearray(MAGIC)
    header.append(size)
    header.append(len(banks))
    ordered = sorted(banks.items(), key=lambda kv: kv[0].value)
    for level, blob in ordered:
        if len(blob) % bpg:
            raise LengthNotMultiple(
                f"{level.name} bank length {len(blob)} is not a multiple of {bpg}"
            )
        header.append(level.value)
        header += struct.pack("<I", len(blob))
    if len(header) > HEADER_SIZE:
        raise ValueError("too many banks for the fixed header")
    header += bytes(HEADER_SIZE - len(header))
    with open(path, "wb") as fh:
        fh.write(header)
        for _, blob in ordered:
            fh.write(blob)


def load_font(path: str | os.PathLike, size: int | None = None) -> FontLibrary:
    """Load and validate an IFNT font file."""
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < HEADER_SIZE or data[:4] != MAGIC:
        raise BadMagic(f"{path}: not an IFNT font file")
    file_size = data[4]
    if file_size not in SIZES:
        raise BadMagic(f"{path}: glyph size {file_size} not in {SIZES}")
    if size is not None and size != file_size:
        raise SizeMismatch(f"{path}: file holds {file_size}px glyphs, wanted {size}px")
    bank_count = data[5]
    if not (1 <= bank_count <= 2):
        raise BadMagic(f"{path}: bank count {bank_count} out of range")
    bpg = bytes_per_glyph(file_size)
    banks: list[BankRegion] = []
    pos = 6
    start = 0
    for _ in range(bank_count):
        level_byte = data[pos]
        length = struct.unpack_from("<I", data, pos + 1)[0]
        pos += 5
        try:
            level = Level(level_byte)
        except ValueError:
            raise BadMagic(f"{path}: bad bank level byte {level_byte}") from None
        if length % bpg:
            raise LengthNotMultiple(
                f"{path}: {level.name} bank length {length} is not a "
                f"multiple of {bpg}"
            )
        banks.append(BankRegion(level, start, length, BANK_BASE_ROW[level]))
        start += length
    body = data[HEADER_SIZE:]
    declared = sum(b.length for b in banks)
    if len(body) < declared:
        raise TruncatedBank(
            f"{path}: body holds {len(body)} bytes, banks declare {declared}"
        )
    if len(body) > declared:
        raise LengthNotMultiple(
            f"{path}: {len(body) - declared} trailing bytes after the last bank"
        )
    if len({b.level for b in banks}) != len(banks):
        raise BadMagic(f"{path}: duplicate bank level")
    return FontLibrary(file_size, body, banks)


class Raster:
    """Packed monochrome raster, rows padded to whole bytes."""

    def __init__(self, width: int, height: int):
        if width < 0 or height < 0:
            raise ValueError("raster dimensions must be non-negative")
        self.width = width
        self.height = height
        self.row_bytes = (width + 7) // 8
        self.bits = bytearray(self.row_bytes * height)

    def set_pixel(self, x: int, y: int) -> None:
        if 0 <= x < self.width and 0 <= y < self.height:
            self.bits[y * self.row_bytes + (x >> 3)] |= 0x80 >> (x & 7)

    def get_pixel(self, x: int, y: int) -> int:
        if not (0 <= x < self.width and 0 <= y < self.height):
            return 0
        return (self.bits[y * self.row_bytes + (x >> 3)] >> (7 - (x & 7))) & 1

    def blit_or(self, glyph: bytes, size: int, x0: int, y0: int) -> None:
        """OR a packed size*size glyph onto the raster, clipping at edges."""
        per_row = size // 8
        for gy in range(size):
            y = y0 + gy
            if not (0 <= y < self.height):
                continue
            base = gy * per_row
            for gx in range(size):
                if (glyph[base + (gx >> 3)] >> (7 - (gx & 7))) & 1:
                    self.set_pixel(x0 + gx, y)

    def to_pbm(self) -> bytes:
        header = f"P4\n{self.width} {self.height}\n".encode("ascii")
        return header + bytes(self.bits)

    @classmethod
    def from_pbm(cls, data: bytes) -> "Raster":
        if not data.startswith(b"P4"):
            raise BadMagic("not a binary PBM (P4) file")
        # header: magic, whitespace, width, whitespace, height, single whitespace
        fields: list[int] = []
        i = 2
        while len(fields) < 2:
            while i < len(data) and data[i:i + 1].isspace():
                i += 1
            if data[i:i + 1] == b"#":
                while i < len(data) and data[i] != 0x0A:
                    i += 1
                continue
            j = i
            while j < len(data) and not data[j:j + 1].isspace():
                j += 1
            fields.append(int(data[i:j]))
            i = j
        i += 1  # the single whitespace after the height
        raster = cls(fields[0], fields[1])
        expected = raster.row_bytes * raster.height
        raster.bits[:] = data[i:i + expected]
        if len(raster.bits) != expected:
            raise TruncatedBank("PBM body shorter than width*height")
        return raster


@dataclass(frozen=True)
class PositionedGlyph:
    """One glyph placement, as produced by shaping.

    ``glyph_code`` None is an advance-only spacer (used for ASCII).
    Offsets are relative to the current pen position; ``advance`` moves
    the pen after the glyph is placed.
    """

    glyph_code: CodePoint | None
    dx: int = 0
    dy: int = 0
    advance: int = 0

    def __post_init__(self):
        if self.advance < 0:
            raise ValueError("advance must be >= 0")


def render_line(shaped: list[PositionedGlyph], lib: FontLibrary) -> Raster:
    """Blit a shaped glyph sequence onto a fresh raster.

    Width is the sum of advances, height the font size.  Overlapping
    glyphs combine with OR so wrapping vowel signs can overlay their host.
    """
    width = sum(pg.advance for pg in shaped)
    raster = Raster(width, lib.size)
    pen = 0
    for pg in shaped:
        if pg.glyph_code is not None:
            glyph = lib.get_glyph(pg.glyph_code)
            raster.blit_or(glyph, lib.size, pen + pg.dx, pg.dy)
        pen += pg.advance
    return raster
