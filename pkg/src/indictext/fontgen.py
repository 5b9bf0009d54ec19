"""Deterministic procedural glyphs for fixture and reference fonts.

No hand-drawn artwork ships with the package; glyph bitmaps are derived
from the grid position with SHA-256 so they are distinct per cell, stable
across platforms and Python versions, and regenerable byte for byte.
"""

from __future__ import annotations

import hashlib

from .codetable import GRID, Level
from .fontlib import bytes_per_glyph


def glyph_bitmap(row: int, cell: int, size: int) -> bytes:
    """Packed bitmap for one grid cell: a border plus a cell-specific fill."""
    per_row = size // 8
    bitmap = bytearray(bytes_per_glyph(size))
    seed = f"{row}:{cell}:{size}".encode("ascii")
    fill = hashlib.sha256(seed).digest()
    while len(fill) < len(bitmap):
        fill += hashlib.sha256(fill).digest()

    def set_px(x: int, y: int) -> None:
        bitmap[y * per_row + (x >> 3)] |= 0x80 >> (x & 7)

    for i in range(size):
        set_px(i, 0)
        set_px(i, size - 1)
        set_px(0, i)
        set_px(size - 1, i)
    # sparse interior texture: one bit in three from the digest stream
    for y in range(2, size - 2, 2):
        for x in range(2, size - 2):
            idx = y * size + x
            if fill[idx % len(fill)] % 3 == 0:
                set_px(x, y)
    return bytes(bitmap)


def build_bank(base_row: int, last_row: int, size: int) -> bytes:
    """Bank blob covering rows base_row..last_row, every cell populated."""
    blob = bytearray()
    for row in range(base_row, last_row + 1):
        for cell in range(1, GRID + 1):
            blob += glyph_bitmap(row, cell, size)
    return bytes(blob)


def build_full_grid_banks(size: int) -> dict[Level, bytes]:
    """Two banks that together tile the whole 94x94 grid.

    The level-2 bank starts at row 56, matching the IFNT base-row rule.
    """
    return {
        Level.L1: build_bank(1, 55, size),
        Level.L2: build_bank(56, GRID, size),
    }
