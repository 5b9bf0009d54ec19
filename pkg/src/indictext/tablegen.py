"""Builders for the reference code tables.

Two tables matter here.  The Indic reference table is the desk-scale chart
this package ships: Devanagari in the first level, Bengali substituted
into the second level, plus a small Telugu block.  The Devanagari and
Bengali scalars sit exactly 0x80 apart column for column, and the chart
deliberately keeps the real holes (Bengali has no LLA or VA slot and no
dandas of its own) so transliteration fallbacks have something to hit.

The GB-style table reproduces the classical two-level census: 3755
level-1 and 3008 level-2 characters, 6763 in all, filling rows 16..55 and
56..87.  Rows 1..9 stay reserved for punctuation and digits.
"""

from __future__ import annotations

from .codetable import (
    GRID,
    AbstractChar,
    Bank,
    CodeTable,
    Level,
    make_char_id,
)

# (display name, Devanagari scalar, has Bengali counterpart at +0x80)
_LETTER_COLUMNS: list[tuple[str, int, bool]] = [
    ("CANDRABINDU", 0x0901, True),
    ("ANUSVARA", 0x0902, True),
    ("VISARGA", 0x0903, True),
    ("A", 0x0905, True),
    ("AA", 0x0906, True),
    ("I", 0x0907, True),
    ("II", 0x0908, True),
    ("U", 0x0909, True),
    ("UU", 0x090A, True),
    ("VOCALIC_R", 0x090B, True),
    ("E", 0x090F, True),
    ("AI", 0x0910, True),
    ("O", 0x0913, True),
    ("AU", 0x0914, True),
    ("KA", 0x0915, True),
    ("KHA", 0x0916, True),
    ("GA", 0x0917, True),
    ("GHA", 0x0918, True),
    ("NGA", 0x0919, True),
    ("CA", 0x091A, True),
    ("CHA", 0x091B, True),
    ("JA", 0x091C, True),
    ("JHA", 0x091D, True),
    ("NYA", 0x091E, True),
    ("TTA", 0x091F, True),
    ("TTHA", 0x0920, True),
    ("DDA", 0x0921, True),
    ("DDHA", 0x0922, True),
    ("NNA", 0x0923, True),
    ("TA", 0x0924, True),
    ("THA", 0x0925, True),
    ("DA", 0x0926, True),
    ("DHA", 0x0927, True),
    ("NA", 0x0928, True),
    ("PA", 0x092A, True),
    ("PHA", 0x092B, True),
    ("BA", 0x092C, True),
    ("BHA", 0x092D, True),
    ("MA", 0x092E, True),
    ("YA", 0x092F, True),
    ("RA", 0x0930, True),
    ("LA", 0x0932, True),
    ("LLA", 0x0933, False),  # U+09B3 is a hole in the Bengali block
    ("VA", 0x0935, False),   # U+09B5 likewise
    ("SHA", 0x0936, True),
    ("SSA", 0x0937, True),
    ("SA", 0x0938, True),
    ("HA", 0x0939, True),
]

_SIGN_COLUMNS: list[tuple[str, int, bool]] = [
    ("AA_SIGN", 0x093E, True),
    ("I_SIGN", 0x093F, True),
    ("II_SIGN", 0x0940, True),
    ("U_SIGN", 0x0941, True),
    ("UU_SIGN", 0x0942, True),
    ("E_SIGN", 0x0947, True),
    ("AI_SIGN", 0x0948, True),
    ("O_SIGN", 0x094B, True),
    ("AU_SIGN", 0x094C, True),
    ("VIRAMA", 0x094D, True),
    ("DANDA", 0x0964, False),         # Bengali reuses the Devanagari danda
    ("DOUBLE_DANDA", 0x0965, False),
    ("D0", 0x0966, True),
    ("D1", 0x0967, True),
    ("D2", 0x0968, True),
    ("D3", 0x0969, True),
    ("D4", 0x096A, True),
    ("D5", 0x096B, True),
    ("D6", 0x096C, True),
    ("D7", 0x096D, True),
    ("D8", 0x096E, True),
    ("D9", 0x096F, True),
    # conjunct presentation form; no single scalar exists, so private use
    ("KSSA", 0xE000, True),
]

_TELUGU_CHARS: list[tuple[str, int]] = [
    ("ANUSVARA", 0x0C02),
    ("A", 0x0C05),
    ("KA", 0x0C15),
    ("CA", 0x0C1A),
    ("TA", 0x0C24),
    ("DA", 0x0C26),
    ("NA", 0x0C28),
    ("PA", 0x0C2A),
    ("MA", 0x0C2E),
    ("RA", 0x0C30),
    ("VA", 0x0C35),
    ("SA", 0x0C38),
    ("HA", 0x0C39),
    ("AA_SIGN", 0x0C3E),
    ("II_SIGN", 0x0C40),
    ("U_SIGN", 0x0C41),
    ("VIRAMA", 0x0C4D),
]

DEVANAGARI_ROWS = (16, 17)
TELUGU_ROW = 20
BENGALI_ROWS = (56, 57)
BENGALI_OFFSET = 0x80


def _char(script: str, name: str, scalar: int) -> AbstractChar:
    return AbstractChar(make_char_id(script, name), script, scalar, name)


def build_indic_reference_table() -> CodeTable:
    """Devanagari-in-L1 / Bengali-in-L2 chart with a Telugu block."""
    entries: list[tuple[AbstractChar, tuple[int, int]]] = []

    for row, columns in zip(DEVANAGARI_ROWS, (_LETTER_COLUMNS, _SIGN_COLUMNS)):
        for cell, (name, scalar, _) in enumerate(columns, start=1):
            entries.append((_char("devanagari", name, scalar), (row, cell)))

    for row, columns in zip(BENGALI_ROWS, (_LETTER_COLUMNS, _SIGN_COLUMNS)):
        cell = 0
        for name, scalar, has_counterpart in columns:
            if not has_counterpart:
                continue
            cell += 1
            entries.append(
                (_char("bengali", name, scalar + BENGALI_OFFSET), (row, cell))
            )

    for cell, (name, scalar) in enumerate(_TELUGU_CHARS, start=1):
        entries.append((_char("telugu", name, scalar), (TELUGU_ROW, cell)))

    banks = (
        Bank("devanagari", Level.L1, DEVANAGARI_ROWS[0], DEVANAGARI_ROWS[-1]),
        Bank("telugu", Level.L1, TELUGU_ROW, TELUGU_ROW),
        Bank("bengali", Level.L2, BENGALI_ROWS[0], BENGALI_ROWS[-1]),
    )
    return CodeTable(entries, banks=banks)


GB_L1_COUNT = 3755
GB_L2_COUNT = 3008
GB_L1_FIRST_ROW = 16
GB_L2_FIRST_ROW = 56
GB_SCALAR_BASE = 0x4E00


def build_gb_style_table() -> CodeTable:
    """Synthetic two-level census table: 3755 + 3008 = 6763 characters."""
    entries: list[tuple[AbstractChar, tuple[int, int]]] = []
    for i in range(GB_L1_COUNT):
        row = GB_L1_FIRST_ROW + i // GRID
        cell = 1 + i % GRID
        entries.append(
            (_char("han", f"HAN{i:04d}", GB_SCALAR_BASE + i), (row, cell))
        )
    for j in range(GB_L2_COUNT):
        row = GB_L2_FIRST_ROW + j // GRID
        cell = 1 + j % GRID
        entries.append(
            (
                _char("han", f"HAN{GB_L1_COUNT + j:04d}",
                      GB_SCALAR_BASE + GB_L1_COUNT + j),
                (row, cell),
            )
        )
    banks = (
        Bank("han", Level.L1, GB_L1_FIRST_ROW, 55),
        Bank("han", Level.L2, GB_L2_FIRST_ROW, 87),
    )
    return CodeTable(entries, banks=banks)
