"""Two-level 94x94 double-byte code space.

A code table is a bijection between abstract characters and positions in a
94x94 grid.  The grid is split into two levels at a configurable row
boundary (default: rows 1..55 are level 1, rows 56..94 are level 2), in the
tradition of frequency-ordered double-byte character sets.  Internal code
bytes are obtained by adding 0xA0 to the row and cell numbers, which keeps
both bytes of every pair in [0xA1, 0xFE] and clear of the ASCII range.

Table definition files are UTF-8 text, one entry per line::

    row<TAB>cell<TAB>hex_scalar<TAB>script<TAB>display_name

``#`` starts a comment; ``#!`` lines are header directives (``boundary``,
``bank``).  See ``FORMATS.md`` in the repository root.
"""

from __future__ import annotations

import io
import os
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    BankOverlap,
    DuplicateChar,
    DuplicateCode,
    NotAssigned,
    OutsideBank,
    RowOutOfRange,
    TableParseError,
    UnassignedCode,
)

GRID = 94
DEFAULT_BOUNDARY = 55  # last level-1 row
RESERVED_ROWS = range(1, 10)  # punctuation/digit rows; may be left unused

# Short codes used inside char ids, mapped to canonical script names.
SCRIPT_CODES = {
    "devanagari": "deva",
    "bengali": "beng",
    "telugu": "telu",
    "latin": "latn",
    "han": "hani",
    "symbols": "zsym",
}
_CODE_TO_SCRIPT = {v: k for k, v in SCRIPT_CODES.items()}


class Level(Enum):
    L1 = 1
    L2 = 2


def script_code(script: str) -> str:
    return SCRIPT_CODES.get(script, script)


def canonical_script(name: str) -> str:
    return _CODE_TO_SCRIPT.get(name, name)


@dataclass(frozen=True, order=True)
class CodePoint:
    """A position in the two-level code space."""

    row: int
    cell: int
    level: Level = field(compare=False)

    def __post_init__(self):
        if not (1 <= self.row <= GRID and 1 <= self.cell <= GRID):
            raise ValueError(f"row/cell out of range: ({self.row}, {self.cell})")

    @property
    def lead(self) -> int:
        return 0xA0 + self.row

    @property
    def trail(self) -> int:
        return 0xA0 + self.cell

    @property
    def internal(self) -> bytes:
        """The two-byte internal form."""
        return bytes((self.lead, self.trail))


@dataclass(frozen=True)
class AbstractChar:
    char_id: str
    script: str
    universal_scalar: int
    display_name: str


@dataclass(frozen=True)
class Bank:
    """A contiguous row range assigned to one script at one level."""

    script: str  # "*" matches any script
    level: Level
    row_lo: int
    row_hi: int

    def contains(self, row: int) -> bool:
        return self.row_lo <= row <= self.row_hi


@dataclass(frozen=True)
class CoverageStats:
    l1_fraction: float
    l2_fraction: float
    unassigned_fraction: float
    total: int
    empty: bool


def make_char_id(script: str, display_name: str) -> str:
    return f"{script_code(script)}:{display_name}"


class CodeTable:
    """Immutable bijection between abstract characters and code points."""

    def __init__(
        self,
        entries: Iterable[tuple[AbstractChar, tuple[int, int]]],
        boundary: int = DEFAULT_BOUNDARY,
        banks: Iterable[Bank] | None = None,
    ):
        if not (1 <= boundary < GRID):
            raise TableParseError(f"boundary must be in 1..{GRID - 1}, got {boundary}")
        self.boundary = boundary
        self.banks = tuple(banks) if banks is not None else (
            Bank("*", Level.L1, 1, boundary),
            Bank("*", Level.L2, boundary + 1, GRID),
        )
        self._validate_banks()

        self._by_char_id: dict[str, tuple[AbstractChar, CodePoint]] = {}
        self._by_cell: dict[tuple[int, int], AbstractChar] = {}
        self._by_scalar: dict[int, AbstractChar] = {}
        for char, (row, cell) in entries:
            self._insert(char, row, cell)

    # -- construction ---------------------------------------------------

    def _validate_banks(self) -> None:
        for bank in self.banks:
            if not (1 <= bank.row_lo <= bank.row_hi <= GRID):
                raise RowOutOfRange(
                    f"bank {bank.script}/{bank.level.name} rows "
                    f"{bank.row_lo}..{bank.row_hi} outside 1..{GRID}"
                )
            if self.level_of(bank.row_lo) is not bank.level or \
                    self.level_of(bank.row_hi) is not bank.level:
                raise BankOverlap(
                    f"bank {bank.script}/{bank.level.name} straddles the "
                    f"level boundary at row {self.boundary}"
                )
        spans = sorted((b.row_lo, b.row_hi, b) for b in self.banks)
        for (lo1, hi1, b1), (lo2, hi2, b2) in zip(spans, spans[1:]):
            if lo2 <= hi1:
                raise BankOverlap(
                    f"banks {b1.script}/{b1.level.name} and "
                    f"{b2.script}/{b2.level.name} overlap at rows {lo2}..{hi1}"
                )

    def _insert(self, char: AbstractChar, row: int, cell: int) -> None:
        if not (1 <= row <= GRID):
            raise RowOutOfRange(f"row {row} outside 1..{GRID}")
        if not (1 <= cell <= GRID):
            raise RowOutOfRange(f"cell {cell} outside 1..{GRID}")
        if (row, cell) in self._by_cell:
            other = self._by_cell[(row, cell)]
            raise DuplicateCode(
                f"({row}, {cell}) already holds {other.char_id}, "
                f"cannot also hold {char.char_id}"
            )
        if char.char_id in self._by_char_id:
            raise DuplicateChar(f"{char.char_id} assigned twice")
        if char.universal_scalar in self._by_scalar:
            raise DuplicateChar(
                f"scalar U+{char.universal_scalar:04X} assigned twice"
            )
        bank = self._bank_for(row)
        if bank is None:
            raise OutsideBank(
                f"{char.char_id} at row {row} lies outside every declared bank"
            )
        if bank.script != "*" and bank.script != char.script:
            raise OutsideBank(
                f"{char.char_id} ({char.script}) placed in the "
                f"{bank.script} bank at rows {bank.row_lo}..{bank.row_hi}"
            )
        cp = CodePoint(row, cell, self.level_of(row))
        self._by_char_id[char.char_id] = (char, cp)
        self._by_cell[(row, cell)] = char
        self._by_scalar[char.universal_scalar] = char

    def _bank_for(self, row: int) -> Bank | None:
        for bank in self.banks:
            if bank.contains(row):
                return bank
        return None

    # -- queries ----------------------------------------------------------

    def level_of(self, row: int) -> Level:
        if not (1 <= row <= GRID):
            raise RowOutOfRange(f"row {row} outside 1..{GRID}")
        return Level.L1 if row <= self.boundary else Level.L2

    def lookup_char(self, char_id: str) -> CodePoint:
        """Code point of an assigned character; NotAssigned otherwise."""
        try:
            return self._by_char_id[char_id][1]
        except KeyError:
            raise NotAssigned(f"{char_id!r} has no code point") from None

    def lookup_code(self, codepoint: CodePoint | tuple[int, int]) -> AbstractChar:
        """Character at a code point; UnassignedCode for empty cells."""
        key = (codepoint.row, codepoint.cell) if isinstance(codepoint, CodePoint) \
            else codepoint
        try:
            return self._by_cell[key]
        except KeyError:
            raise UnassignedCode(f"cell {key} is unassigned") from None

    def char(self, char_id: str) -> AbstractChar:
        try:
            return self._by_char_id[char_id][0]
        except KeyError:
            raise NotAssigned(f"{char_id!r} not in table") from None

    def char_for_scalar(self, scalar: int) -> AbstractChar | None:
        return self._by_scalar.get(scalar)

    def __contains__(self, char_id: str) -> bool:
        return char_id in self._by_char_id

    def __len__(self) -> int:
        return len(self._by_char_id)

    def entries(self) -> list[tuple[AbstractChar, CodePoint]]:
        return sorted(self._by_char_id.values(), key=lambda e: (e[1].row, e[1].cell))

    def scripts(self) -> list[str]:
        return sorted({c.script for c, _ in self._by_char_id.values()})

    def level_counts(self) -> dict[Level, int]:
        counts = {Level.L1: 0, Level.L2: 0}
        for _, cp in self._by_char_id.values():
            counts[cp.level] += 1
        return counts

    # -- statistics ---------------------------------------------------------

    def coverage(self, corpus: Iterable[str]) -> CoverageStats:
        """Per-level occurrence fractions over a sequence of char ids.

        Unassigned ids (including single-byte ASCII) are counted, not fatal.
        An empty corpus yields zero fractions with the ``empty`` flag set.
        """
        counts = {Level.L1: 0, Level.L2: 0}
        unassigned = 0
        total = 0
        for char_id in corpus:
            total += 1
            hit = self._by_char_id.get(char_id)
            if hit is None:
                unassigned += 1
            else:
                counts[hit[1].level] += 1
        if total == 0:
            return CoverageStats(0.0, 0.0, 0.0, 0, True)
        return CoverageStats(
            counts[Level.L1] / total,
            counts[Level.L2] / total,
            unassigned / total,
            total,
            False,
        )

    # -- serialization --------------------------------------------------

    def dumps(self) -> str:
        out = io.StringIO()
        out.write("# code table definition\n")
        out.write(f"#! boundary {self.boundary}\n")
        for bank in self.banks:
            out.write(
                f"#! bank {script_code(bank.script)} {bank.level.name} "
                f"{bank.row_lo} {bank.row_hi}\n"
            )
        for char, cp in self.entries():
            out.write(
                f"{cp.row}\t{cp.cell}\t{char.universal_scalar:04X}\t"
                f"{script_code(char.script)}\t{char.display_name}\n"
            )
        return out.getvalue()

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())


def _parse_directive(parts: list[str], lineno: int, state: dict) -> None:
    if not parts:
        raise TableParseError(f"line {lineno}: empty directive")
    if parts[0] == "boundary":
        if len(parts) != 2 or not parts[1].isdigit():
            raise TableParseError(f"line {lineno}: boundary takes one integer")
        state["boundary"] = int(parts[1])
    elif parts[0] == "bank":
        if len(parts) != 5:
            raise TableParseError(
                f"line {lineno}: bank takes script, level, row_lo, row_hi"
            )
        script = canonical_script(parts[1]) if parts[1] != "*" else "*"
        try:
            level = Level[parts[2]]
        except KeyError:
            raise TableParseError(f"line {lineno}: unknown level {parts[2]!r}") from None
        try:
            lo, hi = int(parts[3]), int(parts[4])
        except ValueError:
            raise TableParseError(f"line {lineno}: bank rows must be integers") from None
        state.setdefault("banks", []).append(Bank(script, level, lo, hi))
    else:
        raise TableParseError(f"line {lineno}: unknown directive {parts[0]!r}")


def loads_table(text: str) -> CodeTable:
    state: dict = {"boundary": DEFAULT_BOUNDARY}
    raw_entries: list[tuple[int, int, int, str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#!"):
            _parse_directive(stripped[2:].split(), lineno, state)
            continue
        if stripped.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 5:
            raise TableParseError(
                f"line {lineno}: expected 5 tab-separated fields, got {len(fields)}"
            )
        row_s, cell_s, scalar_s, script_s, name = fields
        try:
            row, cell = int(row_s), int(cell_s)
        except ValueError:
            raise TableParseError(f"line {lineno}: row/cell must be integers") from None
        try:
            scalar = int(scalar_s, 16)
        except ValueError:
            raise TableParseError(f"line {lineno}: bad hex scalar {scalar_s!r}") from None
        if scalar < 0x80:
            raise TableParseError(
                f"line {lineno}: scalar U+{scalar:04X} is single-byte ASCII "
                "and cannot be assigned a code point"
            )
        raw_entries.append((row, cell, scalar, canonical_script(script_s), name))

    entries = []
    for row, cell, scalar, script, name in raw_entries:
        char = AbstractChar(make_char_id(script, name), script, scalar, name)
        entries.append((char, (row, cell)))
    banks = state.get("banks")
    return CodeTable(entries, boundary=state["boundary"], banks=banks)


def load_table(path: str | os.PathLike) -> CodeTable:
    """Parse a table definition file into a validated CodeTable."""
    with open(path, "r", encoding="utf-8") as fh:
        return loads_table(fh.read())
