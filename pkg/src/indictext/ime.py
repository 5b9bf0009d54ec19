"""Phonetic input method: roman keystrokes to ranked candidate characters.

A conversion table maps roman key strings to char-id sequences with a
frequency weight.  A session accumulates keystrokes in a buffer and keeps
a ranked candidate list in sync; selecting a candidate moves its output
into the committed text, and unmatched buffers can always be committed as
raw ASCII so the system stays bilingual.

Matching is incremental prefix search.  Keys are case-sensitive entries
(romanized Indic text distinguishes 'a' from 'A'), but the prefix bucket
is case-blind so plain lowercase typing still reaches capitalized keys;
only a byte-exact key counts as an exact match.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .codetable import CodeTable
from .errors import (
    ConversionTableError,
    IndexOutOfRange,
    InvalidKey,
    NotAssigned,
)


@dataclass(frozen=True)
class TableEntry:
    key: str
    output: tuple[str, ...]
    frequency: int
    rank_key: tuple = field(compare=False)


@dataclass(frozen=True)
class Candidate:
    output: tuple[str, ...]
    key: str
    frequency: int


class _TrieNode:
    __slots__ = ("children", "entries")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.entries: list[TableEntry] = []


class ConversionTable:
    """Immutable key-to-characters mapping with a casefolded prefix trie."""

    def __init__(self, entries: list[TableEntry]):
        self.entries = tuple(entries)
        seen: set[tuple[str, tuple[str, ...]]] = set()
        self._root = _TrieNode()
        for entry in self.entries:
            if not entry.key:
                raise ConversionTableError("empty key")
            if not entry.key.isascii() or not entry.key.isalpha():
                raise ConversionTableError(
                    f"key {entry.key!r} is not a roman letter string"
                )
            if entry.frequency < 0:
                raise ConversionTableError(f"negative frequency for {entry.key!r}")
            pair = (entry.key, entry.output)
            if pair in seen:
                raise ConversionTableError(f"duplicate (key, output) pair {pair}")
            seen.add(pair)
            node = self._root
            for ch in entry.key.casefold():
                node = node.children.setdefault(ch, _TrieNode())
            node.entries.append(entry)

    def lookup(self, buffer: str) -> list[Candidate]:
        """Ranked candidates for a buffer; empty buffer yields nothing."""
        if not buffer:
            return []
        node = self._root
        for ch in buffer.casefold():
            node = node.children.get(ch)
            if node is None:
                return []
        matches: list[TableEntry] = []
        stack = [node]
        while stack:
            cur = stack.pop()
            matches.extend(cur.entries)
            stack.extend(cur.children.values())
        ranked = sorted(
            matches,
            key=lambda e: (e.key != buffer, -e.frequency, e.rank_key, e.key),
        )
        return [Candidate(e.output, e.key, e.frequency) for e in ranked]


def _rank_key(output: tuple[str, ...], table: CodeTable) -> tuple:
    points = []
    for char_id in output:
        cp = table.lookup_char(char_id)
        points.append((cp.row, cp.cell))
    return tuple(points)


def loads_conversion_table(text: str, table: CodeTable) -> ConversionTable:
    entries: list[TableEntry] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) not in (2, 3):
            raise ConversionTableError(
                f"line {lineno}: expected key, output chars[, frequency]"
            )
        key = fields[0]
        output = tuple(fields[1].split())
        if not output:
            raise ConversionTableError(f"line {lineno}: empty output")
        try:
            frequency = int(fields[2]) if len(fields) == 3 and fields[2] else 0
        except ValueError:
            raise ConversionTableError(
                f"line {lineno}: bad frequency {fields[2]!r}"
            ) from None
        try:
            rank = _rank_key(output, table)
        except NotAssigned as exc:
            raise ConversionTableError(f"line {lineno}: {exc}") from None
        entries.append(TableEntry(key, output, frequency, rank))
    return ConversionTable(entries)


def load_conversion_table(path: str | os.PathLike, table: CodeTable) -> ConversionTable:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_conversion_table(fh.read(), table)


class ImeSession:
    """Single-owner mutable input session.

    ``committed`` is the token list (char ids and ASCII) ready for the
    codec; ``committed_reading`` is the roman text that produced it, kept
    so committed script text can still be fed to roman-text consumers.
    """

    VISIBLE_CANDIDATES = 9  # presentation cap per page, not a ranking change

    def __init__(self, table: ConversionTable):
        self.table = table
        self.buffer = ""
        self.candidates: list[Candidate] = []
        self.committed: list[str] = []
        self.committed_reading = ""

    def _refresh(self) -> None:
        self.candidates = self.table.lookup(self.buffer)

    def feed_key(self, key: str) -> None:
        """Append one printable ASCII key and recompute candidates."""
        if len(key) != 1 or not (0x20 <= ord(key) <= 0x7E):
            raise InvalidKey(f"key must be one printable ASCII char, got {key!r}")
        self.buffer += key
        self._refresh()

    def backspace(self) -> None:
        """Drop the last buffered key; no-op on an empty buffer."""
        if self.buffer:
            self.buffer = self.buffer[:-1]
        self._refresh()

    def select(self, index: int) -> None:
        """Commit candidate ``index`` (0-based) and clear the buffer."""
        if not (0 <= index < len(self.candidates)):
            raise IndexOutOfRange(
                f"candidate index {index} out of range "
                f"(have {len(self.candidates)})"
            )
        chosen = self.candidates[index]
        self.committed.extend(chosen.output)
        self.committed_reading += chosen.key
        self.buffer = ""
        self._refresh()

    def commit_raw(self) -> None:
        """Flush the buffer into committed text as plain ASCII."""
        for ch in self.buffer:
            self.committed.append(ch)
        self.committed_reading += self.buffer
        self.buffer = ""
        self._refresh()
