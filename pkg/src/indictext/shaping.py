"""Rule-driven shaping of abstract character runs into positioned glyphs.

Indic scripts combine consonants with vowel signs and with each other:
some vowel signs are written before the consonant they follow logically,
some attach above or below it, and consonant clusters can collapse into a
single conjunct glyph.  Each phenomenon is expressed as a rewrite rule
over char ids; shaping applies rules leftmost-longest in a single pass.

Rule files are UTF-8 text, one rule per line::

    kind<TAB>pattern char ids<TAB>replacement glyph specs

where a glyph spec is ``char_id[@dx,dy[,advance]]``.  Header directives
declare the nominal cell size and the virama char id.   Rules must be
invertible: ``decompose`` undoes ``shape`` exactly, which the loader
enforces by rejecting duplicate or prefix-sharing replacements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .codetable import CodeTable
from .errors import NotAssigned, NotDecomposable, RuleError, UnknownChar
from .fontlib import PositionedGlyph


class RuleKind(Enum):
    PRE_BASE_REORDER = "PreBaseReorder"
    ATTACH_ABOVE = "AttachAbove"
    ATTACH_BELOW = "AttachBelow"
    CONJUNCT_SUBST = "ConjunctSubst"


@dataclass(frozen=True)
class GlyphSpec:
    char_id: str
    dx: int = 0
    dy: int = 0
    advance: int | None = None  # None means the rule set's default advance


@dataclass(frozen=True)
class ShapingRule:
    kind: RuleKind
    pattern: tuple[str, ...]
    replacement: tuple[GlyphSpec, ...]


class RuleSet:
    """Validated, table-bound rules ready for shaping."""

    def __init__(self, table: CodeTable, rules: list[ShapingRule],
                 cell_size: int = 16, virama: str | None = None):
        self.table = table
        self.cell_size = cell_size
        self.virama = virama
        self.rules = tuple(rules)
        self._validate()
        self._pattern_map = {r.pattern: r for r in self.rules}
        self.max_pattern = max((len(r.pattern) for r in self.rules), default=1)
        # resolved replacement token sequences, longest first, for decompose
        self._replacements = sorted(
            ((self._tokens(r), r) for r in self.rules),
            key=lambda pair: len(pair[0]),
            reverse=True,
        )

    def _tokens(self, rule: ShapingRule) -> tuple[PositionedGlyph, ...]:
        return tuple(self._glyph(spec) for spec in rule.replacement)

    def _glyph(self, spec: GlyphSpec) -> PositionedGlyph:
        advance = self.cell_size if spec.advance is None else spec.advance
        return PositionedGlyph(
            self.table.lookup_char(spec.char_id), spec.dx, spec.dy, advance
        )

    def _validate(self) -> None:
        seen_patterns: set[tuple[str, ...]] = set()
        for rule in self.rules:
            if not rule.pattern:
                raise RuleError("empty pattern")
            if rule.pattern in seen_patterns:
                raise RuleError(f"duplicate pattern {rule.pattern}")
            seen_patterns.add(rule.pattern)
            for char_id in rule.pattern:
                if char_id not in self.table:
                    raise RuleError(f"pattern char {char_id!r} not in code table")
            for spec in rule.replacement:
                if spec.char_id not in self.table:
                    raise RuleError(f"replacement glyph {spec.char_id!r} not in code table")
                if abs(spec.dx) > self.cell_size or abs(spec.dy) > self.cell_size:
                    raise RuleError(
                        f"offset ({spec.dx}, {spec.dy}) exceeds cell size "
                        f"{self.cell_size}"
                    )
                if spec.advance is not None and spec.advance < 0:
                    raise RuleError("advance must be >= 0")
            if rule.kind is RuleKind.CONJUNCT_SUBST:
                if self.virama is None or self.virama not in rule.pattern:
                    raise RuleError(
                        "ConjunctSubst pattern must contain the declared virama"
                    )
            else:
                if sorted(s.char_id for s in rule.replacement) != sorted(rule.pattern):
                    raise RuleError(
                        f"{rule.kind.value} must emit exactly one glyph per "
                        f"input char: {rule.pattern}"
                    )
        # invertibility: replacements pairwise distinct and non-prefix
        token_seqs = [tuple(self._raw_tokens(r)) for r in self.rules]
        for i, a in enumerate(token_seqs):
            for b in token_seqs[i + 1:]:
                shorter, longer = (a, b) if len(a) <= len(b) else (b, a)
                if longer[:len(shorter)] == shorter:
                    raise RuleError(
                        "replacement sequences must be distinct and "
                        f"prefix-free; {a} collides with {b}"
                    )

    def _raw_tokens(self, rule: ShapingRule):
        for spec in rule.replacement:
            advance = self.cell_size if spec.advance is None else spec.advance
            yield (spec.char_id, spec.dx, spec.dy, advance)

    def alphabet(self) -> list[str]:
        """Char ids usable as shaping input: every rule-pattern char."""
        chars: set[str] = set()
        for rule in self.rules:
            chars.update(rule.pattern)
        return sorted(chars)

    @classmethod
    def empty(cls, table: CodeTable, cell_size: int = 16) -> "RuleSet":
        return cls(table, [], cell_size=cell_size)


def shape(chars: list[str], rules: RuleSet) -> list[PositionedGlyph]:
    """Single-pass leftmost-longest rule application.

    Unmatched chars fall back to their own glyph at the default advance.
    """
    out: list[PositionedGlyph] = []
    i = 0
    n = len(chars)
    while i < n:
        applied = False
        for length in range(min(rules.max_pattern, n - i), 0, -1):
            rule = rules._pattern_map.get(tuple(chars[i:i + length]))
            if rule is not None:
                out.extend(rules._tokens(rule))
                i += length
                applied = True
                break
        if applied:
            continue
        char_id = chars[i]
        try:
            cp = rules.table.lookup_char(char_id)
        except NotAssigned:
            raise UnknownChar(
                f"{char_id!r} has no glyph and no rule covers it"
            ) from None
        out.append(PositionedGlyph(cp, 0, 0, rules.cell_size))
        i += 1
    return out


def decompose(glyphs: list[PositionedGlyph], rules: RuleSet) -> list[str]:
    """Invert shape: recover the char sequence from positioned glyphs."""
    out: list[str] = []
    i = 0
    n = len(glyphs)
    while i < n:
        matched = False
        for tokens, rule in rules._replacements:
            k = len(tokens)
            if k and i + k <= n and tuple(glyphs[i:i + k]) == tokens:
                out.extend(rule.pattern)
                i += k
                matched = True
                break
        if matched:
            continue
        pg = glyphs[i]
        if (
            pg.glyph_code is None
            or pg.dx or pg.dy
            or pg.advance != rules.cell_size
        ):
            raise NotDecomposable(f"glyph {i} is not a default placement")
        char = rules.table.lookup_code(pg.glyph_code)
        out.append(char.char_id)
        i += 1
    return out


def _parse_glyph_spec(text: str, lineno: int) -> GlyphSpec:
    if "@" not in text:
        return GlyphSpec(text)
    char_id, _, rest = text.partition("@")
    parts = rest.split(",")
    if len(parts) not in (2, 3):
        raise RuleError(f"line {lineno}: glyph spec needs dx,dy[,advance]: {text!r}")
    try:
        dx, dy = int(parts[0]), int(parts[1])
        advance = int(parts[2]) if len(parts) == 3 else None
    except ValueError:
        raise RuleError(f"line {lineno}: non-integer offset in {text!r}") from None
    return GlyphSpec(char_id, dx, dy, advance)


def loads_rules(text: str, table: CodeTable) -> RuleSet:
    cell_size = 16
    virama: str | None = None
    rules: list[ShapingRule] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#!"):
            parts = stripped[2:].split()
            if len(parts) == 2 and parts[0] == "size":
                cell_size = int(parts[1])
            elif len(parts) == 2 and parts[0] == "virama":
                virama = parts[1]
            else:
                raise RuleError(f"line {lineno}: unknown directive {stripped!r}")
            continue
        if stripped.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 3:
            raise RuleError(
                f"line {lineno}: expected kind, pattern, replacement"
            )
        kind_s, pattern_s, replacement_s = fields
        try:
            kind = RuleKind(kind_s)
        except ValueError:
            raise RuleError(f"line {lineno}: unknown rule kind {kind_s!r}") from None
        pattern = tuple(pattern_s.split())
        replacement = tuple(
            _parse_glyph_spec(spec, lineno) for spec in replacement_s.split()
        )
        rules.append(ShapingRule(kind, pattern, replacement))
    return RuleSet(table, rules, cell_size=cell_size, virama=virama)


def load_rules(path: str | os.PathLike, table: CodeTable) -> RuleSet:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_rules(fh.read(), table)
