"""Pure operations behind both the CLI and the HTTP service.

Each entry point here takes plain values and returns plain values, so the
two front doors stay thin wrappers and produce byte-identical output for
identical input.
"""

from __future__ import annotations

from . import codec
from .codetable import CodeTable, CoverageStats
from .fontlib import FontLibrary, PositionedGlyph, Raster, render_line
from .registry import ResourceRegistry
from .shaping import RuleSet, shape
from .textfmt import is_ascii_token, parse_text, render_text


def encode_text(notation: str, table: CodeTable) -> bytes:
    return codec.encode_internal(parse_text(notation), table)


def decode_stream(stream: bytes, table: CodeTable, lossy: bool = False) -> str:
    return render_text(codec.decode_internal(stream, table, lossy=lossy))


def translit_text(notation: str, from_script: str, to_script: str,
                  table: CodeTable, fallback: str = "strict") -> str:
    tokens = codec.transliterate_parallel(
        parse_text(notation), from_script, to_script, table, fallback=fallback
    )
    return render_text(tokens)


def shape_tokens(tokens: list[str], rules: RuleSet) -> list[PositionedGlyph]:
    """Shape mixed text: script runs go through the rules, ASCII becomes
    half-cell spacers (no bitmap ASCII font ships with the package)."""
    out: list[PositionedGlyph] = []
    run: list[str] = []

    def flush() -> None:
        if run:
            out.extend(shape(run, rules))
            run.clear()

    for token in tokens:
        if is_ascii_token(token):
            flush()
            out.append(PositionedGlyph(None, 0, 0, rules.cell_size // 2))
        else:
            run.append(token)
    flush()
    return out


def render_text_line(notation: str, rules: RuleSet, font: FontLibrary) -> Raster:
    return render_line(shape_tokens(parse_text(notation), rules), font)


def render_pbm(notation: str, rules: RuleSet, font: FontLibrary) -> bytes:
    return render_text_line(notation, rules, font).to_pbm()


def coverage_text(notation: str, table: CodeTable) -> CoverageStats:
    return table.coverage(parse_text(notation))


def gloss_text(registry: ResourceRegistry, pair: str, sentence: str) -> str:
    from .anusaaraka import gloss_sentence

    return gloss_sentence(sentence, registry.gloss_resources(pair))
