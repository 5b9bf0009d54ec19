"""Word-by-word gloss transfer between related languages.

The engine makes text in one language readable in another without ever
rewriting it: each source word is morphologically segmented against
paradigm tables, its root is looked up in a bilingual dictionary, and its
case endings and TAM suffixes are mapped to target-language markers.  Word
order is preserved, every word produces exactly one gloss token, and any
ambiguity in the resources is carried into the output as ``[A|B]`` sets
rather than resolved.  Interpretation stays with the human reader.

Resources for a language pair are three tab-separated files:

    paradigms.tsv   suffix, comma-separated features, optional note
    lexicon.tsv     source root, part of speech, pipe-separated targets
    vibhakti.tsv    feature, pipe-separated target markers

Opaque annotation notes (the ``{23_ba.}`` kind) are emitted verbatim and
never interpreted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import MissingResources, ResourceError

TERMINAL_PUNCT = "?!.,"

POS_VALUES = ("noun", "verb", "pronoun", "other")


@dataclass(frozen=True)
class ParadigmEntry:
    suffix: str
    features: tuple[str, ...]
    note: str | None = None


@dataclass(frozen=True)
class LexEntry:
    source_root: str
    pos: str
    targets: tuple[str, ...]


@dataclass(frozen=True)
class MorphAnalysis:
    """Surface-true segmentation: root + suffixes re-concatenate to the word."""

    root: str
    suffixes: tuple[str, ...]
    features: tuple[str, ...]
    pos: str
    known: bool
    entries: tuple[ParadigmEntry, ...] = ()

    @property
    def surface(self) -> str:
        return self.root + "".join(self.suffixes)


# -- gloss tokens -------------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Ambiguity:
    options: tuple[str, ...]

    def __post_init__(self):
        if len(self.options) < 2:
            raise ValueError("ambiguity sets need at least two members")


@dataclass(frozen=True)
class Note:
    text: str


Marker = Literal | Ambiguity | Note


@dataclass(frozen=True)
class GlossToken:
    root_options: tuple[str, ...]
    markers: tuple[Marker, ...]
    unknown: bool = False

    def render(self) -> str:
        if self.unknown:
            text = "*" + self.root_options[0]
        elif len(self.root_options) > 1:
            text = "[" + "|".join(self.root_options) + "]"
        else:
            text = self.root_options[0]
        for marker in self.markers:
            if isinstance(marker, Note):
                text += "{" + marker.text + "}"
            elif isinstance(marker, Ambiguity):
                text += ("_" if text else "") + "[" + "|".join(marker.options) + "]"
            else:
                text += ("_" if text else "") + marker.text
        return text


class ResourceSet:
    """Loaded, validated resources for one (source, target) pair."""

    def __init__(self, source: str, target: str, registry: tuple[str, ...],
                 paradigms: list[ParadigmEntry], lexicon: list[LexEntry],
                 vibhakti: dict[str, tuple[str, ...]]):
        self.source = source
        self.target = target
        self.feature_registry = registry
        for entry in paradigms:
            if not entry.suffix:
                raise ResourceError("empty paradigm suffix")
            for feature in entry.features:
                if feature not in registry:
                    raise ResourceError(
                        f"paradigm feature {feature!r} not in declared registry"
                    )
        for feature in vibhakti:
            if feature not in registry:
                raise ResourceError(
                    f"vibhakti feature {feature!r} not in declared registry"
                )
        # longest-first so suffix stripping never misses a longer match
        self.paradigms = sorted(paradigms, key=lambda e: len(e.suffix), reverse=True)
        self._by_suffix = {e.suffix: e for e in paradigms}
        self.lexicon: dict[str, list[LexEntry]] = {}
        seen: set[tuple[str, str]] = set()
        for entry in lexicon:
            key = (entry.source_root, entry.pos)
            if key in seen:
                raise ResourceError(f"duplicate lexicon entry {key}")
            seen.add(key)
            self.lexicon.setdefault(entry.source_root, []).append(entry)
        self.vibhakti = dict(vibhakti)

    @property
    def pair(self) -> str:
        return f"{self.source}-{self.target}"


def tokenize(sentence: str) -> list[tuple[str, str]]:
    """Whitespace-split a sentence into (word, trailing punctuation) pairs."""
    out: list[tuple[str, str]] = []
    for raw in sentence.split():
        word = raw.rstrip(TERMINAL_PUNCT)
        out.append((word, raw[len(word):]))
    return out


def analyze(word: str, resources: ResourceSet) -> MorphAnalysis:
    """Segment a word into root and suffix chain.

    Longest-suffix-first stripping from the right, repeated until the
    residue is a lexicon root or nothing more matches.  A word that is
    itself a paradigm suffix is a bare postposition with an empty root.
    Unanalyzable words come back whole, flagged unknown; nothing is fatal.
    """
    if word in resources.lexicon:
        pos = resources.lexicon[word][0].pos
        return MorphAnalysis(word, (), (), pos, known=True)
    if word in resources._by_suffix:
        entry = resources._by_suffix[word]
        return MorphAnalysis(
            "", (word,), entry.features, "other", known=True, entries=(entry,)
        )
    residue = word
    collected: list[ParadigmEntry] = []
    while residue not in resources.lexicon:
        match = next(
            (e for e in resources.paradigms
             if len(residue) > len(e.suffix) and residue.endswith(e.suffix)),
            None,
        )
        if match is None:
            break
        collected.insert(0, match)
        residue = residue[:-len(match.suffix)]
    known = residue in resources.lexicon
    pos = resources.lexicon[residue][0].pos if known else "other"
    features = tuple(f for e in collected for f in e.features)
    return MorphAnalysis(
        residue,
        tuple(e.suffix for e in collected),
        features,
        pos,
        known=known,
        entries=tuple(collected),
    )


def transfer(analysis: MorphAnalysis, resources: ResourceSet) -> GlossToken:
    """Map one analysis to a target-language gloss token.

    The root goes through the bilingual dictionary (all targets kept as an
    ambiguity set), each feature through the vibhakti map, and paradigm
    notes are appended verbatim after their suffix's markers.  Unknown
    roots pass through star-marked; a word is never dropped.
    """
    if analysis.root == "" and not analysis.suffixes:
        return GlossToken(("",), (), unknown=False)
    unknown = False
    if analysis.root == "":
        root_options: tuple[str, ...] = ("",)
    elif analysis.known:
        root_options = resources.lexicon[analysis.root][0].targets
    else:
        root_options = (analysis.root,)
        unknown = True
    markers: list[Marker] = []
    for entry in analysis.entries:
        for feature in entry.features:
            options = resources.vibhakti.get(feature)
            if options is None:
                markers.append(Literal(feature))
            elif len(options) == 1:
                single = options[0]
                if single.startswith("{") and single.endswith("}"):
                    markers.append(Note(single[1:-1]))
                else:
                    markers.append(Literal(single))
            else:
                markers.append(Ambiguity(options))
        if entry.note:
            markers.append(Note(entry.note))
    return GlossToken(root_options, tuple(markers), unknown=unknown)


def gloss_sentence(sentence: str, resources: ResourceSet) -> str:
    """One gloss token per source word, source order, punctuation intact."""
    rendered: list[str] = []
    for word, punct in tokenize(sentence):
        token = transfer(analyze(word, resources), resources)
        rendered.append(token.render() + punct)
    return " ".join(rendered)


# -- resource loading ---------------------------------------------------------

def _read_rows(path: Path, expected: str) -> tuple[dict[str, list[str]], list[list[str]]]:
    directives: dict[str, list[str]] = {}
    rows: list[list[str]] = []
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise MissingResources(f"missing resource file {path}") from None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#!"):
            parts = stripped[2:].split()
            if not parts:
                raise ResourceError(f"{path}:{lineno}: empty directive")
            directives[parts[0]] = parts[1:]
            continue
        if stripped.startswith("#"):
            continue
        rows.append(line.rstrip("\n").split("\t"))
    if "pair" not in directives or len(directives["pair"]) != 2:
        raise ResourceError(f"{path}: missing '#! pair <source> <target>' header")
    if expected and "-".join(directives["pair"]) != expected:
        raise ResourceError(
            f"{path}: header pair {'-'.join(directives['pair'])} does not "
            f"match directory {expected}"
        )
    return directives, rows


def load_resource_set(directory: str | os.PathLike) -> ResourceSet:
    """Load paradigms.tsv, lexicon.tsv and vibhakti.tsv from one directory."""
    base = Path(directory)
    pair = base.name if "-" in base.name else ""

    par_dir, par_rows = _read_rows(base / "paradigms.tsv", pair)
    registry = tuple(par_dir.get("features", []))
    paradigms: list[ParadigmEntry] = []
    for row in par_rows:
        if len(row) not in (2, 3):
            raise ResourceError(f"paradigms.tsv: expected 2 or 3 fields, got {row}")
        features = tuple(f for f in row[1].split(",") if f)
        note = row[2] if len(row) == 3 and row[2] else None
        paradigms.append(ParadigmEntry(row[0], features, note))

    _, lex_rows = _read_rows(base / "lexicon.tsv", pair)
    lexicon: list[LexEntry] = []
    for row in lex_rows:
        if len(row) != 3:
            raise ResourceError(f"lexicon.tsv: expected 3 fields, got {row}")
        root, pos, targets_s = row
        if pos not in POS_VALUES:
            raise ResourceError(f"lexicon.tsv: unknown part of speech {pos!r}")
        targets = tuple(t for t in targets_s.split("|") if t)
        if not targets:
            raise ResourceError(f"lexicon.tsv: {root!r} has no targets")
        lexicon.append(LexEntry(root, pos, targets))

    _, vib_rows = _read_rows(base / "vibhakti.tsv", pair)
    vibhakti: dict[str, tuple[str, ...]] = {}
    for row in vib_rows:
        if len(row) != 2:
            raise ResourceError(f"vibhakti.tsv: expected 2 fields, got {row}")
        feature, options_s = row
        if feature in vibhakti:
            raise ResourceError(f"vibhakti.tsv: duplicate feature {feature!r}")
        options = tuple(o for o in options_s.split("|") if o)
        if not options:
            raise ResourceError(f"vibhakti.tsv: {feature!r} has no markers")
        vibhakti[feature] = options

    source, target = par_dir["pair"]
    return ResourceSet(source, target, registry, paradigms, lexicon, vibhakti)
