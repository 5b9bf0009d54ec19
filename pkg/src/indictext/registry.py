"""Resource registry: code tables, fonts, rules, IME tables, gloss pairs.

Everything is loaded once at startup and immutable afterwards, so the CLI
and the HTTP service can share a registry across threads.  Each loaded
resource is tagged with its language(s) and the four-way regional group;
language-pair resources carry a tag for both sides.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from importlib import resources as importlib_resources
from pathlib import Path

from .anusaaraka import ResourceSet, load_resource_set
from .codetable import CodeTable, load_table
from .errors import MissingResources
from .fontlib import FontLibrary, load_font
from .ime import ConversionTable, load_conversion_table
from .shaping import RuleSet, load_rules


class Group(Enum):
    NORTHERN = "northern"
    WESTERN = "western"
    SOUTH_INDIAN = "south-indian"
    EASTERN = "eastern"


LANGUAGE_GROUPS: dict[str, Group] = {
    "punjabi": Group.NORTHERN,
    "kashmiri": Group.NORTHERN,
    "urdu": Group.NORTHERN,
    "hindi": Group.NORTHERN,
    "nepali": Group.NORTHERN,
    "konkani": Group.WESTERN,
    "marathi": Group.WESTERN,
    "gujarati": Group.WESTERN,
    "tamil": Group.SOUTH_INDIAN,
    "telugu": Group.SOUTH_INDIAN,
    "kannada": Group.SOUTH_INDIAN,
    "malayalam": Group.SOUTH_INDIAN,
    "bengali": Group.EASTERN,
    "assamese": Group.EASTERN,
    "oriya": Group.EASTERN,
}

# representative language for script-keyed resources
SCRIPT_LANGUAGE: dict[str, str] = {
    "devanagari": "hindi",
    "bengali": "bengali",
    "telugu": "telugu",
}


@dataclass(frozen=True)
class ResourceTag:
    kind: str
    name: str
    language: str
    group: str
    detail: str = ""


def default_data_dir() -> Path:
    return Path(str(importlib_resources.files("indictext") / "data"))


def _group_for(language: str, partner: str | None = None) -> str:
    group = LANGUAGE_GROUPS.get(language)
    if group is not None:
        return group.value
    # access languages (e.g. English) ride on their Indian partner's group
    if partner is not None and partner in LANGUAGE_GROUPS:
        return LANGUAGE_GROUPS[partner].value
    return "-"


class ResourceRegistry:
    """Loaded resources for one data directory."""

    def __init__(self, root: str | os.PathLike | None = None,
                 default_table: str = "reference"):
        self.root = Path(root) if root is not None else default_data_dir()
        if not self.root.is_dir():
            raise MissingResources(f"resource directory {self.root} does not exist")
        self.tables: dict[str, CodeTable] = {}
        self.fonts: dict[str, FontLibrary] = {}
        self.rules: dict[str, RuleSet] = {}
        self.ime_tables: dict[str, ConversionTable] = {}
        self.gloss_pairs: dict[str, ResourceSet] = {}
        self.tags: list[ResourceTag] = []

        for path in sorted(self.root.glob("tables/*.tsv")):
            table = load_table(path)
            self.tables[path.stem] = table
            for bank in table.banks:
                language = SCRIPT_LANGUAGE.get(bank.script, bank.script)
                self.tags.append(ResourceTag(
                    "table", path.stem, language, _group_for(language),
                    f"{bank.script} rows {bank.row_lo}..{bank.row_hi} "
                    f"({bank.level.name})",
                ))

        self.default_table_name = default_table
        if default_table not in self.tables and self.tables:
            self.default_table_name = sorted(self.tables)[0]

        for path in sorted(self.root.glob("fonts/*.ifnt")):
            font = load_font(path)
            self.fonts[path.stem] = font
            levels = ", ".join(level.name for level in sorted(
                font.banks, key=lambda lv: lv.value))
            self.tags.append(ResourceTag(
                "font", path.stem, "-", "-", f"{font.size}px, banks {levels}",
            ))

        table = self.tables.get(self.default_table_name)
        if table is not None:
            for path in sorted(self.root.glob("shaping/*.rules")):
                self.rules[path.stem] = load_rules(path, table)
                language = SCRIPT_LANGUAGE.get(path.stem, path.stem)
                self.tags.append(ResourceTag(
                    "rules", path.stem, language, _group_for(language),
                    f"{len(self.rules[path.stem].rules)} rules",
                ))
            for path in sorted(self.root.glob("ime/*.tsv")):
                self.ime_tables[path.stem] = load_conversion_table(path, table)
                self.tags.append(ResourceTag(
                    "ime", path.stem, path.stem, _group_for(path.stem),
                    f"{len(self.ime_tables[path.stem].entries)} keys",
                ))

        for pair_dir in sorted(self.root.glob("anusaaraka/*-*")):
            if not pair_dir.is_dir():
                continue
            rset = load_resource_set(pair_dir)
            self.gloss_pairs[rset.pair] = rset
            self.tags.append(ResourceTag(
                "gloss", rset.pair, rset.source,
                _group_for(rset.source, partner=rset.target), "source side",
            ))
            self.tags.append(ResourceTag(
                "gloss", rset.pair, rset.target,
                _group_for(rset.target, partner=rset.source), "target side",
            ))

    # -- lookups, all raising MissingResources ------------------------------

    def table(self, name: str | None = None) -> CodeTable:
        key = name or self.default_table_name
        try:
            return self.tables[key]
        except KeyError:
            raise MissingResources(f"no code table named {key!r}") from None

    def font(self, name: str) -> FontLibrary:
        try:
            return self.fonts[name]
        except KeyError:
            raise MissingResources(f"no font named {name!r}") from None

    def rule_set(self, name: str) -> RuleSet:
        try:
            return self.rules[name]
        except KeyError:
            raise MissingResources(f"no shaping rules named {name!r}") from None

    def ime_table(self, name: str) -> ConversionTable:
        try:
            return self.ime_tables[name]
        except KeyError:
            raise MissingResources(f"no conversion table named {name!r}") from None

    def gloss_resources(self, pair: str) -> ResourceSet:
        try:
            return self.gloss_pairs[pair]
        except KeyError:
            raise MissingResources(
                f"no gloss resources for pair {pair!r}; have "
                f"{sorted(self.gloss_pairs)}"
            ) from None

    def listing(self) -> list[dict[str, str]]:
        return [
            {
                "kind": tag.kind,
                "name": tag.name,
                "language": tag.language,
                "group": tag.group,
                "detail": tag.detail,
            }
            for tag in self.tags
        ]
