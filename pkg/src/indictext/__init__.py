"""Double-byte coded text processing for Indic scripts.

The package covers the whole desk-scale pipeline: a two-level 94x94 code
table, internal/interchange byte codecs, parallel-block transliteration,
packed bitmap font banks with line rendering, rule-driven script shaping,
a phonetic input method, and a word-by-word gloss engine that makes text
in one Indian language readable in another.
"""

__version__ = "0.1.0"

from .codetable import AbstractChar, CodePoint, CodeTable, Level, load_table
from .errors import DataError

__all__ = [
    "AbstractChar",
    "CodePoint",
    "CodeTable",
    "DataError",
    "Level",
    "load_table",
    "__version__",
]
