"""Brace notation for mixed ASCII / double-byte text.

Abstract text is handled as a list of tokens: a single ASCII character
(scalar < 0x80) or a char id such as ``deva:KA``.  The printable form wraps
char ids in braces and leaves ASCII bare::

    A{deva:KA}{deva:I_SIGN}!

Literal braces are doubled (``{{`` and ``}}``).  A bare non-ASCII character
is kept as a one-character token and resolved by scalar against the code
table, so real Unicode text can be piped straight in.
"""

from __future__ import annotations

from .codetable import CodeTable
from .errors import TableParseError


def is_ascii_token(token: str) -> bool:
    return len(token) == 1 and ord(token) < 0x80


def parse_text(notation: str) -> list[str]:
    """Parse brace notation into a token list."""
    tokens: list[str] = []
    i = 0
    n = len(notation)
    while i < n:
        ch = notation[i]
        if ch == "{":
            if notation.startswith("{{", i):
                tokens.append("{")
                i += 2
                continue
            end = notation.find("}", i + 1)
            if end < 0:
                raise TableParseError(f"unterminated '{{' at position {i}")
            tokens.append(notation[i + 1:end])
            i = end + 1
        elif ch == "}":
            if notation.startswith("}}", i):
                tokens.append("}")
                i += 2
                continue
            raise TableParseError(f"unmatched '}}' at position {i}")
        else:
            tokens.append(ch)
            i += 1
    return tokens


def render_text(tokens: list[str], table: CodeTable | None = None,
                unicode: bool = False) -> str:
    """Render tokens back to brace notation.

    With ``unicode=True`` char ids whose scalar is a regular (non private
    use) character are emitted as that character instead of a braced id.
    """
    parts: list[str] = []
    for token in tokens:
        if is_ascii_token(token):
            parts.append("{{" if token == "{" else "}}" if token == "}" else token)
        elif len(token) == 1:
            parts.append(token)
        elif unicode and table is not None and token in table:
            scalar = table.char(token).universal_scalar
            if 0xE000 <= scalar <= 0xF8FF:
                parts.append("{" + token + "}")
            else:
                parts.append(chr(scalar))
        else:
            parts.append("{" + token + "}")
    return "".join(parts)
