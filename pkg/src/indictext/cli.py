"""Command-line front door.

Subcommands mirror the module operations one to one: encode, decode,
interchange, translit, render, coverage, ime (interactive), gloss,
resources, serve.  Text arguments use brace notation (see textfmt);
binary streams go through stdin/stdout or files.  Usage errors exit 2,
data errors exit 1 with the error name and byte offset on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import pipeline
from .errors import DataError
from .registry import ResourceRegistry
from .ime import ImeSession
from .textfmt import render_text

RESOURCE_ENV = "INDICTEXT_RESOURCES"
PORT_ENV = "INDICTEXT_PORT"


def _read_bytes(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _read_text(path: str | None, inline: str | None = None) -> str:
    if inline is not None:
        return inline
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_bytes(data: bytes, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _registry(args: argparse.Namespace) -> ResourceRegistry:
    root = args.resources or os.environ.get(RESOURCE_ENV)
    return ResourceRegistry(root)


def cmd_encode(args: argparse.Namespace) -> int:
    registry = _registry(args)
    notation = _read_text(args.infile, args.text).rstrip("\n")
    _write_bytes(pipeline.encode_text(notation, registry.table(args.table)), args.out)
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    registry = _registry(args)
    stream = _read_bytes(args.infile)
    out = pipeline.decode_stream(stream, registry.table(args.table), lossy=args.lossy)
    print(out)
    return 0


def cmd_interchange(args: argparse.Namespace) -> int:
    from . import codec

    stream = _read_bytes(args.infile)
    if args.direction == "to":
        _write_bytes(codec.internal_to_interchange(stream), args.out)
    else:
        _write_bytes(codec.interchange_to_internal(stream), args.out)
    return 0


def cmd_translit(args: argparse.Namespace) -> int:
    registry = _registry(args)
    notation = _read_text(args.infile, args.text).rstrip("\n")
    print(pipeline.translit_text(
        notation, args.from_script, args.to_script,
        registry.table(args.table), fallback=args.fallback,
    ))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    registry = _registry(args)
    notation = _read_text(args.infile, args.text).rstrip("\n")
    font = registry.font(args.font)
    rules = registry.rule_set(args.rules)
    _write_bytes(pipeline.render_pbm(notation, rules, font), args.out)
    return 0


def cmd_coverage(args: argparse.Namespace) -> int:
    registry = _registry(args)
    notation = _read_text(args.infile, args.text)
    stats = pipeline.coverage_text(notation.strip(), registry.table(args.table))
    if stats.empty:
        print("empty corpus")
        return 0
    print(f"tokens      {stats.total}")
    print(f"level-1     {stats.l1_fraction:.4f}")
    print(f"level-2     {stats.l2_fraction:.4f}")
    print(f"unassigned  {stats.unassigned_fraction:.4f}")
    return 0


def cmd_gloss(args: argparse.Namespace) -> int:
    registry = _registry(args)
    sentence = _read_text(args.infile, args.sentence).strip()
    print(pipeline.gloss_text(registry, args.pair, sentence))
    return 0


def cmd_resources(args: argparse.Namespace) -> int:
    registry = _registry(args)
    rows = registry.listing()
    for row in rows:
        print(f"{row['kind']:<6} {row['name']:<16} {row['language']:<10} "
              f"{row['group']:<13} {row['detail']}")
    return 0


def cmd_ime(args: argparse.Namespace) -> int:
    """Interactive line mode: letters feed the buffer, 1-9 select,
    '<' backspaces, '.' commits the raw buffer, 'q!' quits."""
    registry = _registry(args)
    session = ImeSession(registry.ime_table(args.table))
    out = sys.stdout
    print("ime ready; keys a-z/A-Z, 1-9 select, < backspace, . raw, q! quit",
          file=sys.stderr)
    for line in sys.stdin:
        line = line.rstrip("\n")
        if line == "q!":
            break
        for key in line:
            if key.isdigit() and key != "0":
                session.select(int(key) - 1)
            elif key == "<":
                session.backspace()
            elif key == ".":
                session.commit_raw()
            else:
                session.feed_key(key)
        shown = session.candidates[:ImeSession.VISIBLE_CANDIDATES]
        cand = " ".join(
            f"{i + 1}:{render_text(list(c.output))}" for i, c in enumerate(shown)
        )
        print(f"buffer={session.buffer!r} candidates=[{cand}] "
              f"committed={render_text(session.committed)}", file=out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    registry = _registry(args)
    app = create_app(registry, session_ttl=args.session_ttl)
    port = args.port or int(os.environ.get(PORT_ENV, "8040"))
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indictext",
        description="Double-byte Indic text processing toolkit",
    )
    parser.add_argument("--resources", help="resource directory "
                        f"(default: packaged data, or ${RESOURCE_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):  # noqa: A002 - argparse idiom
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add("encode", cmd_encode, "brace-notation text to internal bytes")
    p.add_argument("--table", default=None)
    p.add_argument("--text", help="inline text instead of stdin")
    p.add_argument("--in", dest="infile", help="input file ('-' = stdin)")
    p.add_argument("--out", help="output file ('-' = stdout)")

    p = add("decode", cmd_decode, "internal bytes to brace-notation text")
    p.add_argument("--table", default=None)
    p.add_argument("--lossy", action="store_true",
                   help="replace bad input instead of failing")
    p.add_argument("--in", dest="infile")

    p = add("interchange", cmd_interchange, "convert internal <-> interchange")
    p.add_argument("--direction", choices=("to", "from"), required=True,
                   help="'to' interchange or 'from' interchange")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out")

    p = add("translit", cmd_translit, "parallel-block transliteration")
    p.add_argument("--from-script", required=True)
    p.add_argument("--to-script", required=True)
    p.add_argument("--fallback", choices=("strict", "passthrough", "mark"),
                   default="strict")
    p.add_argument("--table", default=None)
    p.add_argument("--text")
    p.add_argument("--in", dest="infile")

    p = add("render", cmd_render, "shape text and render a PBM raster")
    p.add_argument("--size", type=int, default=16, choices=(16, 24, 48),
                   help="glyph size; picks the font reference<size> by default")
    p.add_argument("--font", default=None)
    p.add_argument("--rules", default="devanagari")
    p.add_argument("--text")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", required=True)

    p = add("coverage", cmd_coverage, "per-level corpus coverage statistics")
    p.add_argument("--table", default=None)
    p.add_argument("--text")
    p.add_argument("--in", dest="infile")

    p = add("ime", cmd_ime, "interactive phonetic input (line mode)")
    p.add_argument("--table", default="hindi", help="conversion table name")

    p = add("gloss", cmd_gloss, "word-by-word gloss between languages")
    p.add_argument("--pair", required=True, help="e.g. te-hi")
    p.add_argument("sentence", nargs="?", default=None)
    p.add_argument("--in", dest="infile")

    add("resources", cmd_resources, "list loaded resources with group tags")

    p = add("serve", cmd_serve, "run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--session-ttl", type=float, default=1800.0,
                   help="idle seconds before an IME session expires")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "render" and args.font is None:
        args.font = f"reference{args.size}"
    try:
        return args.func(args)
    except DataError as exc:
        print(f"{exc.error_name}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
