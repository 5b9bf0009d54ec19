#!/usr/bin/env python3
"""Regenerate the checked-in reference table and font.

Both artifacts are deterministic, so rerunning this script must reproduce
them byte for byte.  Pass --gb-table to also dump the 6763-character
GB-style census table (not shipped; tests build it in memory).
"""

from __future__ import annotations

import argparse
from pathlib import Path

from indictext.codetable import Level
from indictext.fontgen import build_bank
from indictext.fontlib import write_font
from indictext.tablegen import build_gb_style_table, build_indic_reference_table

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "indictext" / "data"

# the reference font's L1 bank spans rows 1..20 (covers the Devanagari and
# Telugu banks); the L2 bank spans rows 56..57 (the Bengali bank)
L1_LAST_ROW = 20
L2_LAST_ROW = 57


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gb-table", metavar="PATH",
                        help="also write the GB-style census table here")
    parser.add_argument("--sizes", type=int, nargs="+", default=[16],
                        help="font sizes to generate (default: 16)")
    args = parser.parse_args()

    table = build_indic_reference_table()
    table_path = DATA_DIR / "tables" / "reference.tsv"
    table.save(table_path)
    counts = table.level_counts()
    print(f"wrote {table_path} ({len(table)} chars, "
          f"L1={counts[Level.L1]}, L2={counts[Level.L2]})")

    for size in args.sizes:
        banks = {
            Level.L1: build_bank(1, L1_LAST_ROW, size),
            Level.L2: build_bank(56, L2_LAST_ROW, size),
        }
        font_path = DATA_DIR / "fonts" / f"reference{size}.ifnt"
        write_font(font_path, size, banks)
        print(f"wrote {font_path} ({font_path.stat().st_size} bytes)")

    if args.gb_table:
        gb = build_gb_style_table()
        gb.save(args.gb_table)
        gb_counts = gb.level_counts()
        print(f"wrote {args.gb_table} (L1={gb_counts[Level.L1]}, "
              f"L2={gb_counts[Level.L2]})")


if __name__ == "__main__":
    main()
