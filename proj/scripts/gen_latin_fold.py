#!/usr/bin/env python3
"""Regenerates core/src/latin_fold_table.inc.

Walks the Latin Unicode blocks and records, for every precomposed letter,
the ASCII base letter left after canonical (NFD) decomposition with all
combining marks removed, plus a single-codepoint lowercase table used for
case-insensitive dedup keys. Run from the repository root:

    python3 scripts/gen_latin_fold.py > core/src/latin_fold_table.inc
"""

import sys
import unicodedata

RANGES = [(0x00C0, 0x024F), (0x1E00, 0x1EFF)]


def fold_entries():
    out = []
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) not in ("Lu", "Ll"):
                continue
            decomposed = unicodedata.normalize("NFD", ch)
            base = [c for c in decomposed if not unicodedata.combining(c)]
            if len(base) == 1 and base[0].isascii() and base[0].isalpha():
                if base[0] != ch:
                    out.append((cp, base[0]))
    return out


def lower_entries():
    out = []
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) != "Lu":
                continue
            lowered = ch.lower()
            if len(lowered) == 1 and lowered != ch:
                out.append((cp, ord(lowered)))
    return out


def main():
    folds = fold_entries()
    lowers = lower_entries()
    w = sys.stdout.write
    w("// Generated by scripts/gen_latin_fold.py -- do not edit by hand.\n")
    w("// Unicode %s data.\n\n" % unicodedata.unidata_version)
    w("inline constexpr FoldEntry kLatinFold[] = {\n")
    for i, (cp, base) in enumerate(folds):
        if i % 6 == 0:
            w("    ")
        w("{0x%04X, '%s'}, " % (cp, base))
        if i % 6 == 5:
            w("\n")
    w("\n};\n\n")
    w("inline constexpr LowerEntry kLatinLower[] = {\n")
    for i, (cp, low) in enumerate(lowers):
        if i % 6 == 0:
            w("    ")
        w("{0x%04X, 0x%04X}, " % (cp, low))
        if i % 6 == 5:
            w("\n")
    w("\n};\n")


if __name__ == "__main__":
    main()
