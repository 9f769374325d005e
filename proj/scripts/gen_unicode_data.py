#!/usr/bin/env python3
"""Generate Unicode normalization tables for core/src/unicode_data.inc.

Emits three sorted arrays derived from the Python unicodedata module:
  - canonical combining classes (nonzero only)
  - canonical decompositions (singleton or pair)
  - primary composition pairs (exclusions filtered via the NFC round trip)

Hangul syllables (AC00..D7A3) are omitted; the C++ side handles them
algorithmically. Also regenerates tests/data/nfc_cases.tsv.

Usage: python3 scripts/gen_unicode_data.py
"""

import os
import random
import unicodedata

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

HANGUL_FIRST = 0xAC00
HANGUL_LAST = 0xD7A3


def collect():
    ccc = []
    decomp = []
    comp = []
    for cp in range(0x110000):
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        klass = unicodedata.combining(ch)
        if klass:
            ccc.append((cp, klass))
        d = unicodedata.decomposition(ch)
        if d and not d.startswith("<"):
            parts = [int(x, 16) for x in d.split()]
            assert 1 <= len(parts) <= 2, hex(cp)
            first = parts[0]
            second = parts[1] if len(parts) == 2 else 0
            decomp.append((cp, first, second))
            if len(parts) == 2:
                # A pair recomposes iff the codepoint survives an NFD->NFC
                # round trip (this filters composition exclusions and
                # non-starter decompositions).
                if unicodedata.normalize("NFC", unicodedata.normalize("NFD", ch)) == ch:
                    comp.append((first, second, cp))
    comp.sort()
    return ccc, decomp, comp


def write_inc(ccc, decomp, comp):
    path = os.path.join(ROOT, "core", "src", "unicode_data.inc")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("// Generated by scripts/gen_unicode_data.py from Python "
                "unicodedata %s. Do not edit.\n\n" % unicodedata.unidata_version)
        f.write("struct CccEntry { char32_t cp; unsigned char ccc; };\n")
        f.write("struct DecompEntry { char32_t cp; char32_t first; char32_t second; };\n")
        f.write("struct CompEntry { char32_t first; char32_t second; char32_t composed; };\n\n")

        f.write("inline constexpr CccEntry kCombiningClasses[] = {\n")
        for cp, k in ccc:
            f.write("    {0x%04X, %d},\n" % (cp, k))
        f.write("};\n\n")

        f.write("inline constexpr DecompEntry kCanonicalDecompositions[] = {\n")
        for cp, a, b in decomp:
            f.write("    {0x%04X, 0x%04X, 0x%04X},\n" % (cp, a, b))
        f.write("};\n\n")

        f.write("inline constexpr CompEntry kCompositionPairs[] = {\n")
        for a, b, c in comp:
            f.write("    {0x%04X, 0x%04X, 0x%04X},\n" % (a, b, c))
        f.write("};\n")
    return path


def write_fixture():
    """Random NFC cases, codepoint-hex lists: input TAB expected."""
    rng = random.Random(20240917)
    persian = [0x0627, 0x0628, 0x062A, 0x0633, 0x0645, 0x0646, 0x06CC, 0x06A9,
               0x0644, 0x0631, 0x0647, 0x062F]
    harakat = [0x064B, 0x064E, 0x0650, 0x0651, 0x0652, 0x0653, 0x0654, 0x0670]
    latin = list(range(0x61, 0x7B)) + [0x41, 0x45, 0x4F, 0x55]
    marks = [0x0300, 0x0301, 0x0308, 0x0304, 0x0323, 0x0327]
    hangul_jamo = [0x1100, 0x1161, 0x11A8, 0x110C, 0x1165, 0x11AB]
    pools = [persian, harakat, latin, marks, hangul_jamo, [0x20, 0x200C]]

    cases = []
    # Hand-picked composition/ordering cases.
    fixed = [
        [0x0627, 0x0653],                  # alef + maddah -> U+0622
        [0x0627, 0x0654],                  # alef + hamza above -> U+0623
        [0x0648, 0x0654],                  # waw + hamza above -> U+0624
        [0x0061, 0x0301],                  # a + acute -> U+00E1
        [0x0061, 0x0323, 0x0301],          # ordering: dot below before acute
        [0x0061, 0x0301, 0x0323],          # same after canonical reordering
        [0x1100, 0x1161],                  # Hangul L+V -> LV syllable
        [0x1100, 0x1161, 0x11A8],          # Hangul L+V+T -> LVT syllable
        [0x00C5],                          # precomposed stays
        [0x212B],                          # Angstrom sign -> U+00C5 (singleton)
    ]
    cases.extend(fixed)
    for _ in range(300):
        n = rng.randint(1, 12)
        s = []
        for _ in range(n):
            pool = rng.choice(pools)
            s.append(rng.choice(pool))
        cases.append(s)

    path = os.path.join(ROOT, "tests", "data", "nfc_cases.tsv")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for cps in cases:
            src = "".join(chr(c) for c in cps)
            out = unicodedata.normalize("NFC", src)
            f.write(" ".join("%04X" % c for c in cps))
            f.write("\t")
            f.write(" ".join("%04X" % ord(c) for c in out))
            f.write("\n")
    return path


def main():
    ccc, decomp, comp = collect()
    inc = write_inc(ccc, decomp, comp)
    print("wrote %s (%d ccc, %d decomp, %d comp)" % (inc, len(ccc), len(decomp), len(comp)))
    fixture = write_fixture()
    print("wrote %s" % fixture)


if __name__ == "__main__":
    main()
