#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Generates src/pdf/standard_fonts_data.cpp from the AFM tables shipped with reportlab."""
import sys

import reportlab.pdfbase._fontdata as fd
import reportlab.pdfbase.rl_codecs as rl_codecs

rl_codecs.RL_Codecs.register()

ENCODINGS = [
    ("kStandard", "StandardEncoding", None),
    ("kWinAnsi", "WinAnsiEncoding", "cp1252"),
    ("kMacRoman", "MacRomanEncoding", "mac_roman"),
    ("kSymbol", "SymbolEncoding", "symbol"),
    ("kZapfDingbats", "ZapfDingbatsEncoding", "zapfdingbats"),
]

EXTRA_NAMES = {
    "fi": 0xFB01, "fl": 0xFB02, "ff": 0xFB00, "ffi": 0xFB03, "ffl": 0xFB04,
    "quotesingle": 0x27, "grave": 0x60, "Lslash": 0x141, "lslash": 0x142,
    "dotlessi": 0x131, "fraction": 0x2044, "hungarumlaut": 0x2DD,
    "ogonek": 0x2DB, "caron": 0x2C7, "breve": 0x2D8, "dotaccent": 0x2D9,
    "ring": 0x2DA, "minus": 0x2212, "space": 0x20, "nbspace": 0xA0,
    "hyphen": 0x2D, "sfthyphen": 0xAD,
}


def name_to_unicode():
    table = {}
    for _, enc, codec in ENCODINGS:
        if codec is None:
            continue
        names = fd.encodings[enc]
        for code, name in enumerate(names):
            if not name or name in table:
                continue
            try:
                ch = bytes([code]).decode(codec)
            except UnicodeDecodeError:
                continue
            if len(ch) == 1 and ch != "�":
                table[name] = ord(ch)
    table.update({k: v for k, v in EXTRA_NAMES.items() if k not in table})
    return table


def main(out):
    names = name_to_unicode()
    lines = [
        "// SPDX-License-Identifier: Apache-2.0",
        "// Generated by tools/gen_standard_fonts.py. Do not edit.",
        "",
        '#include "pdf/standard_fonts_data.hpp"',
        "",
        "namespace docanno::pdf::data {",
        "",
    ]
    for ident, enc, _ in ENCODINGS:
        lines.append(f"const EncodingEntry {ident}[256] = {{")
        for code, name in enumerate(fd.encodings[enc]):
            if name:
                lines.append(f'    {{"{name}", 0x{names.get(name, 0):04X}}},')
            else:
                lines.append("    {nullptr, 0},")
        lines.append("};")
        lines.append("")

    glyph_names = sorted(names.items())
    lines.append(f"const GlyphUnicode kGlyphUnicode[{len(glyph_names)}] = {{")
    for name, cp in glyph_names:
        lines.append(f'    {{"{name}", 0x{cp:04X}}},')
    lines.append("};")
    lines.append(f"const std::size_t kGlyphUnicodeCount = {len(glyph_names)};")
    lines.append("")

    for font in fd.standardFonts:
        widths = sorted(fd.widthsByFontGlyph[font].items())
        ident = "kWidths_" + font.replace("-", "_")
        lines.append(f"static const GlyphWidth {ident}[{len(widths)}] = {{")
        for name, w in widths:
            lines.append(f'    {{"{name}", {w}}},')
        lines.append("};")
        lines.append("")

    lines.append("const StandardFontMetrics kStandardFonts[14] = {")
    for font in fd.standardFonts:
        ident = "kWidths_" + font.replace("-", "_")
        asc, desc = fd.ascent_descent[font]
        count = len(fd.widthsByFontGlyph[font])
        builtin = {"Symbol": "kSymbol", "ZapfDingbats": "kZapfDingbats"}.get(font, "kStandard")
        lines.append(f'    {{"{font}", {asc}, {desc}, {builtin}, {ident}, {count}}},')
    lines.append("};")
    lines.append("")
    lines.append("}  // namespace docanno::pdf::data")
    with open(out, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/pdf/standard_fonts_data.cpp")
