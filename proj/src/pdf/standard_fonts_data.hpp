// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace docanno::pdf::data {

struct EncodingEntry {
    const char* glyph;
    char32_t unicode;
};

struct GlyphUnicode {
    const char* glyph;
    char32_t unicode;
};

struct GlyphWidth {
    const char* glyph;
    int width;
};

struct StandardFontMetrics {
    const char* name;
    int ascent;
    int descent;
    const EncodingEntry* builtin_encoding;
    const GlyphWidth* widths;  // sorted by glyph name
    std::size_t width_count;
};

extern const EncodingEntry kStandard[256];
extern const EncodingEntry kWinAnsi[256];
extern const EncodingEntry kMacRoman[256];
extern const EncodingEntry kSymbol[256];
extern const EncodingEntry kZapfDingbats[256];

extern const GlyphUnicode kGlyphUnicode[];  // sorted by glyph name
extern const std::size_t kGlyphUnicodeCount;

extern const StandardFontMetrics kStandardFonts[14];

}  // namespace docanno::pdf::data
