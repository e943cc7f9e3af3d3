// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdf/document.hpp"

namespace docanno::pdf {

struct Glyph {
    std::uint32_t code = 0;
    std::string text;      // UTF-8; empty when the code has no Unicode mapping
    double width = 0.0;    // horizontal glyph width in text space units (w0 / 1000)
    double advance = 0.0;  // displacement along the writing direction (w1 / 1000 when vertical)
    bool word_space = false;  // single-byte code 32, which receives word spacing
};

/// Code-to-Unicode and code-to-CID tables parsed from a CMap stream.
struct CMap {
    struct Range {
        int bytes = 1;
        std::uint32_t low = 0;
        std::uint32_t high = 0;
    };
    std::vector<Range> codespaces;
    std::map<std::uint32_t, std::string> unicode;  // code -> UTF-8
    std::map<std::uint32_t, std::uint32_t> cids;   // code -> CID (single entries)
    struct CidRange {
        std::uint32_t low, high, first_cid;
    };
    std::vector<CidRange> cid_ranges;

    static CMap parse(std::string_view data);

    /// Byte length of the code starting at `bytes`, from the codespace ranges.
    int code_length(std::string_view bytes, int fallback) const;
    std::optional<std::uint32_t> cid(std::uint32_t code) const;
};

class Font {
public:
    /// Builds a font from a /Font resource entry. Never throws for unusual
    /// fonts; missing data falls back to standard metrics.
    static std::shared_ptr<const Font> load(const Document& doc, const Object& font_obj);

    /// Fallback for a missing or unresolvable font resource.
    static std::shared_ptr<const Font> fallback();

    std::vector<Glyph> decode(std::string_view bytes) const;

    bool is_type3() const { return type3_; }
    bool is_vertical() const { return vertical_; }
    /// Ascent and descent as fractions of the font size (descent positive).
    double ascent() const { return ascent_; }
    double descent() const { return descent_; }
    const std::string& base_name() const { return base_name_; }

private:
    struct SimpleData {
        int first_char = 0;
        std::vector<double> widths;  // raw /Widths entries
        bool has_widths = false;
        std::optional<double> missing_width;
        std::array<std::string, 256> glyph_names;
        int standard_index = -1;  // into the standard-14 metric table
    };

    double simple_width(std::uint32_t code) const;
    std::string simple_unicode(std::uint32_t code) const;

    bool composite_ = false;
    bool type3_ = false;
    bool vertical_ = false;
    double ascent_ = 0.8;
    double descent_ = 0.2;
    double type3_scale_ = 0.001;
    std::string base_name_;

    SimpleData simple_;

    // composite fonts
    CMap encoding_;
    bool identity_encoding_ = true;
    double default_width_ = 1000.0;
    std::map<std::uint32_t, double> cid_widths_;
    double default_vertical_advance_ = -1000.0;

    std::optional<CMap> to_unicode_;
};

/// Index into the standard-14 metric table for a (possibly aliased or subset-prefixed)
/// base font name, or -1.
int standard_font_index(std::string_view base_font);

/// Width in 1/1000 em of `glyph` in standard font `font_index`, if the font defines it.
std::optional<int> standard_glyph_width(int font_index, std::string_view glyph);

/// Unicode value for a glyph name (standard names, uniXXXX, uXXXX), or 0.
char32_t glyph_name_to_unicode(std::string_view glyph);

void append_utf8(std::string& out, char32_t cp);

}  // namespace docanno::pdf
