// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docanno {

/// A line of text placed at a baseline origin in PDF user space (origin bottom-left).
struct SyntheticTextRun {
    std::string font = "Helvetica";  // one of the twelve Latin standard fonts
    double size = 12.0;
    double x = 72.0;
    double y = 700.0;
    std::string text;  // UTF-8, restricted to characters in WinAnsiEncoding
    double char_spacing = 0.0;
    double word_spacing = 0.0;
    double horizontal_scale = 100.0;  // percent
    double angle_degrees = 0.0;       // counter-clockwise rotation of the text matrix
};

/// Filled rectangle in user space, used for vector-only pages.
struct SyntheticRect {
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;
};

struct SyntheticPage {
    double width = 612.0;
    double height = 792.0;
    int rotate = 0;
    std::vector<SyntheticTextRun> runs;
    std::vector<SyntheticRect> rects;
};

struct SyntheticPdfOptions {
    bool compress = false;         // FlateDecode content streams
    bool embed_widths = false;     // write /FirstChar /LastChar /Widths for each font
    bool font_descriptor = false;  // write a descriptor carrying the font's ascent/descent
    bool object_streams = false;   // pack dictionaries into an object stream + xref stream
};

/// Writes a minimal PDF containing the given pages. Fonts use WinAnsiEncoding.
/// Throws Error(InvalidFormat) for unknown fonts or unencodable text.
std::string write_synthetic_pdf(const std::vector<SyntheticPage>& pages,
                                const SyntheticPdfOptions& options = {});

/// WinAnsiEncoding bytes for UTF-8 text, or nullopt if a character is not encodable.
std::optional<std::string> encode_winansi(std::string_view utf8);

/// Advance width in 1/1000 em of WinAnsi `code` in a standard font, from the
/// metric table the writer embeds.
std::optional<int> standard_char_width(std::string_view font, unsigned char code);

/// Ascender and descender (1/1000 em, descender negative) of a standard font.
std::optional<std::pair<int, int>> standard_font_extents(std::string_view font);

}  // namespace docanno
