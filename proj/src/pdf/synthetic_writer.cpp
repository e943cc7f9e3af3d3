// SPDX-License-Identifier: Apache-2.0
#include "docanno/synthetic_pdf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <numbers>
#include <sstream>

#include "docanno/error.hpp"
#include "pdf/filters.hpp"
#include "pdf/font.hpp"
#include "pdf/standard_fonts_data.hpp"

namespace docanno {
namespace {

int latin_font_index(std::string_view font) {
    for (int i = 0; i < 14; ++i) {
        if (font == pdf::data::kStandardFonts[i].name) {
            return (font == "Symbol" || font == "ZapfDingbats") ? -1 : i;
        }
    }
    return -1;
}

std::string fmt_num(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string pdf_string(std::string_view bytes) {
    std::string out = "(";
    for (char c : bytes) {
        const auto u = static_cast<unsigned char>(c);
        if (c == '(' || c == ')' || c == '\\') {
            out += '\\';
            out += c;
        } else if (u < 0x20 || u >= 0x7F) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\%03o", u);
            out += buf;
        } else {
            out += c;
        }
    }
    return out + ")";
}

std::string stream_object(const std::string& data, bool compress, const std::string& extra = {}) {
    std::string body = compress ? pdf::flate_encode(data) : data;
    std::string out = "<< /Length " + std::to_string(body.size());
    if (compress) out += " /Filter /FlateDecode";
    out += extra + " >>\nstream\n" + body + "\nendstream";
    return out;
}

}  // namespace

std::optional<std::string> encode_winansi(std::string_view utf8) {
    static const std::map<char32_t, unsigned char> reverse = [] {
        std::map<char32_t, unsigned char> m;
        for (int c = 255; c >= 0; --c) {
            if (pdf::data::kWinAnsi[c].glyph && pdf::data::kWinAnsi[c].unicode) {
                m[pdf::data::kWinAnsi[c].unicode] = static_cast<unsigned char>(c);
            }
        }
        return m;
    }();
    std::string out;
    std::size_t i = 0;
    while (i < utf8.size()) {
        const auto lead = static_cast<unsigned char>(utf8[i]);
        std::size_t n = lead < 0x80 ? 1 : (lead >> 5) == 6 ? 2 : (lead >> 4) == 14 ? 3 : (lead >> 3) == 30 ? 4 : 0;
        if (n == 0 || i + n > utf8.size()) return std::nullopt;
        char32_t cp = n == 1 ? lead : lead & (0x3F >> (n - 1));
        for (std::size_t k = 1; k < n; ++k) cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
        i += n;
        auto it = reverse.find(cp);
        if (it == reverse.end()) return std::nullopt;
        out += static_cast<char>(it->second);
    }
    return out;
}

std::optional<int> standard_char_width(std::string_view font, unsigned char code) {
    const int index = latin_font_index(font);
    if (index < 0) return std::nullopt;
    const char* glyph = pdf::data::kWinAnsi[code].glyph;
    if (!glyph) return std::nullopt;
    return pdf::standard_glyph_width(index, glyph);
}

std::optional<std::pair<int, int>> standard_font_extents(std::string_view font) {
    const int index = latin_font_index(font);
    if (index < 0) return std::nullopt;
    return std::pair{pdf::data::kStandardFonts[index].ascent, pdf::data::kStandardFonts[index].descent};
}

std::string write_synthetic_pdf(const std::vector<SyntheticPage>& pages, const SyntheticPdfOptions& options) {
    // Object numbering: 1 catalog, 2 page tree, then fonts, then per page (page, content).
    std::map<std::string, int> font_ids;
    for (const SyntheticPage& page : pages) {
        for (const SyntheticTextRun& run : page.runs) {
            if (latin_font_index(run.font) < 0) throw Error(ErrorCode::InvalidFormat, "unsupported font " + run.font);
            font_ids.emplace(run.font, 0);
        }
    }
    int next_id = 3;
    std::map<std::string, int> descriptor_ids;
    for (auto& [name, id] : font_ids) {
        id = next_id++;
        if (options.font_descriptor) descriptor_ids[name] = next_id++;
    }

    std::map<int, std::string> objects;  // id -> body (without "n 0 obj")
    std::vector<int> stream_ids;         // objects that must stay outside an object stream

    std::string font_resources = "<< ";
    std::string font_key_prefix = "F";
    int font_counter = 1;
    std::map<std::string, std::string> font_keys;
    for (const auto& [name, id] : font_ids) {
        const std::string key = font_key_prefix + std::to_string(font_counter++);
        font_keys[name] = key;
        font_resources += "/" + key + " " + std::to_string(id) + " 0 R ";

        std::string body = "<< /Type /Font /Subtype /Type1 /BaseFont /" + name + " /Encoding /WinAnsiEncoding";
        if (options.embed_widths) {
            body += " /FirstChar 32 /LastChar 255 /Widths [";
            for (int c = 32; c <= 255; ++c) {
                body += std::to_string(standard_char_width(name, static_cast<unsigned char>(c)).value_or(0));
                body += c == 255 ? "]" : " ";
            }
        }
        if (options.font_descriptor) {
            const auto [asc, desc] = *standard_font_extents(name);
            const int did = descriptor_ids[name];
            body += " /FontDescriptor " + std::to_string(did) + " 0 R";
            objects[did] = "<< /Type /FontDescriptor /FontName /" + name + " /Flags 32 /FontBBox [0 " +
                           std::to_string(desc) + " 1000 " + std::to_string(asc) + "] /ItalicAngle 0 /Ascent " +
                           std::to_string(asc) + " /Descent " + std::to_string(desc) +
                           " /CapHeight 700 /StemV 80 >>";
        }
        body += " >>";
        objects[id] = body;
    }
    font_resources += ">>";

    std::string kids;
    for (const SyntheticPage& page : pages) {
        const int page_id = next_id++;
        const int content_id = next_id++;
        kids += std::to_string(page_id) + " 0 R ";

        std::ostringstream content;
        for (const SyntheticRect& r : page.rects) {
            content << "0.5 g " << fmt_num(r.x) << ' ' << fmt_num(r.y) << ' ' << fmt_num(r.width) << ' '
                    << fmt_num(r.height) << " re f\n";
        }
        for (const SyntheticTextRun& run : page.runs) {
            auto encoded = encode_winansi(run.text);
            if (!encoded) throw Error(ErrorCode::InvalidFormat, "text not encodable in WinAnsi: " + run.text);
            const double rad = run.angle_degrees * std::numbers::pi / 180.0;
            const double c = std::cos(rad), s = std::sin(rad);
            // Text state survives ET; q/Q keeps each run's spacing to itself.
            content << "q BT\n/" << font_keys[run.font] << ' ' << fmt_num(run.size) << " Tf\n";
            if (run.char_spacing != 0.0) content << fmt_num(run.char_spacing) << " Tc\n";
            if (run.word_spacing != 0.0) content << fmt_num(run.word_spacing) << " Tw\n";
            if (run.horizontal_scale != 100.0) content << fmt_num(run.horizontal_scale) << " Tz\n";
            content << fmt_num(c) << ' ' << fmt_num(s) << ' ' << fmt_num(-s) << ' ' << fmt_num(c) << ' '
                    << fmt_num(run.x) << ' ' << fmt_num(run.y) << " Tm\n"
                    << pdf_string(*encoded) << " Tj\nET Q\n";
        }
        objects[content_id] = stream_object(content.str(), options.compress);
        stream_ids.push_back(content_id);

        std::string page_body = "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 " + fmt_num(page.width) + " " +
                                fmt_num(page.height) + "] /Resources << /Font " + font_resources +
                                " >> /Contents " + std::to_string(content_id) + " 0 R";
        if (page.rotate != 0) page_body += " /Rotate " + std::to_string(page.rotate);
        page_body += " >>";
        objects[page_id] = page_body;
    }
    objects[1] = "<< /Type /Catalog /Pages 2 0 R >>";
    objects[2] = "<< /Type /Pages /Kids [" + kids + "] /Count " + std::to_string(pages.size()) + " >>";

    std::string out = "%PDF-1.7\n%\xE2\xE3\xCF\xD3\n";
    const int size = next_id;
    if (!options.object_streams) {
        std::vector<std::size_t> offsets(size, 0);
        for (const auto& [id, body] : objects) {
            offsets[id] = out.size();
            out += std::to_string(id) + " 0 obj\n" + body + "\nendobj\n";
        }
        const std::size_t xref_pos = out.size();
        out += "xref\n0 " + std::to_string(size) + "\n0000000000 65535 f \n";
        for (int id = 1; id < size; ++id) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%010zu 00000 n \n", offsets[id]);
            out += buf;
        }
        out += "trailer\n<< /Size " + std::to_string(size) + " /Root 1 0 R >>\nstartxref\n" +
               std::to_string(xref_pos) + "\n%%EOF\n";
        return out;
    }

    // Object-stream layout: every non-stream object goes into one ObjStm.
    const int objstm_id = size;
    const int xref_id = size + 1;
    std::string header, packed;
    std::vector<int> packed_ids;
    for (const auto& [id, body] : objects) {
        if (std::find(stream_ids.begin(), stream_ids.end(), id) != stream_ids.end()) continue;
        header += std::to_string(id) + " " + std::to_string(packed.size()) + " ";
        packed += body + "\n";
        packed_ids.push_back(id);
    }
    std::vector<std::size_t> offsets(xref_id + 1, 0);
    for (int id : stream_ids) {
        offsets[id] = out.size();
        out += std::to_string(id) + " 0 obj\n" + objects[id] + "\nendobj\n";
    }
    offsets[objstm_id] = out.size();
    out += std::to_string(objstm_id) + " 0 obj\n" +
           stream_object(header + packed, true,
                         " /Type /ObjStm /N " + std::to_string(packed_ids.size()) + " /First " +
                             std::to_string(header.size())) +
           "\nendobj\n";
    offsets[xref_id] = out.size();

    std::string rows;
    auto put = [&](int type, std::size_t f2, int f3) {
        rows += static_cast<char>(type);
        for (int s = 24; s >= 0; s -= 8) rows += static_cast<char>((f2 >> s) & 0xFF);
        rows += static_cast<char>((f3 >> 8) & 0xFF);
        rows += static_cast<char>(f3 & 0xFF);
    };
    for (int id = 0; id <= xref_id; ++id) {
        auto packed_it = std::find(packed_ids.begin(), packed_ids.end(), id);
        if (id == 0) {
            put(0, 0, 65535);
        } else if (packed_it != packed_ids.end()) {
            put(2, static_cast<std::size_t>(objstm_id), static_cast<int>(packed_it - packed_ids.begin()));
        } else {
            put(1, offsets[id], 0);
        }
    }
    out += std::to_string(xref_id) + " 0 obj\n" +
           stream_object(rows, true,
                         " /Type /XRef /Size " + std::to_string(xref_id + 1) + " /W [1 4 2] /Root 1 0 R") +
           "\nendobj\nstartxref\n" + std::to_string(offsets[xref_id]) + "\n%%EOF\n";
    return out;
}

}  // namespace docanno
