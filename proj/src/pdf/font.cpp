// SPDX-License-Identifier: Apache-2.0
#include "pdf/font.hpp"

#include <algorithm>
#include <cstring>

#include "docanno/error.hpp"
#include "pdf/lexer.hpp"
#include "pdf/standard_fonts_data.hpp"

namespace docanno::pdf {
namespace {

const data::EncodingEntry* named_encoding(std::string_view name) {
    if (name == "WinAnsiEncoding") return data::kWinAnsi;
    if (name == "MacRomanEncoding") return data::kMacRoman;
    if (name == "StandardEncoding") return data::kStandard;
    return nullptr;
}

std::uint32_t big_endian(std::string_view bytes) {
    std::uint32_t v = 0;
    for (unsigned char c : bytes) v = (v << 8) | c;
    return v;
}

std::string utf16be_to_utf8(std::string_view bytes) {
    std::string out;
    for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
        char32_t unit = (static_cast<unsigned char>(bytes[i]) << 8) | static_cast<unsigned char>(bytes[i + 1]);
        if (unit >= 0xD800 && unit < 0xDC00 && i + 3 < bytes.size()) {
            const char32_t low = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                                 static_cast<unsigned char>(bytes[i + 3]);
            if (low >= 0xDC00 && low < 0xE000) {
                unit = 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00);
                i += 2;
            }
        }
        append_utf8(out, unit);
    }
    if (bytes.size() == 1) append_utf8(out, static_cast<unsigned char>(bytes[0]));
    return out;
}

// Adds `delta` to the last UTF-16 code unit of a bfrange destination.
std::string increment_utf16(std::string bytes, std::uint32_t delta) {
    if (bytes.size() < 2) {
        if (bytes.size() == 1) bytes[0] = static_cast<char>(static_cast<unsigned char>(bytes[0]) + delta);
        return bytes;
    }
    const std::size_t n = bytes.size();
    std::uint32_t last = (static_cast<unsigned char>(bytes[n - 2]) << 8) | static_cast<unsigned char>(bytes[n - 1]);
    last += delta;
    bytes[n - 2] = static_cast<char>((last >> 8) & 0xFF);
    bytes[n - 1] = static_cast<char>(last & 0xFF);
    return bytes;
}

std::string strip_subset_prefix(std::string_view name) {
    if (name.size() > 7 && name[6] == '+' &&
        std::all_of(name.begin(), name.begin() + 6, [](char c) { return c >= 'A' && c <= 'Z'; })) {
        name.remove_prefix(7);
    }
    return std::string(name);
}

}  // namespace

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x110000) {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

char32_t glyph_name_to_unicode(std::string_view glyph) {
    const auto* begin = data::kGlyphUnicode;
    const auto* end = data::kGlyphUnicode + data::kGlyphUnicodeCount;
    const std::string key(glyph);
    const auto* it = std::lower_bound(begin, end, key, [](const data::GlyphUnicode& e, const std::string& k) {
        return std::strcmp(e.glyph, k.c_str()) < 0;
    });
    if (it != end && key == it->glyph) return it->unicode;
    auto parse_hex = [](std::string_view hex) -> char32_t {
        if (hex.empty() || hex.size() > 6) return 0;
        char32_t v = 0;
        for (char c : hex) {
            v <<= 4;
            if (c >= '0' && c <= '9') v |= c - '0';
            else if (c >= 'A' && c <= 'F') v |= c - 'A' + 10;
            else if (c >= 'a' && c <= 'f') v |= c - 'a' + 10;
            else return 0;
        }
        return v;
    };
    if (glyph.starts_with("uni") && glyph.size() >= 7) return parse_hex(glyph.substr(3, 4));
    if (glyph.starts_with("u") && glyph.size() >= 5 && glyph.size() <= 7) return parse_hex(glyph.substr(1));
    // "a.sc", "f_i" style names: map the base part
    if (auto dot = glyph.find('.'); dot != std::string_view::npos && dot > 0) {
        return glyph_name_to_unicode(glyph.substr(0, dot));
    }
    return 0;
}

int standard_font_index(std::string_view base_font) {
    std::string name = strip_subset_prefix(base_font);
    for (int i = 0; i < 14; ++i) {
        if (name == data::kStandardFonts[i].name) return i;
    }
    // common aliases used by writers that reference system fonts without embedding
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool bold = lower.find("bold") != std::string::npos;
    const bool italic = lower.find("italic") != std::string::npos || lower.find("oblique") != std::string::npos;
    auto find = [](const char* n) {
        for (int i = 0; i < 14; ++i) {
            if (std::strcmp(data::kStandardFonts[i].name, n) == 0) return i;
        }
        return -1;
    };
    if (lower.starts_with("arial") || lower.starts_with("helvetica")) {
        return find(bold ? (italic ? "Helvetica-BoldOblique" : "Helvetica-Bold")
                         : (italic ? "Helvetica-Oblique" : "Helvetica"));
    }
    if (lower.starts_with("times")) {
        return find(bold ? (italic ? "Times-BoldItalic" : "Times-Bold") : (italic ? "Times-Italic" : "Times-Roman"));
    }
    if (lower.starts_with("courier")) {
        return find(bold ? (italic ? "Courier-BoldOblique" : "Courier-Bold") : (italic ? "Courier-Oblique" : "Courier"));
    }
    if (lower.starts_with("symbol")) return find("Symbol");
    if (lower.starts_with("zapfdingbats")) return find("ZapfDingbats");
    return -1;
}

std::optional<int> standard_glyph_width(int font_index, std::string_view glyph) {
    if (font_index < 0 || font_index >= 14 || glyph.empty()) return std::nullopt;
    const auto& font = data::kStandardFonts[font_index];
    const std::string key(glyph);
    const auto* end = font.widths + font.width_count;
    const auto* it = std::lower_bound(font.widths, end, key, [](const data::GlyphWidth& e, const std::string& k) {
        return std::strcmp(e.glyph, k.c_str()) < 0;
    });
    if (it != end && key == it->glyph) return it->width;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

CMap CMap::parse(std::string_view data) {
    CMap cmap;
    Lexer lex(data, 0, false);
    std::vector<Object> operands;
    auto hex_of = [](const Object& o) -> const std::string* {
        const String* s = o.string();
        return s ? &s->bytes : nullptr;
    };
    try {
        while (auto obj = lex.next()) {
            const Keyword* kw = obj->keyword();
            if (!kw) {
                operands.push_back(std::move(*obj));
                continue;
            }
            const std::string& op = kw->value;
            if (op == "begincodespacerange" || op == "beginbfchar" || op == "beginbfrange" ||
                op == "begincidchar" || op == "begincidrange") {
                operands.clear();
            } else if (op == "endcodespacerange") {
                for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
                    const auto* lo = hex_of(operands[i]);
                    const auto* hi = hex_of(operands[i + 1]);
                    if (!lo || !hi || lo->empty()) continue;
                    cmap.codespaces.push_back({static_cast<int>(lo->size()), big_endian(*lo), big_endian(*hi)});
                }
                operands.clear();
            } else if (op == "endbfchar") {
                for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
                    const auto* src = hex_of(operands[i]);
                    if (!src) continue;
                    if (const auto* dst = hex_of(operands[i + 1])) {
                        cmap.unicode[big_endian(*src)] = utf16be_to_utf8(*dst);
                    } else if (const Name* n = operands[i + 1].name()) {
                        std::string out;
                        if (char32_t cp = glyph_name_to_unicode(n->value)) append_utf8(out, cp);
                        cmap.unicode[big_endian(*src)] = out;
                    }
                }
                operands.clear();
            } else if (op == "endbfrange") {
                for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
                    const auto* lo = hex_of(operands[i]);
                    const auto* hi = hex_of(operands[i + 1]);
                    if (!lo || !hi) continue;
                    const std::uint32_t low = big_endian(*lo);
                    const std::uint32_t high = std::min(big_endian(*hi), low + 0xFFFF);
                    if (const auto* dst = hex_of(operands[i + 2])) {
                        for (std::uint32_t c = low; c <= high; ++c) {
                            cmap.unicode[c] = utf16be_to_utf8(increment_utf16(*dst, c - low));
                        }
                    } else if (const Array* arr = operands[i + 2].array()) {
                        for (std::uint32_t c = low; c <= high && c - low < arr->size(); ++c) {
                            if (const auto* d = hex_of((*arr)[c - low])) cmap.unicode[c] = utf16be_to_utf8(*d);
                        }
                    }
                }
                operands.clear();
            } else if (op == "endcidchar") {
                for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
                    const auto* src = hex_of(operands[i]);
                    auto cid = operands[i + 1].integer();
                    if (src && cid) cmap.cids[big_endian(*src)] = static_cast<std::uint32_t>(*cid);
                }
                operands.clear();
            } else if (op == "endcidrange") {
                for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
                    const auto* lo = hex_of(operands[i]);
                    const auto* hi = hex_of(operands[i + 1]);
                    auto cid = operands[i + 2].integer();
                    if (lo && hi && cid) {
                        cmap.cid_ranges.push_back({big_endian(*lo), big_endian(*hi), static_cast<std::uint32_t>(*cid)});
                    }
                }
                operands.clear();
            } else {
                operands.clear();
            }
        }
    } catch (const Error&) {
        // keep whatever mappings were read before the damage
    }
    return cmap;
}

int CMap::code_length(std::string_view bytes, int fallback) const {
    for (int n = 1; n <= 4 && n <= static_cast<int>(bytes.size()); ++n) {
        const std::uint32_t v = big_endian(bytes.substr(0, n));
        for (const Range& r : codespaces) {
            if (r.bytes == n && v >= r.low && v <= r.high) return n;
        }
    }
    return std::min<int>(fallback, static_cast<int>(bytes.size()));
}

std::optional<std::uint32_t> CMap::cid(std::uint32_t code) const {
    if (auto it = cids.find(code); it != cids.end()) return it->second;
    for (const CidRange& r : cid_ranges) {
        if (code >= r.low && code <= r.high) return r.first_cid + (code - r.low);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Font> Font::fallback() {
    static const auto font = [] {
        auto f = std::make_shared<Font>();
        f->base_name_ = "Helvetica";
        f->simple_.standard_index = standard_font_index("Helvetica");
        for (int c = 0; c < 256; ++c) {
            if (const char* g = data::kStandard[c].glyph) f->simple_.glyph_names[c] = g;
        }
        return std::shared_ptr<const Font>(f);
    }();
    return font;
}

std::shared_ptr<const Font> Font::load(const Document& doc, const Object& font_obj) {
    Object resolved = doc.resolve(font_obj);
    const Dict* dict = resolved.dict();
    if (!dict) return fallback();

    auto font = std::make_shared<Font>();
    Object subtype = doc.lookup(*dict, "Subtype");
    const std::string sub = subtype.name() ? subtype.name()->value : "";
    const Object base_font = doc.lookup(*dict, "BaseFont");
    if (const Name* n = base_font.name()) font->base_name_ = n->value;
    font->type3_ = sub == "Type3";
    font->composite_ = sub == "Type0";

    auto read_descriptor = [&](const Dict& d) {
        Object desc = doc.lookup(d, "FontDescriptor");
        if (const Dict* fd = desc.dict()) {
            auto asc = doc.lookup(*fd, "Ascent").number();
            auto des = doc.lookup(*fd, "Descent").number();
            if (asc && des && *asc > 0.0 && *asc - *des > 0.0) {
                font->ascent_ = *asc / 1000.0;
                font->descent_ = -*des / 1000.0;
            }
            if (auto mw = doc.lookup(*fd, "MissingWidth").number()) font->simple_.missing_width = *mw;
        }
    };

    if (Object tu = doc.lookup(*dict, "ToUnicode"); const Stream* s = tu.stream()) {
        try {
            font->to_unicode_ = CMap::parse(doc.decode_stream(*s));
        } catch (const Error&) {
        }
    }

    if (font->composite_) {
        Object enc = doc.lookup(*dict, "Encoding");
        if (const Name* n = enc.name()) {
            font->vertical_ = n->value.ends_with("-V");
            font->identity_encoding_ = true;
        } else if (const Stream* s = enc.stream()) {
            try {
                font->encoding_ = CMap::parse(doc.decode_stream(*s));
                font->identity_encoding_ = font->encoding_.cids.empty() && font->encoding_.cid_ranges.empty();
            } catch (const Error&) {
            }
            if (const Object* wm = s->dict.find("WMode")) font->vertical_ = wm->integer().value_or(0) == 1;
        }
        Object descendants = doc.lookup(*dict, "DescendantFonts");
        const Array* arr = descendants.array();
        Object cid_font = arr && !arr->empty() ? doc.resolve((*arr)[0]) : Object{};
        if (const Dict* cd = cid_font.dict()) {
            read_descriptor(*cd);
            if (auto dw = doc.lookup(*cd, "DW").number()) font->default_width_ = *dw;
            Object w = doc.lookup(*cd, "W");
            if (const Array* wa = w.array()) {
                std::size_t i = 0;
                while (i + 1 < wa->size()) {
                    auto first = doc.resolve((*wa)[i]).integer();
                    Object second = doc.resolve((*wa)[i + 1]);
                    if (!first) break;
                    if (const Array* list = second.array()) {
                        for (std::size_t k = 0; k < list->size(); ++k) {
                            if (auto v = doc.resolve((*list)[k]).number()) {
                                font->cid_widths_[static_cast<std::uint32_t>(*first + static_cast<std::int64_t>(k))] = *v;
                            }
                        }
                        i += 2;
                    } else if (i + 2 < wa->size()) {
                        auto last = second.integer();
                        auto v = doc.resolve((*wa)[i + 2]).number();
                        if (last && v && *last >= *first && *last - *first < 0x10000) {
                            for (std::int64_t c = *first; c <= *last; ++c) {
                                font->cid_widths_[static_cast<std::uint32_t>(c)] = *v;
                            }
                        }
                        i += 3;
                    } else {
                        break;
                    }
                }
            }
            if (Object dw2 = doc.lookup(*cd, "DW2"); const Array* a = dw2.array()) {
                if (a->size() == 2) font->default_vertical_advance_ = doc.resolve((*a)[1]).number().value_or(-1000.0);
            }
        }
        return font;
    }

    // simple fonts (Type1, TrueType, MMType1, Type3)
    SimpleData& simple = font->simple_;
    read_descriptor(*dict);
    simple.standard_index = font->type3_ ? -1 : standard_font_index(font->base_name_);
    if (auto fc = doc.lookup(*dict, "FirstChar").integer()) simple.first_char = static_cast<int>(*fc);
    Object widths = doc.lookup(*dict, "Widths");
    if (const Array* wa = widths.array()) {
        simple.has_widths = true;
        for (const Object& w : *wa) simple.widths.push_back(doc.resolve(w).number().value_or(0.0));
    }
    if (font->type3_) {
        Object fm = doc.lookup(*dict, "FontMatrix");
        if (const Array* m = fm.array(); m && !m->empty()) {
            font->type3_scale_ = doc.resolve((*m)[0]).number().value_or(0.001);
        }
    }

    const data::EncodingEntry* base = data::kStandard;
    if (simple.standard_index >= 0) base = data::kStandardFonts[simple.standard_index].builtin_encoding;
    Object enc = doc.lookup(*dict, "Encoding");
    const Array* differences = nullptr;
    Object diff_holder;
    if (const Name* n = enc.name()) {
        if (const auto* e = named_encoding(n->value)) base = e;
    } else if (const Dict* ed = enc.dict()) {
        const Object base_encoding = doc.lookup(*ed, "BaseEncoding");
        if (const Name* bn = base_encoding.name()) {
            if (const auto* e = named_encoding(bn->value)) base = e;
        }
        diff_holder = doc.lookup(*ed, "Differences");
        differences = diff_holder.array();
    }
    for (int c = 0; c < 256; ++c) {
        if (base[c].glyph) simple.glyph_names[c] = base[c].glyph;
    }
    if (differences) {
        int code = 0;
        for (const Object& item : *differences) {
            Object v = doc.resolve(item);
            if (auto i = v.integer()) {
                code = static_cast<int>(*i);
            } else if (const Name* n = v.name()) {
                if (code >= 0 && code < 256) simple.glyph_names[code] = n->value;
                ++code;
            }
        }
    }
    return font;
}

double Font::simple_width(std::uint32_t code) const {
    const SimpleData& s = simple_;
    if (s.has_widths) {
        const std::int64_t idx = static_cast<std::int64_t>(code) - s.first_char;
        if (idx >= 0 && idx < static_cast<std::int64_t>(s.widths.size())) return s.widths[idx];
        if (s.missing_width) return *s.missing_width;
    }
    if (s.standard_index >= 0 && code < 256) {
        if (auto w = standard_glyph_width(s.standard_index, s.glyph_names[code])) return *w;
    }
    if (s.missing_width && *s.missing_width > 0.0) return *s.missing_width;
    return 500.0;
}

std::string Font::simple_unicode(std::uint32_t code) const {
    std::string out;
    if (to_unicode_) {
        if (auto it = to_unicode_->unicode.find(code); it != to_unicode_->unicode.end()) return it->second;
    }
    if (code < 256 && !simple_.glyph_names[code].empty()) {
        if (char32_t cp = glyph_name_to_unicode(simple_.glyph_names[code])) {
            append_utf8(out, cp);
            return out;
        }
    }
    // Unknown glyph name: assume the code is Latin-1.
    if (code >= 0x20 && code != 0x7F) append_utf8(out, code);
    return out;
}

std::vector<Glyph> Font::decode(std::string_view bytes) const {
    std::vector<Glyph> glyphs;
    if (!composite_) {
        glyphs.reserve(bytes.size());
        for (unsigned char c : bytes) {
            Glyph g;
            g.code = c;
            g.word_space = c == 32;
            g.text = simple_unicode(c);
            g.width = type3_ ? (simple_.has_widths ? simple_width(c) : 0.0) * type3_scale_
                             : simple_width(c) / 1000.0;
            g.advance = g.width;
            glyphs.push_back(std::move(g));
        }
        return glyphs;
    }
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const int len = encoding_.codespaces.empty() ? std::min<int>(2, static_cast<int>(bytes.size() - pos))
                                                     : encoding_.code_length(bytes.substr(pos), 2);
        const std::uint32_t code = big_endian(bytes.substr(pos, len));
        pos += static_cast<std::size_t>(std::max(len, 1));
        const std::uint32_t cid = identity_encoding_ ? code : encoding_.cid(code).value_or(0);
        Glyph g;
        g.code = code;
        g.word_space = len == 1 && code == 32;
        if (to_unicode_) {
            if (auto it = to_unicode_->unicode.find(code); it != to_unicode_->unicode.end()) g.text = it->second;
        }
        if (g.text.empty() && !to_unicode_) append_utf8(g.text, 0xFFFD);
        auto it = cid_widths_.find(cid);
        g.width = (it != cid_widths_.end() ? it->second : default_width_) / 1000.0;
        g.advance = vertical_ ? default_vertical_advance_ / 1000.0 : g.width;
        glyphs.push_back(std::move(g));
    }
    return glyphs;
}

}  // namespace docanno::pdf
