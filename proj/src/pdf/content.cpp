// SPDX-License-Identifier: Apache-2.0
#include "pdf/content.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "docanno/error.hpp"
#include "pdf/lexer.hpp"

namespace docanno::pdf {
namespace {

constexpr int kMaxFormDepth = 12;
constexpr std::size_t kMaxOperands = 4096;

Matrix view_matrix(const std::array<double, 4>& box, int rotate) {
    const double llx = box[0], lly = box[1], urx = box[2], ury = box[3];
    switch (rotate) {
        case 90: return {0, 1, 1, 0, -lly, -llx};
        case 180: return {-1, 0, 0, 1, urx, -lly};
        case 270: return {0, -1, -1, 0, ury, urx};
        default: return {1, 0, 0, -1, -llx, ury};
    }
}

int normalise_rotation(int rotate) {
    int r = ((rotate % 360) + 360) % 360;
    return (r / 90) * 90;
}

double num(const std::vector<Object>& args, std::size_t i) {
    return i < args.size() ? args[i].number().value_or(0.0) : 0.0;
}

// Decodes each UTF-8 sequence and reports whether it is whitespace or a control character.
bool is_space_codepoint(char32_t cp) {
    return cp < 0x20 || cp == 0x20 || cp == 0x7F || cp == 0x85 || cp == 0xA0 || cp == 0x1680 ||
           (cp >= 0x2000 && cp <= 0x200B) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F ||
           cp == 0x205F || cp == 0x3000 || cp == 0xFEFF;
}

std::vector<std::pair<std::string, bool>> split_codepoints(const std::string& utf8) {
    std::vector<std::pair<std::string, bool>> out;
    std::size_t i = 0;
    while (i < utf8.size()) {
        const auto lead = static_cast<unsigned char>(utf8[i]);
        std::size_t n = lead < 0x80 ? 1 : (lead >> 5) == 6 ? 2 : (lead >> 4) == 14 ? 3 : (lead >> 3) == 30 ? 4 : 1;
        n = std::min(n, utf8.size() - i);
        char32_t cp = n == 1 ? lead : lead & (0x3F >> (n - 1));
        for (std::size_t k = 1; k < n; ++k) cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
        out.emplace_back(utf8.substr(i, n), is_space_codepoint(cp));
        i += n;
    }
    return out;
}

}  // namespace

PageInterpreter::PageInterpreter(const Document& doc, const PageNode& page, int page_index)
    : doc_(doc), page_(page), page_index_(page_index) {
    const auto& box = page.crop_box.value_or(page.media_box);
    // a crop box is intersected with the media box
    std::array<double, 4> visible = box;
    if (page.crop_box) {
        visible = {std::max(box[0], page.media_box[0]), std::max(box[1], page.media_box[1]),
                   std::min(box[2], page.media_box[2]), std::min(box[3], page.media_box[3])};
        if (visible[2] <= visible[0] || visible[3] <= visible[1]) visible = page.media_box;
    }
    const int rotate = normalise_rotation(page.rotate);
    view_ = view_matrix(visible, rotate);
    const double w = visible[2] - visible[0];
    const double h = visible[3] - visible[1];
    view_size_ = (rotate == 90 || rotate == 270) ? Size{h, w} : Size{w, h};
}

void PageInterpreter::warn(const std::string& what) {
    warnings_.push_back("page " + std::to_string(page_index_) + ": " + what);
}

std::vector<Token> PageInterpreter::run() {
    Object contents = doc_.lookup(*page_.dict, "Contents");
    std::string content;
    auto append_stream = [&](const Object& obj) {
        Object resolved = doc_.resolve(obj);
        const Stream* s = resolved.stream();
        if (!s) return;
        try {
            content += doc_.decode_stream(*s);
            content += '\n';
        } catch (const Error& e) {
            warn(std::string("skipped content stream: ") + e.what());
        }
    };
    try {
        if (contents.stream()) {
            append_stream(contents);
        } else if (const Array* parts = contents.array()) {
            for (const Object& part : *parts) append_stream(part);
        }
        execute(content, page_.resources, 0);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EncryptedPdf) throw;
        warn(std::string("content interpretation stopped: ") + e.what());
    }
    flush();
    return std::move(tokens_);
}

void PageInterpreter::execute(const std::string& content, const Object& resources, int depth) {
    Lexer lex(content, 0, false);
    std::vector<Object> args;
    while (auto obj = lex.next()) {
        const Keyword* kw = obj->keyword();
        if (!kw) {
            if (args.size() < kMaxOperands) args.push_back(std::move(*obj));
            continue;
        }
        if (kw->value == "BI") {
            // inline image: skip the parameters and binary data up to EI
            while (auto p = lex.next()) {
                if (p->keyword() && p->keyword()->value == "ID") break;
            }
            std::size_t pos = lex.pos() + 1;
            for (;;) {
                pos = content.find("EI", pos);
                if (pos == std::string::npos) return;
                const bool before = pos > 0 && is_pdf_whitespace(static_cast<unsigned char>(content[pos - 1]));
                const bool after = pos + 2 >= content.size() ||
                                   is_pdf_whitespace(static_cast<unsigned char>(content[pos + 2]));
                if (before && after) break;
                pos += 2;
            }
            lex.seek(pos + 2);
            args.clear();
            continue;
        }
        op(kw->value, args, resources, depth);
        args.clear();
    }
}

void PageInterpreter::op(const std::string& name, std::vector<Object>& args, const Object& resources,
                         int depth) {
    TextState& ts = gs_.text;
    if (name == "q") {
        stack_.push_back(gs_);
    } else if (name == "Q") {
        if (!stack_.empty()) {
            gs_ = stack_.back();
            stack_.pop_back();
        }
    } else if (name == "cm") {
        if (args.size() >= 6) {
            Matrix m{num(args, 0), num(args, 1), num(args, 2), num(args, 3), num(args, 4), num(args, 5)};
            gs_.ctm = m.then(gs_.ctm);
        }
    } else if (name == "BT") {
        flush();
        in_text_ = true;
        text_matrix_ = line_matrix_ = Matrix{};
    } else if (name == "ET") {
        flush();
        in_text_ = false;
    } else if (name == "Tc") {
        ts.char_spacing = num(args, 0);
    } else if (name == "Tw") {
        ts.word_spacing = num(args, 0);
    } else if (name == "Tz") {
        ts.horizontal_scale = num(args, 0) / 100.0;
    } else if (name == "TL") {
        ts.leading = num(args, 0);
    } else if (name == "Ts") {
        ts.rise = num(args, 0);
    } else if (name == "Tf") {
        if (args.size() >= 2 && args[0].name()) {
            ts.font = font_from(resources, args[0].name()->value);
            ts.font_size = num(args, 1);
        }
    } else if (name == "Td" || name == "TD") {
        if (name == "TD") ts.leading = -num(args, 1);
        line_matrix_ = Matrix::translation(num(args, 0), num(args, 1)).then(line_matrix_);
        text_matrix_ = line_matrix_;
    } else if (name == "Tm") {
        if (args.size() >= 6) {
            line_matrix_ = Matrix{num(args, 0), num(args, 1), num(args, 2), num(args, 3), num(args, 4), num(args, 5)};
            text_matrix_ = line_matrix_;
        }
    } else if (name == "T*") {
        line_matrix_ = Matrix::translation(0, -ts.leading).then(line_matrix_);
        text_matrix_ = line_matrix_;
    } else if (name == "Tj") {
        if (!args.empty() && args.back().string()) show_text(args.back().string()->bytes);
    } else if (name == "'") {
        line_matrix_ = Matrix::translation(0, -ts.leading).then(line_matrix_);
        text_matrix_ = line_matrix_;
        if (!args.empty() && args.back().string()) show_text(args.back().string()->bytes);
    } else if (name == "\"") {
        if (args.size() >= 3) {
            ts.word_spacing = num(args, 0);
            ts.char_spacing = num(args, 1);
        }
        line_matrix_ = Matrix::translation(0, -ts.leading).then(line_matrix_);
        text_matrix_ = line_matrix_;
        if (!args.empty() && args.back().string()) show_text(args.back().string()->bytes);
    } else if (name == "TJ") {
        if (!args.empty()) {
            if (const Array* items = args.back().array()) {
                for (const Object& item : *items) {
                    if (const String* s = item.string()) {
                        show_text(s->bytes);
                    } else if (auto n = item.number()) {
                        adjust_text(*n);
                    }
                }
            }
        }
    } else if (name == "Do") {
        if (!args.empty() && args[0].name()) run_form(args[0].name()->value, resources, depth);
    }
}

std::shared_ptr<const Font> PageInterpreter::font_from(const Object& resources, const std::string& name) {
    const Dict* res = resources.dict();
    Object fonts = res ? doc_.lookup(*res, "Font") : Object{};
    const Dict* font_dict = fonts.dict();
    const Object* entry = font_dict ? font_dict->find(name) : nullptr;
    if (!entry) {
        warn("missing font resource /" + name + "; using fallback metrics");
        return Font::fallback();
    }
    std::ostringstream key;
    if (const Ref* r = entry->ref()) {
        key << "ref:" << r->num;
    } else {
        key << "res:" << static_cast<const void*>(font_dict) << '/' << name;
    }
    auto it = font_cache_.find(key.str());
    if (it != font_cache_.end()) return it->second;
    std::shared_ptr<const Font> font;
    try {
        font = Font::load(doc_, *entry);
    } catch (const Error& e) {
        warn("unreadable font /" + name + " (" + e.what() + "); using fallback metrics");
        font = Font::fallback();
    }
    font_cache_.emplace(key.str(), font);
    return font;
}

void PageInterpreter::adjust_text(double amount) {
    const TextState& ts = gs_.text;
    const double shift = -amount / 1000.0 * ts.font_size;
    if (ts.font && ts.font->is_vertical()) {
        text_matrix_ = Matrix::translation(0, shift).then(text_matrix_);
    } else {
        text_matrix_ = Matrix::translation(shift * ts.horizontal_scale, 0).then(text_matrix_);
    }
}

void PageInterpreter::show_text(const std::string& bytes) {
    TextState& ts = gs_.text;
    if (!ts.font) {
        warn("text shown without a font; using fallback metrics");
        ts.font = Font::fallback();
    }
    const Font& font = *ts.font;
    const std::vector<Glyph> glyphs = font.decode(bytes);
    if (font.is_type3()) {
        flush();
        if (!type3_warned_) {
            warn("skipped text in Type 3 font " + (font.base_name().empty() ? std::string("(unnamed)") : font.base_name()));
            type3_warned_ = true;
        }
    }
    for (const Glyph& g : glyphs) {
        if (!font.is_type3()) emit_glyph(g);
        const double spacing = ts.char_spacing + (g.word_space ? ts.word_spacing : 0.0);
        if (font.is_vertical()) {
            text_matrix_ = Matrix::translation(0, g.advance * ts.font_size + spacing).then(text_matrix_);
        } else {
            const double tx = (g.advance * ts.font_size + spacing) * ts.horizontal_scale;
            text_matrix_ = Matrix::translation(tx, 0).then(text_matrix_);
        }
    }
}

void PageInterpreter::emit_glyph(const Glyph& glyph) {
    const TextState& ts = gs_.text;
    const Font& font = *ts.font;
    const Matrix text_space{ts.font_size * ts.horizontal_scale, 0, 0, ts.font_size, 0, ts.rise};
    const Matrix to_view = text_matrix_.then(gs_.ctm).then(view_);
    const Matrix glyph_to_view = text_space.then(to_view);

    // glyph rectangle in unscaled text space, origin at the pen position
    double x0 = 0.0, x1 = glyph.width, y0 = -font.descent(), y1 = font.ascent();
    Point advance{glyph.width, 0.0};
    if (font.is_vertical()) {
        constexpr double kVerticalOrigin = 0.88;
        x0 = -glyph.width / 2.0;
        x1 = glyph.width / 2.0;
        y0 -= kVerticalOrigin;
        y1 -= kVerticalOrigin;
        advance = {0.0, glyph.advance};
    }
    const Point corners[4] = {glyph_to_view.apply({x0, y0}), glyph_to_view.apply({x1, y0}),
                              glyph_to_view.apply({x1, y1}), glyph_to_view.apply({x0, y1})};
    Bounds box{corners[0].x, corners[0].y, corners[0].x, corners[0].y};
    for (const Point& p : corners) box = union_of(box, Bounds{p.x, p.y, p.x, p.y});

    const Point start = glyph_to_view.apply({0.0, 0.0});
    const Point end = glyph_to_view.apply(advance);
    Point dir = glyph_to_view.apply_vector(font.is_vertical() ? Point{0.0, -1.0} : Point{1.0, 0.0});
    const double dir_len = length(dir);
    if (dir_len > 0.0) dir = {dir.x / dir_len, dir.y / dir_len};
    const double size = length(to_view.apply_vector({0.0, ts.font_size}));

    const auto pieces = split_codepoints(glyph.text);
    if (pieces.empty()) {
        if (pending_.active) {  // unmapped glyph: keep the run going
            pending_.box = union_of(pending_.box, box);
            pending_.end = end;
        }
        return;
    }

    if (pending_.active) {
        const Point d{start.x - pending_.end.x, start.y - pending_.end.y};
        const double along = d.x * pending_.direction.x + d.y * pending_.direction.y;
        const double across = std::abs(d.x * pending_.direction.y - d.y * pending_.direction.x);
        const double turn = dir.x * pending_.direction.x + dir.y * pending_.direction.y;
        const double fs = std::max(size, pending_.font_size);
        if (std::abs(along) > kMaxGlyphGap * fs || across > kMaxBaselineShift * fs || turn < 0.99) flush();
    }

    for (const auto& [text, space] : pieces) {
        if (space) {
            flush();
            continue;
        }
        if (!pending_.active) {
            pending_.active = true;
            pending_.text.clear();
            pending_.box = box;
            pending_.direction = dir;
        }
        pending_.text += text;
        pending_.box = union_of(pending_.box, box);
    }
    if (pending_.active) {
        pending_.end = end;
        pending_.font_size = size;
    }
}

void PageInterpreter::flush() {
    if (!pending_.active) return;
    pending_.active = false;
    if (pending_.text.empty()) return;
    const Bounds page_area = expanded(Bounds{0, 0, view_size_.width, view_size_.height}, kPageSlack);
    Bounds b = pending_.box;
    if (b.right < page_area.left || b.left > page_area.right || b.bottom < page_area.top ||
        b.top > page_area.bottom) {
        warn("dropped off-page token '" + pending_.text + "'");
        return;
    }
    b = {std::clamp(b.left, page_area.left, page_area.right), std::clamp(b.top, page_area.top, page_area.bottom),
         std::clamp(b.right, page_area.left, page_area.right), std::clamp(b.bottom, page_area.top, page_area.bottom)};
    tokens_.push_back(Token::from_bounds(std::move(pending_.text), b));
    pending_.text.clear();
}

void PageInterpreter::run_form(const std::string& name, const Object& resources, int depth) {
    const Dict* res = resources.dict();
    if (!res) return;
    Object xobjects = doc_.lookup(*res, "XObject");
    const Dict* xd = xobjects.dict();
    if (!xd || !xd->find(name)) return;
    Object xobj = doc_.resolve(*xd->find(name));
    const Stream* s = xobj.stream();
    if (!s) return;
    const Object* subtype = s->dict.find("Subtype");
    if (!subtype || !subtype->name() || subtype->name()->value != "Form") return;
    if (depth >= kMaxFormDepth) {
        warn("form XObject nesting too deep at /" + name);
        return;
    }
    std::string content;
    try {
        content = doc_.decode_stream(*s);
    } catch (const Error& e) {
        warn("skipped form XObject /" + name + ": " + e.what());
        return;
    }
    flush();
    const GraphicsState saved_gs = gs_;
    const auto saved_stack_size = stack_.size();
    const Matrix saved_tm = text_matrix_, saved_tlm = line_matrix_;
    if (Object m = doc_.lookup(s->dict, "Matrix"); const Array* a = m.array()) {
        if (a->size() == 6) {
            Matrix fm{doc_.resolve((*a)[0]).number().value_or(1), doc_.resolve((*a)[1]).number().value_or(0),
                      doc_.resolve((*a)[2]).number().value_or(0), doc_.resolve((*a)[3]).number().value_or(1),
                      doc_.resolve((*a)[4]).number().value_or(0), doc_.resolve((*a)[5]).number().value_or(0)};
            gs_.ctm = fm.then(gs_.ctm);
        }
    }
    Object form_resources = s->dict.contains("Resources") ? doc_.lookup(s->dict, "Resources") : resources;
    execute(content, form_resources, depth + 1);
    flush();
    gs_ = saved_gs;
    stack_.resize(std::min(stack_.size(), saved_stack_size));
    text_matrix_ = saved_tm;
    line_matrix_ = saved_tlm;
}

}  // namespace docanno::pdf
