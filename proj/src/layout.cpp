// SPDX-License-Identifier: Apache-2.0
#include "docanno/layout.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"

namespace docanno {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::InvalidLayout, where + ": " + what);
}

double number_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) invalid(where, std::string("missing numeric field '") + key + "'");
    const double v = it->get<double>();
    if (!std::isfinite(v)) invalid(where, std::string("non-finite '") + key + "'");
    return v;
}

}  // namespace

bool contains_whitespace(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t n = lead < 0x80 ? 1 : (lead >> 5) == 6 ? 2 : (lead >> 4) == 14 ? 3 : (lead >> 3) == 30 ? 4 : 1;
        n = std::min(n, text.size() - i);
        char32_t cp = n == 1 ? lead : lead & (0x3F >> (n - 1));
        for (std::size_t k = 1; k < n; ++k) cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3F);
        if (cp <= 0x20 || cp == 0x7F || cp == 0x85 || cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200B) ||
            cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000 || cp == 0xFEFF) {
            return true;
        }
        i += n;
    }
    return false;
}

nlohmann::json layout_to_json(const DocumentLayout& layout) {
    json pages = json::array();
    for (const PageTokenLayout& p : layout) {
        json tokens = json::array();
        for (const Token& t : p.tokens) {
            tokens.push_back({{"x", t.x},
                              {"y", t.y},
                              {"width", t.width},
                              {"height", t.height},
                              {"text", t.text}});
        }
        pages.push_back({{"page", {{"index", p.page.index}, {"width", p.page.width}, {"height", p.page.height}}},
                         {"tokens", std::move(tokens)}});
    }
    return pages;
}

DocumentLayout layout_from_json(const nlohmann::json& j) {
    if (!j.is_array()) invalid("document", "expected a list of pages");
    DocumentLayout layout;
    layout.reserve(j.size());
    for (std::size_t pi = 0; pi < j.size(); ++pi) {
        const std::string page_where = "page " + std::to_string(pi);
        const json& pj = j[pi];
        if (!pj.is_object()) invalid(page_where, "expected an object");
        auto info = pj.find("page");
        if (info == pj.end() || !info->is_object()) invalid(page_where, "missing 'page' object");
        PageTokenLayout page;
        auto idx = info->find("index");
        if (idx == info->end() || !idx->is_number_integer()) invalid(page_where, "missing integer 'index'");
        page.page.index = idx->get<int>();
        if (page.page.index != static_cast<int>(pi)) {
            invalid(page_where, "index " + std::to_string(page.page.index) + " is not contiguous");
        }
        page.page.width = number_field(*info, "width", page_where);
        page.page.height = number_field(*info, "height", page_where);
        if (!(page.page.width > 0.0) || !(page.page.height > 0.0)) invalid(page_where, "page dimensions must be positive");

        auto tokens = pj.find("tokens");
        if (tokens == pj.end() || !tokens->is_array()) invalid(page_where, "missing 'tokens' list");
        page.tokens.reserve(tokens->size());
        for (std::size_t ti = 0; ti < tokens->size(); ++ti) {
            const std::string where = page_where + ", token " + std::to_string(ti);
            const json& tj = (*tokens)[ti];
            if (!tj.is_object()) invalid(where, "expected an object");
            const double x = number_field(tj, "x", where);
            const double y = number_field(tj, "y", where);
            const double w = number_field(tj, "width", where);
            const double h = number_field(tj, "height", where);
            if (w < 0.0) invalid(where, "negative width");
            if (h < 0.0) invalid(where, "negative height");
            auto text = tj.find("text");
            if (text == tj.end() || !text->is_string()) invalid(where, "missing string 'text'");
            Token token{text->get<std::string>(), x, y, w, h};
            if (token.text.empty()) invalid(where, "empty text");
            if (contains_whitespace(token.text)) invalid(where, "text contains whitespace");
            const Bounds b = token.bounds();
            if (b.left < -kPageSlack || b.top < -kPageSlack || b.right > page.page.width + kPageSlack ||
                b.bottom > page.page.height + kPageSlack) {
                invalid(where, "bounds outside the page");
            }
            page.tokens.push_back(std::move(token));
        }
        layout.push_back(std::move(page));
    }
    return layout;
}

DocumentLayout parse_layout(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::InvalidLayout, "document: not valid JSON");
    return layout_from_json(j);
}

std::string serialize_layout(const DocumentLayout& layout) { return layout_to_json(layout).dump(); }

}  // namespace docanno
