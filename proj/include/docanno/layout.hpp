// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "docanno/geometry.hpp"

namespace docanno {

/// Page geometry in the viewing orientation, in points.
struct PageInfo {
    int index = 0;
    double width = 0.0;
    double height = 0.0;

    Size size() const { return {width, height}; }

    friend bool operator==(const PageInfo&, const PageInfo&) = default;
};

/// A word-level unit: non-empty text without whitespace plus its box.
/// Geometry is kept in the x/y/width/height form of the layout file so that
/// serialisation round-trips exactly.
struct Token {
    std::string text;
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;

    static Token from_bounds(std::string text, const Bounds& b) {
        return {std::move(text), b.left, b.top, b.right - b.left, b.bottom - b.top};
    }
    Bounds bounds() const { return Bounds::from_xywh(x, y, width, height); }

    friend bool operator==(const Token&, const Token&) = default;
};

struct PageTokenLayout {
    PageInfo page;
    std::vector<Token> tokens;  // content-stream emission order

    friend bool operator==(const PageTokenLayout&, const PageTokenLayout&) = default;
};

using DocumentLayout = std::vector<PageTokenLayout>;

/// Slack allowed for glyphs that overhang the page rectangle.
inline constexpr double kPageSlack = 2.0;

/// True if any UTF-8 encoded code point of `text` is whitespace or a control character.
bool contains_whitespace(std::string_view text);

nlohmann::json layout_to_json(const DocumentLayout& layout);

/// Parses and validates the token-layout file structure. Throws Error(InvalidLayout)
/// whose message names the first offending location ("page 0, token 3: ...").
DocumentLayout layout_from_json(const nlohmann::json& j);

DocumentLayout parse_layout(std::string_view json_text);
std::string serialize_layout(const DocumentLayout& layout);

}  // namespace docanno
