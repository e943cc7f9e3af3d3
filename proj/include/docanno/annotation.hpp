// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "docanno/geometry.hpp"
#include "docanno/layout.hpp"

namespace docanno {

inline constexpr double kDefaultPadding = 3.0;

struct TokenRef {
    int page = 0;
    int token = 0;

    friend auto operator<=>(const TokenRef&, const TokenRef&) = default;
};

/// A labeled region. Textual annotations carry token refs; freeform ones do not.
struct Annotation {
    std::string id;
    int page = 0;
    Bounds bounds;
    std::string label;
    std::optional<std::vector<TokenRef>> tokens;

    bool is_textual() const { return tokens.has_value(); }

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct RelationGroup {
    std::string id;
    std::string label;
    std::vector<std::string> targets;

    friend bool operator==(const RelationGroup&, const RelationGroup&) = default;
};

struct AnnotationSet {
    std::vector<Annotation> annotations;
    std::vector<RelationGroup> relations;

    bool empty() const { return annotations.empty() && relations.empty(); }

    friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

struct Label {
    std::string name;
    std::string color;  // "#rrggbb"
    bool freeform = false;

    friend bool operator==(const Label&, const Label&) = default;
};

struct LabelSchema {
    std::vector<Label> labels;
    std::vector<std::string> relations;
    double padding = kDefaultPadding;

    const Label* find_label(std::string_view name) const;
    bool has_relation(std::string_view name) const;

    friend bool operator==(const LabelSchema&, const LabelSchema&) = default;
};

/// Indices of tokens overlapping `drag` with strictly positive area, in layout order.
std::vector<int> select_tokens(const PageTokenLayout& layout, const Bounds& drag);

/// Padded union of the token boxes, clamped to `page` when given.
/// Throws Error(EmptySelection) for an empty list.
Bounds snap_bounds(std::span<const Token> tokens, double padding = kDefaultPadding,
                   std::optional<Size> page = std::nullopt);

/// Snaps over token refs into `layouts`. The refs must be valid.
Bounds snap_bounds(const DocumentLayout& layouts, std::span<const TokenRef> refs,
                   double padding = kDefaultPadding);

struct Violation {
    std::string code;      // e.g. "dangling-relation-target"
    std::string location;  // e.g. "relations[0].targetIds[1]"
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Tolerance used when comparing stored textual bounds against their snapped value.
inline constexpr double kSnapTolerance = 1e-6;

/// Every invariant violation in the set; empty means valid.
std::vector<Violation> validate_annotation_set(const AnnotationSet& set,
                                               const DocumentLayout& layouts,
                                               const LabelSchema& schema);

/// Replaces the bounds of every resolvable textual annotation with its snapped bounds.
AnnotationSet canonicalize(AnnotationSet set, const DocumentLayout& layouts, double padding);

/// Random 128-bit identifier rendered as 32 lowercase hex digits.
std::string generate_annotation_id();

nlohmann::json annotation_set_to_json(const AnnotationSet& set);
/// Throws Error(InvalidFormat) naming the offending JSON path.
AnnotationSet annotation_set_from_json(const nlohmann::json& j);

nlohmann::json schema_to_json(const LabelSchema& schema);
/// Throws Error(InvalidFormat) for duplicate names, bad colors or missing fields.
LabelSchema schema_from_json(const nlohmann::json& j);

}  // namespace docanno
