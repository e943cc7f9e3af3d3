// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "docanno/annotation.hpp"
#include "docanno/error.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;

namespace {

std::vector<std::string> codes(const std::vector<Violation>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.code);
    return out;
}

// Tokens of `layout` whose boxes overlap `drag`, by direct rectangle comparison.
std::vector<int> brute_select(const PageTokenLayout& layout, const Bounds& drag) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(layout.tokens.size()); ++i) {
        const Token& t = layout.tokens[i];
        const bool overlap_x = std::min(t.x + t.width, drag.right) > std::max(t.x, drag.left);
        const bool overlap_y = std::min(t.y + t.height, drag.bottom) > std::max(t.y, drag.top);
        if (overlap_x && overlap_y) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST(SelectTokens, ExactTokenBounds) {
    const auto page = fixture_page();
    EXPECT_EQ(select_tokens(page, {10, 10, 20, 20}), std::vector<int>{0});
}

TEST(SelectTokens, EdgeContactExcluded) {
    const auto page = fixture_page();
    EXPECT_TRUE(select_tokens(page, {20, 10, 30, 20}).empty());
    EXPECT_TRUE(select_tokens(page, {0, 0, 10, 10}).empty());
}

TEST(SelectTokens, DragAcrossTwoTokens) {
    const auto page = fixture_page();
    const Bounds drag{15, 5, 35, 25};
    EXPECT_EQ(select_tokens(page, drag), (std::vector<int>{0, 1}));
    EXPECT_EQ(select_tokens(page, drag), brute_select(page, drag));
}

TEST(SelectTokens, MatchesBruteForceOnRandomLayouts) {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto layout = random_layout(rng, 0, uniform_int(rng, 0, 40));
        const double l = uniform(rng, 0, 600), t = uniform(rng, 0, 780);
        const Bounds drag{l, t, l + uniform(rng, 0, 200), t + uniform(rng, 0, 200)};
        EXPECT_EQ(select_tokens(layout, drag), brute_select(layout, drag));
    }
}

TEST(SnapBounds, UnionPlusPadding) {
    const auto page = fixture_page();
    EXPECT_EQ(snap_bounds(page.tokens, 3.0), (Bounds{7, 7, 53, 23}));
}

TEST(SnapBounds, SingleTokenNoPadding) {
    const auto page = fixture_page();
    EXPECT_EQ(snap_bounds(std::span(page.tokens).first(1), 0.0), (Bounds{10, 10, 20, 20}));
}

TEST(SnapBounds, ClampedAtPageEdge) {
    const std::vector<Token> near_edge{Token::from_bounds("x", {1, 10, 9, 20})};
    EXPECT_EQ(snap_bounds(near_edge, 3.0, Size{612, 792}), (Bounds{0, 7, 12, 23}));
}

TEST(SnapBounds, EmptySelectionThrows) {
    try {
        snap_bounds(std::vector<Token>{}, 3.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySelection);
    }
}

TEST(SnapBounds, OrderInvariance) {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        auto layout = random_layout(rng, 0, uniform_int(rng, 1, 15));
        const Bounds a = snap_bounds(layout.tokens, 3.0, layout.page.size());
        std::shuffle(layout.tokens.begin(), layout.tokens.end(), rng);
        EXPECT_EQ(snap_bounds(layout.tokens, 3.0, layout.page.size()), a);
    }
}

TEST(SnapBounds, Monotone) {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const auto layout = random_layout(rng, 0, uniform_int(rng, 2, 15));
        const double pad = uniform(rng, 0, 6);
        const std::span all(layout.tokens);
        const Bounds smaller = snap_bounds(all.first(all.size() - 1), pad, layout.page.size());
        const Bounds bigger = snap_bounds(all, pad, layout.page.size());
        EXPECT_LE(bigger.left, smaller.left);
        EXPECT_LE(bigger.top, smaller.top);
        EXPECT_GE(bigger.right, smaller.right);
        EXPECT_GE(bigger.bottom, smaller.bottom);
    }
}

TEST(SnapBounds, SelectionOfSnappedBoxContainsOriginalTokens) {
    Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        const auto layout = random_layout(rng, 0, uniform_int(rng, 1, 30));
        std::vector<int> subset;
        std::vector<Token> chosen;
        for (int k = 0; k < static_cast<int>(layout.tokens.size()); ++k)
            if (uniform_int(rng, 0, 2) == 0) subset.push_back(k);
        if (subset.empty()) subset.push_back(0);
        for (int k : subset) chosen.push_back(layout.tokens[k]);
        const auto picked = select_tokens(layout, snap_bounds(chosen, uniform(rng, 0, 6), layout.page.size()));
        const std::set<int> got(picked.begin(), picked.end());
        for (int k : subset) EXPECT_TRUE(got.contains(k));
    }
}

TEST(SnapBounds, SelectSnapReachesFixedPoint) {
    Rng rng(15);
    for (int i = 0; i < 500; ++i) {
        const auto layout = random_layout(rng, 0, uniform_int(rng, 1, 30));
        const double pad = uniform(rng, 0, 6);
        std::vector<Token> chosen{layout.tokens[uniform_int(rng, 0, static_cast<int>(layout.tokens.size()) - 1)]};
        Bounds box = snap_bounds(chosen, pad, layout.page.size());
        std::size_t steps = 0;
        for (;; ++steps) {
            ASSERT_LE(steps, layout.tokens.size());
            std::vector<Token> sel;
            for (int k : select_tokens(layout, box)) sel.push_back(layout.tokens[k]);
            const Bounds next = snap_bounds(sel, pad, layout.page.size());
            if (next == box) break;
            box = next;
        }
    }
}

TEST(SnapBounds, IsolatedSelectionIsImmediateFixedPoint) {
    // Tokens on a coarse grid, farther apart than twice the padding.
    PageTokenLayout layout;
    layout.page = {0, 612, 792};
    for (int row = 0; row < 10; ++row)
        for (int col = 0; col < 5; ++col)
            layout.tokens.push_back({"w", 20.0 + col * 110.0, 20.0 + row * 70.0, 60.0, 12.0});
    const Bounds drag{25, 25, 250, 100};
    std::vector<Token> sel;
    for (int k : select_tokens(layout, drag)) sel.push_back(layout.tokens[k]);
    const Bounds first = snap_bounds(sel, 3.0, layout.page.size());
    std::vector<Token> again;
    for (int k : select_tokens(layout, first)) again.push_back(layout.tokens[k]);
    EXPECT_EQ(again.size(), sel.size());
    EXPECT_EQ(snap_bounds(again, 3.0, layout.page.size()), first);
}

class ValidationTest : public ::testing::Test {
protected:
    DocumentLayout layouts{fixture_page()};
    LabelSchema schema = fixture_schema();

    AnnotationSet valid() const {
        AnnotationSet s;
        s.annotations.push_back(textual(layouts, "a1", "title", {{0, 0}, {0, 1}}));
        s.annotations.push_back(freeform("f1", 0, {100, 100, 300, 300}, "figure"));
        s.relations.push_back({"r1", "caption-of", {"a1", "f1"}});
        return s;
    }
};

TEST_F(ValidationTest, ValidSetHasNoViolations) { EXPECT_TRUE(validate_annotation_set(valid(), layouts, schema).empty()); }

TEST_F(ValidationTest, DanglingRelationTarget) {
    auto s = valid();
    s.relations[0].targets[1] = "deleted";
    const auto v = validate_annotation_set(s, layouts, schema);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].code, "dangling-relation-target");
    EXPECT_EQ(v[0].location, "relations[0].targetIds[1]");
}

TEST_F(ValidationTest, SnapMismatch) {
    auto s = valid();
    const Bounds snapped = snap_bounds(layouts, *s.annotations[0].tokens, schema.padding);
    EXPECT_EQ(snapped, (Bounds{7, 7, 53, 23}));
    s.annotations[0].bounds.right = snapped.right + 5.0;
    EXPECT_EQ(codes(validate_annotation_set(s, layouts, schema)), std::vector<std::string>{"snap-mismatch"});
}

TEST_F(ValidationTest, SnapToleranceBoundary) {
    auto s = valid();
    s.annotations[0].bounds.left += 0.5e-6;
    EXPECT_TRUE(validate_annotation_set(s, layouts, schema).empty());
    s.annotations[0].bounds.left += 1e-6;
    EXPECT_EQ(codes(validate_annotation_set(s, layouts, schema)), std::vector<std::string>{"snap-mismatch"});
}

TEST_F(ValidationTest, EveryViolationReported) {
    AnnotationSet s;
    s.annotations.push_back(freeform("x", 0, {10, 10, 20, 20}, "nonexistent"));
    s.annotations.push_back(freeform("x", 0, {30, 30, 20, 40}, "figure"));
    s.annotations.push_back(freeform("y", 3, {0, 0, 1, 1}, "figure"));
    s.annotations.push_back(freeform("z", 0, {600, 780, 700, 800}, "figure"));
    Annotation empty_refs = freeform("e", 0, {0, 0, 1, 1}, "title");
    empty_refs.tokens = std::vector<TokenRef>{};
    s.annotations.push_back(empty_refs);
    Annotation bad_ref = freeform("b", 0, {0, 0, 1, 1}, "title");
    bad_ref.tokens = std::vector<TokenRef>{{1, 0}, {0, 9}};
    s.annotations.push_back(bad_ref);
    s.relations.push_back({"r", "unknown-rel", {"x"}});
    s.relations.push_back({"r", "caption-of", {"y", "y"}});
    const auto got = codes(validate_annotation_set(s, layouts, schema));
    const std::vector<std::string> want{"unknown-label",     "duplicate-annotation-id", "invalid-bounds",
                                        "unknown-page",      "out-of-page-bounds",      "empty-token-refs",
                                        "token-page-mismatch", "unknown-token",         "unknown-relation-label",
                                        "too-few-targets",   "duplicate-relation-id",   "duplicate-relation-target"};
    EXPECT_EQ(got, want);
}

TEST_F(ValidationTest, CanonicalizeSnapsTextualBoundsOnly) {
    auto s = valid();
    s.annotations[0].bounds = {0, 0, 100, 100};
    const auto c = canonicalize(s, layouts, schema.padding);
    EXPECT_EQ(c.annotations[0].bounds, (Bounds{7, 7, 53, 23}));
    EXPECT_EQ(c.annotations[1], s.annotations[1]);
}

TEST(AnnotationJson, RoundTripAndFieldNames) {
    const DocumentLayout layouts{fixture_page()};
    AnnotationSet s;
    s.annotations.push_back(textual(layouts, "a1", "title", {{0, 0}, {0, 1}}));
    s.annotations.push_back(freeform("f1", 0, {100.25, 100, 300, 300.5}, "figure"));
    s.relations.push_back({"r1", "caption-of", {"a1", "f1"}});
    const nlohmann::json j = annotation_set_to_json(s);
    EXPECT_EQ(j["annotations"][0]["tokens"][1]["pageIndex"], 0);
    EXPECT_EQ(j["annotations"][0]["tokens"][1]["tokenIndex"], 1);
    EXPECT_TRUE(j["annotations"][1]["tokens"].is_null());
    EXPECT_EQ(j["annotations"][0]["bounds"]["right"], 53.0);
    EXPECT_EQ(j["relations"][0]["targetIds"][1], "f1");
    EXPECT_EQ(annotation_set_from_json(nlohmann::json::parse(j.dump())), s);
}

TEST(AnnotationJson, ErrorsNameTheLocation) {
    const auto bad = nlohmann::json::parse(R"({"annotations":[{"id":"a","page":0,"label":"x","bounds":{"left":0,"top":0,"right":1}}]})");
    try {
        annotation_set_from_json(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidFormat);
        EXPECT_NE(std::string(e.what()).find("annotations[0].bounds"), std::string::npos) << e.what();
    }
}

TEST(AnnotationIds, HexAndUnique) {
    std::set<std::string> seen;
    for (int i = 0; i < 1000; ++i) {
        const std::string id = generate_annotation_id();
        EXPECT_EQ(id.size(), 32u);
        EXPECT_EQ(id.find_first_not_of("0123456789abcdef"), std::string::npos);
        seen.insert(id);
    }
    EXPECT_EQ(seen.size(), 1000u);
}

TEST(SchemaJson, RoundTripAndValidation) {
    const LabelSchema s = fixture_schema();
    EXPECT_EQ(schema_from_json(schema_to_json(s)), s);
    const auto config = nlohmann::json::parse(R"({"labels":[{"text":"title","color":"#ff0000"}],"relations":[{"text":"r"}]})");
    const LabelSchema parsed = schema_from_json(config);
    ASSERT_EQ(parsed.labels.size(), 1u);
    EXPECT_FALSE(parsed.labels[0].freeform);
    EXPECT_DOUBLE_EQ(parsed.padding, kDefaultPadding);
    for (const char* bad : {R"({"labels":[{"text":"a","color":"red"}]})",
                            R"({"labels":[{"text":"a","color":"#000000"},{"text":"a","color":"#111111"}]})",
                            R"({"labels":[{"text":"a","color":"#000000"}],"relations":[{"text":"r"},{"text":"r"}]})"}) {
        EXPECT_THROW(schema_from_json(nlohmann::json::parse(bad)), Error) << bad;
    }
}
