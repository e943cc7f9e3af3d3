// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "docanno/annotation.hpp"
#include "docanno/geometry.hpp"
#include "docanno/layout.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;
using nlohmann::json;

#ifndef DOCANNO_PARITY_FIXTURE
#error "DOCANNO_PARITY_FIXTURE must point at the shared geometry corpus"
#endif

namespace {

Bounds bounds(const json& j) { return {j["left"], j["top"], j["right"], j["bottom"]}; }

class GeometryParity : public ::testing::Test {
protected:
    void SetUp() override {
        corpus = json::parse(slurp(DOCANNO_PARITY_FIXTURE));
        for (const auto& p : corpus["pages"]) pages.push_back(layout_from_json(json::array({p["layout"]}))[0]);
    }
    json corpus;
    std::vector<PageTokenLayout> pages;
};

}  // namespace

TEST_F(GeometryParity, CorpusCoversTheDocumentedCases) {
    ASSERT_GE(pages.size(), 4u);
    EXPECT_EQ(pages[0], fixture_page());
    const json& first = corpus["select"][0];
    EXPECT_EQ(bounds(first["drag"]), (Bounds{15, 5, 35, 25}));
    EXPECT_EQ(first["expected"], json::array({0, 1}));
    EXPECT_EQ(bounds(corpus["snap"][0]["expected"]), (Bounds{7, 7, 53, 23}));
    EXPECT_EQ(corpus["select"][2]["expected"], json::array());
    EXPECT_GE(corpus["select"].size(), 50u);
    EXPECT_GE(corpus["snap"].size(), 30u);
}

TEST_F(GeometryParity, SelectionMatches) {
    for (const auto& c : corpus["select"]) {
        const auto got = select_tokens(pages.at(c["page"].get<int>()), bounds(c["drag"]));
        EXPECT_EQ(got, c["expected"].get<std::vector<int>>()) << c.dump();
    }
}

TEST_F(GeometryParity, SnappingMatches) {
    for (const auto& c : corpus["snap"]) {
        const PageTokenLayout& p = pages.at(c["page"].get<int>());
        std::vector<Token> tokens;
        for (int i : c["tokens"]) tokens.push_back(p.tokens.at(i));
        EXPECT_EQ(snap_bounds(tokens, c["padding"].get<double>(), p.page.size()), bounds(c["expected"])) << c.dump();
    }
}

TEST_F(GeometryParity, RescaleMatches) {
    for (const auto& c : corpus["rescale"]) {
        const Size from{c["from"][0], c["from"][1]}, to{c["to"][0], c["to"][1]};
        EXPECT_EQ(rescale_bounds(bounds(c["bounds"]), from, to), bounds(c["expected"])) << c.dump();
    }
}
