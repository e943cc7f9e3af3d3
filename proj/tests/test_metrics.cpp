// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "docanno/error.hpp"
#include "docanno/metrics.hpp"
#include "docanno/store.hpp"
#include "support/oracles.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;

namespace {

DocumentLayout twenty_token_doc() {
    Rng rng(5);
    return {random_layout(rng, 0, 20)};
}

std::vector<TokenRef> refs(int first, int last) {
    std::vector<TokenRef> out;
    for (int t = first; t <= last; ++t) out.push_back({0, t});
    return out;
}

const std::vector<std::string> kCats{"figure", "table"};

double ap(const std::vector<EvalImage>& images, std::vector<double> thr = default_iou_thresholds()) {
    return average_precision(images, kCats, thr);
}

std::vector<EvalImage> swapped(std::vector<EvalImage> images) {
    for (auto& img : images) std::swap(img.ground_truth, img.predictions);
    return images;
}

}  // namespace

TEST(DefaultThresholds, TenSteps) {
    const auto t = default_iou_thresholds();
    ASSERT_EQ(t.size(), 10u);
    EXPECT_EQ(t.front(), 0.50);
    EXPECT_EQ(t[1], 0.55);
    EXPECT_EQ(t.back(), 0.95);
}

TEST(TokenAccuracy, IdenticalSets) {
    const auto doc = twenty_token_doc();
    AnnotationSet s;
    s.annotations.push_back(textual(doc, "x", "title", refs(0, 9)));
    EXPECT_EQ(token_accuracy(s, s, doc), 100.0);
}

TEST(TokenAccuracy, OneOfTenDiffers) {
    const auto doc = twenty_token_doc();
    AnnotationSet a, b;
    a.annotations.push_back(textual(doc, "x", "title", refs(0, 9)));
    b.annotations.push_back(textual(doc, "y", "title", refs(0, 8)));
    b.annotations.push_back(textual(doc, "z", "author", refs(9, 9)));
    EXPECT_EQ(token_accuracy(a, b, doc), 90.0);
}

TEST(TokenAccuracy, DisjointTokensCountAgainst) {
    const auto doc = twenty_token_doc();
    AnnotationSet a, b;
    a.annotations.push_back(textual(doc, "x", "title", refs(0, 4)));
    b.annotations.push_back(textual(doc, "y", "title", refs(5, 9)));
    EXPECT_EQ(token_accuracy(a, b, doc), 0.0);
    const auto counts = token_agreement(token_label_map(a, doc), token_label_map(b, doc));
    EXPECT_EQ(counts.compared, 10u);
    EXPECT_EQ(counts.agreed, 0u);
}

TEST(TokenAccuracy, NothingLabeled) {
    const auto doc = twenty_token_doc();
    AnnotationSet a;
    a.annotations.push_back(freeform("f", 0, {1, 1, 50, 50}, "figure"));
    EXPECT_EQ(token_accuracy(a, AnnotationSet{}, doc), 100.0);
}

TEST(TokenLabelMap, SmallestAnnotationWins) {
    const DocumentLayout doc{fixture_page()};
    AnnotationSet s;
    s.annotations.push_back(textual(doc, "big", "paragraph", {{0, 0}, {0, 1}}));
    s.annotations.push_back(textual(doc, "small", "title", {{0, 1}}));
    const auto m = token_label_map(s, doc);
    EXPECT_EQ(m.at({0, 0}), (TokenLabel{"paragraph", "big"}));
    EXPECT_EQ(m.at({0, 1}), (TokenLabel{"title", "small"}));
}

TEST(TokenLabelMap, EqualAreaTieGoesToSmallerId) {
    const DocumentLayout doc{fixture_page()};
    AnnotationSet s;
    s.annotations.push_back(textual(doc, "m", "title", {{0, 0}}));
    s.annotations.push_back(textual(doc, "k", "author", {{0, 0}}));
    EXPECT_EQ(token_label_map(s, doc).at({0, 0}), (TokenLabel{"author", "k"}));
}

TEST(TokenLabelMap, DanglingRefIsLayoutMismatch) {
    const DocumentLayout doc{fixture_page()};
    AnnotationSet s;
    s.annotations.push_back({"x", 0, {0, 0, 1, 1}, "title", std::vector<TokenRef>{{0, 7}}});
    try {
        token_label_map(s, doc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LayoutMismatch);
    }
    s.annotations[0].tokens = std::vector<TokenRef>{{3, 0}};
    EXPECT_THROW(token_accuracy(s, s, doc), Error);
}

TEST(AveragePrecision, IdenticalSets) {
    std::vector<EvalImage> images(2);
    images[0].ground_truth = {{{0, 0, 10, 10}, "figure"}, {{20, 20, 40, 30}, "table"}};
    images[1].ground_truth = {{{5, 5, 9, 9}, "figure"}};
    for (auto& img : images) img.predictions = img.ground_truth;
    EXPECT_EQ(ap(images), 1.0);
}

TEST(AveragePrecision, IoUExactlySixtyPercent) {
    std::vector<EvalImage> images(1);
    images[0].ground_truth = {{{0, 0, 10, 10}, "figure"}};
    images[0].predictions = {{{0, 0, 10, 6}, "figure"}};
    ASSERT_EQ(iou(images[0].ground_truth[0].bounds, images[0].predictions[0].bounds), 0.6);
    EXPECT_DOUBLE_EQ(ap(images, {0.50, 0.75}), 0.5);
    EXPECT_NEAR(ap(images, {0.50, 0.75}), reference_ap(images, kCats, {0.50, 0.75}), 1e-12);
    EXPECT_EQ(ap(images, {0.60}), 1.0);
}

TEST(AveragePrecision, NotCommutative) {
    // The spurious prediction comes first in file order.
    std::vector<EvalImage> images(1);
    images[0].ground_truth = {{{0, 0, 10, 10}, "figure"}};
    images[0].predictions = {{{50, 50, 60, 60}, "figure"}, {{0, 0, 10, 10}, "figure"}};
    const double forward = ap(images);
    const double backward = ap(swapped(images));
    EXPECT_LT(forward, 1.0);
    EXPECT_DOUBLE_EQ(forward, 0.5);
    EXPECT_DOUBLE_EQ(backward, 51.0 / 101.0);
    EXPECT_NE(forward, backward);
    EXPECT_NEAR(forward, reference_ap(images, kCats, default_iou_thresholds()), 1e-12);
    EXPECT_NEAR(backward, reference_ap(swapped(images), kCats, default_iou_thresholds()), 1e-12);
}

TEST(AveragePrecision, EmptyGroundTruth) {
    std::vector<EvalImage> images(1);
    EXPECT_EQ(ap(images), 1.0);
    images[0].predictions = {{{0, 0, 10, 10}, "figure"}};
    EXPECT_EQ(ap(images), 0.0);
}

TEST(AveragePrecision, CategoriesAbsentFromGroundTruthAreSkipped) {
    std::vector<EvalImage> images(1);
    images[0].ground_truth = {{{0, 0, 10, 10}, "figure"}};
    images[0].predictions = {{{0, 0, 10, 10}, "figure"}, {{30, 30, 40, 40}, "table"}};
    EXPECT_EQ(ap(images), 1.0);
}

TEST(AveragePrecision, UnknownCategory) {
    std::vector<EvalImage> images(1);
    images[0].ground_truth = {{{0, 0, 10, 10}, "chart"}};
    try {
        ap(images);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownCategory);
    }
    images[0].ground_truth[0].category = "figure";
    images[0].predictions = {{{0, 0, 10, 10}, "chart"}};
    EXPECT_THROW(ap(images), Error);
}

TEST(AveragePrecision, DegenerateBoxesNeverMatch) {
    std::vector<EvalImage> images(1);
    images[0].ground_truth = {{{0, 0, 10, 10}, "figure"}};
    images[0].predictions = {{{0, 0, 10, 0}, "figure"}};
    EXPECT_EQ(ap(images), 0.0);
}

TEST(AveragePrecision, FromAnnotationSetsUsesPagesAsImages) {
    AnnotationSet gt, pred;
    gt.annotations.push_back(freeform("a", 0, {0, 0, 10, 10}, "figure"));
    pred.annotations.push_back(freeform("b", 1, {0, 0, 10, 10}, "figure"));
    const auto cats = std::vector<std::string>{"figure"};
    const auto thr = default_iou_thresholds();
    EXPECT_EQ(average_precision(gt, pred, cats, thr), 0.0);
    pred.annotations[0].page = 0;
    EXPECT_EQ(average_precision(gt, pred, cats, thr), 1.0);
    EXPECT_EQ(freeform_images(gt, pred, 4).size(), 4u);
}

TEST(AveragePrecisionProperty, MatchesBruteForceReference) {
    Rng rng(99);
    const auto thr = default_iou_thresholds();
    for (int i = 0; i < 2000; ++i) {
        const auto images = random_eval_instance(rng, kCats);
        ASSERT_NEAR(ap(images), reference_ap(images, kCats, thr), 1e-9) << "instance " << i;
    }
}

TEST(AveragePrecisionProperty, RangeAndSelfAgreement) {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto images = random_eval_instance(rng, kCats);
        const double v = ap(images);
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 1.0);
        for (auto& img : images) img.predictions = img.ground_truth;
        ASSERT_EQ(ap(images), 1.0);
    }
}

TEST(AveragePrecisionProperty, RemovingCorrectPredictionNeverHelps) {
    Rng rng(21);
    int removed = 0;
    for (int i = 0; i < 1000; ++i) {
        auto images = random_eval_instance(rng, kCats);
        // A correct prediction: an exact copy of some ground-truth box.
        std::size_t where = images.size();
        for (std::size_t k = 0; k < images.size(); ++k)
            if (!images[k].ground_truth.empty()) where = k;
        if (where == images.size()) continue;
        const EvalBox copy = images[where].ground_truth[0];
        auto& preds = images[where].predictions;
        preds.insert(preds.begin() + uniform_int(rng, 0, static_cast<int>(preds.size())), copy);
        for (double t : default_iou_thresholds()) {
            const std::vector<double> thr{t};
            const double with = ap(images, thr);
            auto without = images;
            auto& p = without[where].predictions;
            const auto it = std::find_if(p.begin(), p.end(), [&](const EvalBox& b) {
                return b.bounds == copy.bounds && b.category == copy.category;
            });
            p.erase(it);
            ASSERT_LE(ap(without, thr), with + 1e-12) << "instance " << i << " t=" << t;
        }
        ++removed;
    }
    EXPECT_GT(removed, 500);
}

TEST(AveragePrecisionProperty, NonIncreasingInThreshold) {
    Rng rng(33);
    for (int i = 0; i < 1000; ++i) {
        const auto images = random_eval_instance(rng, kCats);
        double previous = 1.0;
        for (int k = 0; k <= 20; ++k) {
            const double t = 0.05 * k;
            const double v = ap(images, {t});
            ASSERT_LE(v, previous + 1e-12) << "instance " << i << " t=" << t;
            previous = v;
        }
    }
}

TEST(TokenAccuracyProperty, SelfAgreementAndSymmetry) {
    Rng rng(3);
    const auto schema = fixture_schema();
    for (int i = 0; i < 300; ++i) {
        DocumentLayout doc{random_layout(rng, 0, 30), random_layout(rng, 1, 10)};
        const auto a = random_annotation_set(rng, doc, schema, uniform_int(rng, 0, 8), uniform_int(rng, 0, 4));
        const auto b = random_annotation_set(rng, doc, schema, uniform_int(rng, 0, 8), uniform_int(rng, 0, 4));
        ASSERT_TRUE(validate_annotation_set(a, doc, schema).empty());
        ASSERT_EQ(token_accuracy(a, a, doc), 100.0);
        ASSERT_EQ(token_accuracy(a, b, doc), token_accuracy(b, a, doc));
        const double v = token_accuracy(a, b, doc);
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, 100.0);
    }
}

TEST(AgreementMatrix, DesignedFixture) {
    TempDir dir;
    ProjectStore store(dir.path());
    const auto names = designed_agreement_project(store);
    const auto m = agreement_matrix(store, names);
    ASSERT_EQ(m.reports.size(), 6u);
    EXPECT_EQ(m.at(0, 0), nullptr);
    EXPECT_EQ(*m.at(0, 1)->textual_accuracy, 90.0);
    EXPECT_EQ(*m.at(1, 0)->textual_accuracy, 90.0);
    EXPECT_EQ(*m.at(0, 2)->textual_accuracy, 80.0);
    EXPECT_EQ(*m.at(2, 1)->textual_accuracy, 70.0);
    EXPECT_EQ(*m.at(0, 1)->freeform_ap, 1.0);
    EXPECT_EQ(*m.at(0, 2)->freeform_ap, 0.0);
    EXPECT_EQ(m.at(1, 2)->ground_truth, "bob");
    EXPECT_EQ(m.at(1, 2)->prediction, "carol");
    EXPECT_EQ(m.at(1, 2)->tokens_compared, 10u);
    EXPECT_EQ(m.at(1, 2)->boxes_compared, 2u);
    EXPECT_EQ(m.at(1, 2)->shared_documents.size(), 1u);
}

TEST(AgreementMatrix, IdenticalAnnotators) {
    TempDir dir;
    ProjectStore store(dir.path());
    const auto names = designed_agreement_project(store);
    const std::string hash = store.documents().front();
    store.assign("dave", {hash});
    store.save_annotations("dave", hash, *store.load_saved("alice", hash));
    const auto m = agreement_matrix(store, {"alice", "dave"});
    for (const auto& r : m.reports) {
        EXPECT_EQ(*r.textual_accuracy, 100.0);
        EXPECT_EQ(*r.freeform_ap, 1.0);
    }
}

TEST(AgreementMatrix, NoSharedDocuments) {
    TempDir dir;
    ProjectStore store(dir.path());
    designed_agreement_project(store);
    const std::string other = store.add_document(write_synthetic_pdf({words_page({"lonely page"})}));
    store.assign("erin", {other});
    store.save_annotations("erin", other, {});
    try {
        compare_annotators(store, "alice", "erin");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSharedDocuments);
    }
    const auto m = agreement_matrix(store, {"alice", "erin"});
    EXPECT_FALSE(m.at(0, 1)->textual_accuracy.has_value());
    EXPECT_FALSE(m.at(0, 1)->freeform_ap.has_value());
}

TEST(AgreementMatrix, UnsavedAssignmentsAreNotCompared) {
    TempDir dir;
    ProjectStore store(dir.path());
    designed_agreement_project(store);
    const std::string extra = store.add_document(write_synthetic_pdf({words_page({"only alice"})}));
    store.assign("alice", {extra});
    store.assign("bob", {extra});
    store.save_annotations("alice", extra, {});
    const auto r = compare_annotators(store, "alice", "bob");
    EXPECT_EQ(r.shared_documents.size(), 1u);
    EXPECT_EQ(*r.textual_accuracy, 90.0);
}
