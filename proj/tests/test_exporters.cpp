// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"
#include "docanno/exporters.hpp"
#include "docanno/metrics.hpp"
#include "docanno/store.hpp"
#include "support/coco_check.hpp"
#include "support/support.hpp"

using namespace docanno;
using namespace docanno::testing;
namespace fs = std::filesystem;

namespace {

struct BoxProject {
    TempDir dir;
    ProjectStore store{dir.path()};
    std::string hash;

    explicit BoxProject(LabelSchema schema = fixture_schema(), const std::string& label = "figure") {
        store.set_schema(schema);
        hash = store.add_document(write_synthetic_pdf({words_page({"a small page"})}));
        store.assign("ann", {hash});
        AnnotationSet s;
        s.annotations.push_back(freeform("box", 0, {7, 7, 53, 23}, label));
        store.save_annotations("ann", hash, s);
    }
};

std::string dump(const CocoExport& e) { return coco_to_json(e.dataset).dump(2); }

}  // namespace

TEST(CocoExport, BoundsFixture) {
    BoxProject p;
    const auto e = export_coco(p.store, {{"ann"}, {}, 1.0});
    ASSERT_EQ(e.dataset.images.size(), 1u);
    EXPECT_EQ(e.dataset.images[0].width, 612);
    EXPECT_EQ(e.dataset.images[0].height, 792);
    EXPECT_EQ(e.dataset.images[0].file_name, p.hash + "_0.jpg");
    ASSERT_EQ(e.dataset.annotations.size(), 1u);
    const auto& a = e.dataset.annotations[0];
    EXPECT_EQ(a.bbox, (std::array<double, 4>{7, 7, 46, 16}));
    EXPECT_EQ(a.area, 736.0);
    EXPECT_EQ(a.iscrowd, 0);
    EXPECT_EQ(e.dataset.categories[a.category_id - 1].name, "figure");
    EXPECT_TRUE(coco_problems(coco_to_json(e.dataset)).empty());
    ASSERT_EQ(e.manifest.size(), 1u);
    EXPECT_EQ(e.manifest[0].document, p.hash);
    EXPECT_EQ(e.manifest[0].page, 0);
}

TEST(CocoExport, ScaleTwo) {
    BoxProject p;
    const auto e = export_coco(p.store, {{"ann"}, {}, 2.0});
    EXPECT_EQ(e.dataset.images[0].width, 1224);
    EXPECT_EQ(e.dataset.images[0].height, 1584);
    EXPECT_EQ(e.dataset.annotations[0].bbox, (std::array<double, 4>{14, 14, 92, 32}));
    EXPECT_EQ(e.manifest[0].scale, 2.0);
}

TEST(CocoExport, BadScale) {
    BoxProject p;
    for (double s : {0.0, -1.0, std::nan("")}) {
        try {
            export_coco(p.store, {{"ann"}, {}, s});
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidDimensions);
        }
    }
}

TEST(CocoExport, CategoryFilter) {
    LabelSchema schema;
    for (int i = 0; i < 20; ++i) schema.labels.push_back({"label" + std::to_string(i), "#123456", true});
    BoxProject p(schema, "label0");
    AnnotationSet s;
    s.annotations.push_back(freeform("a", 0, {10, 10, 20, 20}, "label3"));
    s.annotations.push_back(freeform("b", 0, {30, 30, 40, 40}, "label17"));
    s.annotations.push_back(freeform("c", 0, {50, 50, 60, 60}, "label9"));
    p.store.save_annotations("ann", p.hash, s);
    const auto e = export_coco(p.store, {{"ann"}, {"label17", "label3"}, 1.0});
    ASSERT_EQ(e.dataset.categories.size(), 2u);
    EXPECT_EQ(e.dataset.categories[0].id, 1);
    EXPECT_EQ(e.dataset.categories[0].name, "label3");
    EXPECT_EQ(e.dataset.categories[1].id, 2);
    EXPECT_EQ(e.dataset.categories[1].name, "label17");
    EXPECT_EQ(e.dataset.annotations.size(), 2u);
    EXPECT_TRUE(coco_problems(coco_to_json(e.dataset)).empty());
    EXPECT_THROW(export_coco(p.store, {{"ann"}, {"label99"}, 1.0}), Error);
}

TEST(CocoExport, UnknownAnnotator) {
    BoxProject p;
    try {
        export_coco(p.store, {{"nobody"}, {}, 1.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownAnnotator);
    }
}

TEST(CocoExport, EmptyExportWarns) {
    BoxProject p;
    p.store.assign("idle", {p.hash});
    const auto e = export_coco(p.store, {{"idle"}, {}, 1.0});
    EXPECT_TRUE(e.dataset.images.empty());
    EXPECT_TRUE(e.dataset.annotations.empty());
    EXPECT_EQ(e.dataset.categories.size(), fixture_schema().labels.size());
    ASSERT_EQ(e.warnings.size(), 1u);
    EXPECT_NE(e.warnings[0].find("no annotations"), std::string::npos);
}

TEST(CocoExport, TextualAnnotationsExportToo) {
    BoxProject p;
    const auto layout = p.store.layout(p.hash);
    AnnotationSet s;
    s.annotations.push_back(textual(*layout, "t", "title", {{0, 0}, {0, 1}}));
    p.store.save_annotations("ann", p.hash, s);
    const auto e = export_coco(p.store, {{"ann"}, {}, 1.0});
    ASSERT_EQ(e.dataset.annotations.size(), 1u);
    const Bounds b = p.store.load_saved("ann", p.hash)->annotations[0].bounds;
    EXPECT_EQ(e.dataset.annotations[0].bbox[0], b.left);
}

TEST(CocoExport, RandomProjectsAreValidAndDeterministic) {
    for (int seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        TempDir dir;
        ProjectStore store(dir.path());
        populate_random_project(store, rng, 4, {"ann", "bob"});
        for (double scale : {1.0, 1.5, 150.0 / 72.0}) {
            const CocoOptions opts{{"ann", "bob"}, {}, scale};
            const auto first = export_coco(store, opts);
            EXPECT_EQ(coco_problems(coco_to_json(first.dataset)), std::vector<std::string>{});
            EXPECT_EQ(dump(first), dump(export_coco(store, opts)));
            EXPECT_EQ(manifest_to_json(first.manifest), manifest_to_json(export_coco(store, opts).manifest));
            ProjectStore reopened(dir.path());
            EXPECT_EQ(dump(first), dump(export_coco(reopened, opts)));
        }
    }
}

TEST(CocoExport, BboxRoundTrip) {
    Rng rng(17);
    TempDir dir;
    ProjectStore store(dir.path());
    populate_random_project(store, rng, 5, {"ann"});
    std::vector<Bounds> stored;
    for (const auto& h : store.documents())
        for (const auto& page : *store.layout(h))
            for (const auto& a : store.load_saved("ann", h)->annotations)
                if (a.page == page.page.index) stored.push_back(a.bounds);
    for (double scale : {1.0, 0.37, 3.0, 300.0 / 72.0}) {
        const auto e = export_coco(store, {{"ann"}, {}, scale});
        ASSERT_EQ(e.dataset.annotations.size(), stored.size());
        for (std::size_t i = 0; i < stored.size(); ++i) {
            const auto& bb = e.dataset.annotations[i].bbox;
            const Bounds back{bb[0] / scale, bb[1] / scale, (bb[0] + bb[2]) / scale, (bb[1] + bb[3]) / scale};
            EXPECT_NEAR(back.left, stored[i].left, 1e-6);
            EXPECT_NEAR(back.top, stored[i].top, 1e-6);
            EXPECT_NEAR(back.right, stored[i].right, 1e-6);
            EXPECT_NEAR(back.bottom, stored[i].bottom, 1e-6);
        }
    }
}

TEST(Rasterize, RunsTemplatePerEntry) {
    BoxProject p;
    const auto e = export_coco(p.store, {{"ann"}, {}, 2.0});
    TempDir out;
    rasterize(p.store, e.manifest, "printf '%s %s %s' {page} {page1} {dpi} > {output}", out.path());
    EXPECT_EQ(slurp(out / (p.hash + "_0.jpg")), "0 1 144");
    try {
        rasterize(p.store, e.manifest, "exit 3", out.path());
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::ProcessorFailed);
    }
}

TEST(TokenTable, OutsideRows) {
    TempDir dir;
    ProjectStore store(dir.path());
    store.set_schema(fixture_schema());
    const auto hash = store.add_document(
        write_synthetic_pdf({words_page({"w0 w1 w2 w3 w4 w5 w6 w7 w8 w9"})}));
    ASSERT_EQ(store.layout(hash)->at(0).tokens.size(), 10u);
    store.assign("ann", {hash});
    AnnotationSet s;
    s.annotations.push_back(textual(*store.layout(hash), "t", "title", {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    store.save_annotations("ann", hash, s);
    const auto rows = export_token_table(store, {"ann"});
    ASSERT_EQ(rows.size(), 10u);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(rows[i].token, i);
        EXPECT_EQ(rows[i].text, "w" + std::to_string(i));
        EXPECT_EQ(rows[i].label, i < 5 ? "title" : kOutsideLabel);
        EXPECT_EQ(rows[i].annotation_id, i < 5 ? "t" : "");
        EXPECT_EQ(rows[i].annotator, "ann");
    }
}

TEST(TokenTable, ZeroAnnotators) {
    BoxProject p;
    EXPECT_TRUE(export_token_table(p.store, {}).empty());
    EXPECT_THROW(export_token_table(p.store, {"ghost"}), Error);
}

TEST(TokenTable, SmallerAnnotationWinsAsInMetrics) {
    Rng rng(8);
    TempDir dir;
    ProjectStore store(dir.path());
    populate_random_project(store, rng, 3, {"ann", "bob"});
    for (const auto& h : store.documents()) {
        const auto layout = store.layout(h);
        AnnotationSet s;
        s.annotations.push_back(textual(*layout, "wide", "paragraph", {{0, 0}, {0, 1}}));
        s.annotations.push_back(textual(*layout, "narrow", "title", {{0, 1}}));
        store.save_annotations("bob", h, s);
    }
    const auto rows = export_token_table(store, {"bob", "ann"});
    std::map<std::string, std::map<std::string, TokenLabelMap>> expected;
    for (const auto& h : store.documents())
        for (const std::string a : {"ann", "bob"})
            expected[a][h] = token_label_map(*store.load_saved(a, h), *store.layout(h));
    std::size_t tokens = 0;
    for (const auto& h : store.documents())
        for (const auto& page : *store.layout(h)) tokens += page.tokens.size();
    ASSERT_EQ(rows.size(), 2 * tokens);
    std::set<std::tuple<std::string, int, int, std::string>> keys;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        EXPECT_TRUE(keys.insert({r.document, r.page, r.token, r.annotator}).second);
        if (i > 0) {
            const auto& q = rows[i - 1];
            EXPECT_LT(std::tie(q.document, q.page, q.token, q.annotator),
                      std::tie(r.document, r.page, r.token, r.annotator));
        }
        const auto& m = expected[r.annotator][r.document];
        const auto it = m.find({r.page, r.token});
        EXPECT_EQ(r.label, it == m.end() ? kOutsideLabel : it->second.label);
        if (r.annotator == "bob" && r.page == 0 && r.token == 1) {
            EXPECT_EQ(r.annotation_id, "narrow");
        }
    }
}

TEST(TokenTable, DelimitedOutput) {
    std::vector<TokenLabelRow> rows{{"h", 0, 0, "plain", "title", "x", "ann"},
                                    {"h", 0, 1, "a,b", "O", "", "ann"},
                                    {"h", 0, 2, "say\"hi\"", "O", "", "ann"}};
    std::ostringstream csv;
    write_token_table(csv, rows);
    EXPECT_EQ(csv.str(),
              "document,page,token,text,label,annotation_id,annotator\n"
              "h,0,0,plain,title,x,ann\n"
              "h,0,1,\"a,b\",O,,ann\n"
              "h,0,2,\"say\"\"hi\"\"\",O,,ann\n");
    std::ostringstream tsv;
    write_token_table(tsv, {rows[1]}, '\t');
    EXPECT_EQ(tsv.str(), "document\tpage\ttoken\ttext\tlabel\tannotation_id\tannotator\nh\t0\t1\ta,b\tO\t\tann\n");
}
