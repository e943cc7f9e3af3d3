// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "docanno/annotation.hpp"
#include "docanno/layout.hpp"
#include "docanno/metrics.hpp"
#include "docanno/store.hpp"
#include "docanno/synthetic_pdf.hpp"

namespace docanno::testing {

class TempDir {
public:
    TempDir() {
        std::string pattern = (std::filesystem::temp_directory_path() / "docanno-test-XXXXXX").string();
        if (!::mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
        path_ = pattern;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& contents) {
    std::ofstream out(p, std::ios::binary);
    out << contents;
}

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Tokens with positive area, fully inside the page.
inline PageTokenLayout random_layout(Rng& rng, int page_index, int count, double width = 612.0,
                                     double height = 792.0) {
    PageTokenLayout layout;
    layout.page = {page_index, width, height};
    for (int i = 0; i < count; ++i) {
        const double w = uniform(rng, 0.5, 80.0);
        const double h = uniform(rng, 0.5, 20.0);
        const double x = uniform(rng, 0.0, width - w);
        const double y = uniform(rng, 0.0, height - h);
        layout.tokens.push_back({"t" + std::to_string(i), x, y, w, h});
    }
    return layout;
}

/// A single page holding the tokens (10,10,20,20) and (30,12,50,18).
inline PageTokenLayout fixture_page() {
    PageTokenLayout layout;
    layout.page = {0, 612.0, 792.0};
    layout.tokens.push_back(Token::from_bounds("Deep", {10, 10, 20, 20}));
    layout.tokens.push_back(Token::from_bounds("Learning", {30, 12, 50, 18}));
    return layout;
}

inline LabelSchema fixture_schema() {
    LabelSchema s;
    s.labels = {{"title", "#ff0000", false},  {"author", "#00ff00", false}, {"paragraph", "#0000ff", false},
                {"figure", "#ffaa00", true},  {"table", "#aa00ff", true}};
    s.relations = {"caption-of", "same-entity"};
    return s;
}

/// Textual annotation over `refs`, with canonical bounds.
inline Annotation textual(const DocumentLayout& layouts, std::string id, std::string label,
                          std::vector<TokenRef> refs, double padding = kDefaultPadding) {
    Annotation a;
    a.id = std::move(id);
    a.page = refs.front().page;
    a.label = std::move(label);
    a.bounds = snap_bounds(layouts, refs, padding);
    a.tokens = std::move(refs);
    return a;
}

inline Annotation freeform(std::string id, int page, Bounds b, std::string label) {
    return Annotation{std::move(id), page, b, std::move(label), std::nullopt};
}

/// A page of words laid out in lines, for synthetic PDFs.
inline SyntheticPage words_page(const std::vector<std::string>& lines, double size = 11.0) {
    SyntheticPage p;
    double y = 740.0;
    for (const auto& line : lines) {
        SyntheticTextRun r;
        r.size = size;
        r.x = 72.0;
        r.y = y;
        r.text = line;
        p.runs.push_back(r);
        y -= size * 1.6;
    }
    return p;
}

/// Random valid set over `layouts`: textual annotations over runs of tokens and
/// freeform boxes, labels drawn from `schema`.
inline AnnotationSet random_annotation_set(Rng& rng, const DocumentLayout& layouts, const LabelSchema& schema,
                                           int textual_count, int freeform_count) {
    std::vector<std::string> text_labels, box_labels;
    for (const auto& l : schema.labels) (l.freeform ? box_labels : text_labels).push_back(l.name);
    AnnotationSet set;
    int next = 0;
    for (int i = 0; i < textual_count; ++i) {
        const int page = uniform_int(rng, 0, static_cast<int>(layouts.size()) - 1);
        const int n = static_cast<int>(layouts[page].tokens.size());
        if (n == 0) continue;
        const int first = uniform_int(rng, 0, n - 1);
        const int last = std::min(n - 1, first + uniform_int(rng, 0, 4));
        std::vector<TokenRef> refs;
        for (int t = first; t <= last; ++t) refs.push_back({page, t});
        set.annotations.push_back(textual(layouts, "a" + std::to_string(next++),
                                          text_labels[uniform_int(rng, 0, static_cast<int>(text_labels.size()) - 1)],
                                          refs, schema.padding));
    }
    for (int i = 0; i < freeform_count; ++i) {
        const int page = uniform_int(rng, 0, static_cast<int>(layouts.size()) - 1);
        const PageInfo& info = layouts[page].page;
        const double w = uniform(rng, 5, 200), h = uniform(rng, 5, 200);
        const double x = uniform(rng, 0, info.width - w), y = uniform(rng, 0, info.height - h);
        set.annotations.push_back(
            freeform("a" + std::to_string(next++), page, Bounds::from_xywh(x, y, w, h),
                     box_labels[uniform_int(rng, 0, static_cast<int>(box_labels.size()) - 1)]));
    }
    return set;
}

/// Small detection instance: up to five boxes per side on a coarse grid, so
/// that overlaps and ties are common.
inline std::vector<EvalImage> random_eval_instance(Rng& rng, const std::vector<std::string>& categories) {
    auto box = [&] {
        const double x = uniform_int(rng, 0, 8), y = uniform_int(rng, 0, 8);
        return Bounds::from_xywh(x, y, uniform_int(rng, 1, 6), uniform_int(rng, 1, 6));
    };
    auto cat = [&] { return categories[uniform_int(rng, 0, static_cast<int>(categories.size()) - 1)]; };
    std::vector<EvalImage> images(static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    int gt_left = uniform_int(rng, 0, 5), pred_left = uniform_int(rng, 0, 5);
    for (int i = 0; i < gt_left; ++i) images[uniform_int(rng, 0, static_cast<int>(images.size()) - 1)].ground_truth.push_back({box(), cat()});
    for (int i = 0; i < pred_left; ++i) images[uniform_int(rng, 0, static_cast<int>(images.size()) - 1)].predictions.push_back({box(), cat()});
    return images;
}

/// Ten-word document labeled by three annotators so that token agreement is
/// 90 (a, b), 80 (a, c) and 70 (b, c). Each also draws one "figure" box; b's
/// matches a's exactly and c's is shifted.
inline std::vector<std::string> designed_agreement_project(ProjectStore& store) {
    store.set_schema(fixture_schema());
    const std::string pdf = write_synthetic_pdf({words_page({"one two three four five six seven eight nine ten"})});
    const std::string hash = store.add_document(pdf);
    const auto layout = store.layout(hash);
    const std::vector<std::string> names{"alice", "bob", "carol"};
    const std::vector<std::set<int>> author_tokens{{}, {0}, {1, 2}};
    const std::vector<Bounds> figures{{100, 100, 300, 300}, {100, 100, 300, 300}, {150, 150, 350, 350}};
    for (std::size_t k = 0; k < names.size(); ++k) {
        store.assign(names[k], {hash});
        AnnotationSet set;
        for (int t = 0; t < 10; ++t)
            set.annotations.push_back(textual(*layout, "t" + std::to_string(t),
                                              author_tokens[k].count(t) ? "author" : "title", {{0, t}}));
        set.annotations.push_back(freeform("fig", 0, figures[k], "figure"));
        store.save_annotations(names[k], hash, set);
    }
    return names;
}

/// Registers `documents` synthetic PDFs (one or two pages of words), assigns
/// them all to every annotator and saves a random valid set for each pair.
inline void populate_random_project(ProjectStore& store, Rng& rng, int documents,
                                    const std::vector<std::string>& annotators) {
    static const std::vector<std::string> words{"layout", "token", "figure", "table", "caption", "model",
                                                "paper",  "annotation", "box", "page", "label", "data"};
    store.set_schema(fixture_schema());
    std::vector<std::string> hashes;
    for (int d = 0; d < documents; ++d) {
        std::vector<SyntheticPage> pages;
        for (int p = uniform_int(rng, 1, 2); p > 0; --p) {
            std::vector<std::string> lines;
            for (int l = uniform_int(rng, 1, 4); l > 0; --l) {
                std::string line = "doc" + std::to_string(d);
                for (int w = uniform_int(rng, 1, 6); w > 0; --w)
                    line += " " + words[uniform_int(rng, 0, static_cast<int>(words.size()) - 1)];
                lines.push_back(line);
            }
            pages.push_back(words_page(lines));
        }
        hashes.push_back(store.add_document(write_synthetic_pdf(pages)));
    }
    for (const auto& a : annotators) {
        store.assign(a, hashes);
        for (const auto& h : hashes)
            store.save_annotations(a, h, random_annotation_set(rng, *store.layout(h), store.schema(),
                                                               uniform_int(rng, 0, 5), uniform_int(rng, 0, 3)));
    }
}

}  // namespace docanno::testing
