// SPDX-License-Identifier: Apache-2.0
#include "docanno/exporters.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"
#include "docanno/metrics.hpp"
#include "docanno/store.hpp"
#include "process.hpp"

namespace docanno {

using nlohmann::json;

namespace {

void check_annotators(const ProjectStore& store, const std::vector<std::string>& annotators) {
    const auto known = store.annotators();
    for (const auto& a : annotators) {
        if (a == kPredictionsAnnotator && !store.saved_documents(a).empty()) continue;
        if (std::find(known.begin(), known.end(), a) == known.end())
            throw Error(ErrorCode::UnknownAnnotator, "unknown annotator: " + a);
    }
}

std::set<std::string> documents_of(const ProjectStore& store, const std::string& annotator) {
    if (annotator == kPredictionsAnnotator) {
        const auto docs = store.saved_documents(annotator);
        return {docs.begin(), docs.end()};
    }
    return store.assignments(annotator);
}

std::string image_file_name(const std::string& hash, int page) {
    return hash + "_" + std::to_string(page) + ".jpg";
}

std::string format_number(double v) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << v;
    return ss.str();
}

}  // namespace

CocoExport export_coco(const ProjectStore& store, const CocoOptions& options) {
    if (!(options.scale > 0.0) || !std::isfinite(options.scale))
        throw Error(ErrorCode::InvalidDimensions, "scale must be a positive number");
    check_annotators(store, options.annotators);

    const LabelSchema schema = store.schema();
    std::map<std::string, int> category_ids;
    CocoExport out;
    for (const auto& name : options.categories)
        if (!schema.find_label(name)) throw Error(ErrorCode::UnknownCategory, "unknown category: " + name);
    for (const Label& l : schema.labels) {
        const bool wanted = options.categories.empty() ||
                            std::find(options.categories.begin(), options.categories.end(), l.name) !=
                                options.categories.end();
        if (!wanted) continue;
        const int id = static_cast<int>(out.dataset.categories.size()) + 1;
        out.dataset.categories.push_back({id, l.name});
        category_ids.emplace(l.name, id);
    }

    std::set<std::string> docs;
    for (const auto& a : options.annotators) {
        const auto mine = documents_of(store, a);
        docs.insert(mine.begin(), mine.end());
    }

    std::size_t skipped = 0;
    for (const std::string& hash : docs) {
        const auto layout = store.layout(hash);
        std::vector<std::pair<std::string, AnnotationSet>> sets;
        for (const auto& a : options.annotators)
            if (auto saved = store.load_saved(a, hash)) sets.emplace_back(a, std::move(*saved));
        for (int page = 0; page < static_cast<int>(layout->size()); ++page) {
            int image_id = 0;
            for (const auto& [annotator, set] : sets) {
                for (const Annotation& a : set.annotations) {
                    if (a.page != page) continue;
                    auto cat = category_ids.find(a.label);
                    if (cat == category_ids.end()) {
                        if (!schema.find_label(a.label)) ++skipped;
                        continue;
                    }
                    if (image_id == 0) {
                        const PageInfo& info = (*layout)[page].page;
                        image_id = static_cast<int>(out.dataset.images.size()) + 1;
                        const std::string file = image_file_name(hash, page);
                        out.dataset.images.push_back({image_id, file,
                                                      static_cast<int>(std::lround(info.width * options.scale)),
                                                      static_cast<int>(std::lround(info.height * options.scale))});
                        out.manifest.push_back({file, hash, page, options.scale});
                    }
                    CocoAnnotation ca;
                    ca.id = static_cast<int>(out.dataset.annotations.size()) + 1;
                    ca.image_id = image_id;
                    ca.category_id = cat->second;
                    const double x = a.bounds.left * options.scale;
                    const double y = a.bounds.top * options.scale;
                    ca.bbox = {x, y, a.bounds.right * options.scale - x, a.bounds.bottom * options.scale - y};
                    ca.area = ca.bbox[2] * ca.bbox[3];
                    out.dataset.annotations.push_back(ca);
                }
            }
        }
    }
    if (skipped > 0)
        out.warnings.push_back(std::to_string(skipped) + " annotation(s) with labels missing from the schema were skipped");
    if (out.dataset.annotations.empty()) out.warnings.push_back("export contains no annotations");
    return out;
}

nlohmann::json coco_to_json(const CocoDataset& d) {
    json images = json::array(), annotations = json::array(), categories = json::array();
    for (const auto& i : d.images)
        images.push_back({{"id", i.id}, {"file_name", i.file_name}, {"width", i.width}, {"height", i.height}});
    for (const auto& a : d.annotations)
        annotations.push_back({{"id", a.id},
                               {"image_id", a.image_id},
                               {"category_id", a.category_id},
                               {"bbox", a.bbox},
                               {"area", a.area},
                               {"iscrowd", a.iscrowd}});
    for (const auto& c : d.categories) categories.push_back({{"id", c.id}, {"name", c.name}});
    return {{"images", images}, {"annotations", annotations}, {"categories", categories}};
}

nlohmann::json manifest_to_json(const std::vector<RasterEntry>& manifest) {
    json out = json::array();
    for (const auto& e : manifest)
        out.push_back({{"file_name", e.file_name}, {"document", e.document}, {"page", e.page}, {"scale", e.scale}});
    return out;
}

void rasterize(const ProjectStore& store, const std::vector<RasterEntry>& manifest,
               const std::string& command_template, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& e : manifest) {
        std::string command = command_template;
        replace_all(command, "{pdf}", shell_quote(store.pdf_path(e.document).string()));
        replace_all(command, "{page1}", std::to_string(e.page + 1));
        replace_all(command, "{page}", std::to_string(e.page));
        replace_all(command, "{scale}", format_number(e.scale));
        replace_all(command, "{dpi}", format_number(e.scale * 72.0));
        replace_all(command, "{output}", shell_quote((out_dir / e.file_name).string()));
        const ShellResult run = run_shell(command);
        if (!run.ok)
            throw Error(ErrorCode::ProcessorFailed, "rasterizer " + run.description + " for " + e.file_name +
                                                        (run.diagnostics.empty() ? "" : ": " + run.diagnostics));
    }
}

std::vector<TokenLabelRow> export_token_table(const ProjectStore& store, const std::vector<std::string>& annotators) {
    check_annotators(store, annotators);
    std::vector<std::string> ordered(annotators.begin(), annotators.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::map<std::string, std::vector<std::string>> readers;
    for (const auto& a : ordered)
        for (const auto& h : documents_of(store, a)) readers[h].push_back(a);

    std::vector<TokenLabelRow> rows;
    for (const auto& [hash, who] : readers) {
        const auto layout = store.layout(hash);
        std::vector<TokenLabelMap> maps;
        for (const auto& a : who) maps.push_back(token_label_map(store.load_saved(a, hash).value_or(AnnotationSet{}), *layout));
        for (const PageTokenLayout& page : *layout) {
            for (int t = 0; t < static_cast<int>(page.tokens.size()); ++t) {
                for (std::size_t k = 0; k < who.size(); ++k) {
                    TokenLabelRow row{hash, page.page.index, t, page.tokens[t].text, kOutsideLabel, "", who[k]};
                    if (auto it = maps[k].find({page.page.index, t}); it != maps[k].end()) {
                        row.label = it->second.label;
                        row.annotation_id = it->second.annotation_id;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

namespace {

std::string field(const std::string& s, char delimiter) {
    if (s.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_token_table(std::ostream& out, const std::vector<TokenLabelRow>& rows, char delimiter) {
    const char d = delimiter;
    out << "document" << d << "page" << d << "token" << d << "text" << d << "label" << d << "annotation_id" << d
        << "annotator\n";
    for (const auto& r : rows) {
        out << r.document << d << r.page << d << r.token << d << field(r.text, d) << d << field(r.label, d) << d
            << field(r.annotation_id, d) << d << field(r.annotator, d) << '\n';
    }
}

}  // namespace docanno
