// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace docanno {

class ProjectStore;

struct CocoImage {
    int id = 0;
    std::string file_name;  // "<hash>_<page>.jpg"
    int width = 0;
    int height = 0;
};

struct CocoAnnotation {
    int id = 0;
    int image_id = 0;
    int category_id = 0;
    std::array<double, 4> bbox{};  // x, y, w, h in pixels
    double area = 0.0;
    int iscrowd = 0;
};

struct CocoCategory {
    int id = 0;
    std::string name;
};

struct CocoDataset {
    std::vector<CocoImage> images;
    std::vector<CocoAnnotation> annotations;
    std::vector<CocoCategory> categories;
};

/// One page capture an external rasterizer is expected to produce.
struct RasterEntry {
    std::string file_name;
    std::string document;
    int page = 0;
    double scale = 1.0;
};

struct CocoOptions {
    std::vector<std::string> annotators;
    /// Labels to export; all schema labels when empty.
    std::vector<std::string> categories;
    double scale = 1.0;  // pixels per point
};

struct CocoExport {
    CocoDataset dataset;
    std::vector<RasterEntry> manifest;
    std::vector<std::string> warnings;
};

/// Builds the dataset from the annotators' saved files. Throws Error(UnknownAnnotator),
/// Error(UnknownCategory) for filter names missing from the schema, or
/// Error(InvalidDimensions) for a non-positive scale.
CocoExport export_coco(const ProjectStore& store, const CocoOptions& options);

nlohmann::json coco_to_json(const CocoDataset& dataset);
nlohmann::json manifest_to_json(const std::vector<RasterEntry>& manifest);

/// Runs `command_template` once per manifest entry. Placeholders: `{pdf}`, `{page}`
/// (zero-based), `{page1}` (one-based), `{scale}`, `{dpi}` and `{output}`.
/// Throws Error(ProcessorFailed) on the first failing invocation.
void rasterize(const ProjectStore& store, const std::vector<RasterEntry>& manifest,
               const std::string& command_template, const std::filesystem::path& out_dir);

inline constexpr const char* kOutsideLabel = "O";

struct TokenLabelRow {
    std::string document;
    int page = 0;
    int token = 0;
    std::string text;
    std::string label;  // kOutsideLabel when unlabeled
    std::string annotation_id;
    std::string annotator;

    friend bool operator==(const TokenLabelRow&, const TokenLabelRow&) = default;
};

/// One row per token of every document assigned to each annotator, ordered by
/// (document, page, token, annotator). Throws Error(UnknownAnnotator).
std::vector<TokenLabelRow> export_token_table(const ProjectStore& store, const std::vector<std::string>& annotators);

/// Delimiter-separated output with a header row; fields are quoted when needed.
void write_token_table(std::ostream& out, const std::vector<TokenLabelRow>& rows, char delimiter = ',');

}  // namespace docanno
