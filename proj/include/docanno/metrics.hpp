// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "docanno/annotation.hpp"
#include "docanno/geometry.hpp"
#include "docanno/layout.hpp"

namespace docanno {

class ProjectStore;

struct TokenLabel {
    std::string label;
    std::string annotation_id;

    friend bool operator==(const TokenLabel&, const TokenLabel&) = default;
};

using TokenLabelMap = std::map<TokenRef, TokenLabel>;

/// Label of every token covered by a textual annotation. A token inside several
/// annotations takes the label of the smallest-area one; ties go to the
/// lexicographically smallest id. Throws Error(LayoutMismatch) for refs that do
/// not resolve in `layouts`.
TokenLabelMap token_label_map(const AnnotationSet& set, const DocumentLayout& layouts);

struct TokenAgreement {
    std::size_t agreed = 0;
    std::size_t compared = 0;  // tokens labeled by at least one side

    /// 100 * agreed / compared, or 100 when nothing was labeled.
    double percent() const;
};

TokenAgreement token_agreement(const TokenLabelMap& a, const TokenLabelMap& b);

/// Percentage of tokens, among those labeled by either annotator, that both
/// label identically.
double token_accuracy(const AnnotationSet& a, const AnnotationSet& b, const DocumentLayout& layouts);

struct EvalBox {
    Bounds bounds;
    std::string category;
};

/// One COCO "image": the boxes of a single page from both sides.
struct EvalImage {
    std::vector<EvalBox> ground_truth;
    std::vector<EvalBox> predictions;  // in file order; all carry confidence 1.0
};

/// 0.50, 0.55, ..., 0.95.
std::vector<double> default_iou_thresholds();

/// COCO-style average precision with greedy matching and 101-point interpolation,
/// averaged over the categories present in the ground truth and then over the
/// thresholds. With no ground-truth boxes at all the result is 1 if there are no
/// predictions either and 0 otherwise. Throws Error(UnknownCategory).
double average_precision(std::span<const EvalImage> images, std::span<const std::string> categories,
                         std::span<const double> iou_thresholds);

/// Treats each page as an image. Both sets are expected to hold freeform boxes only.
double average_precision(const AnnotationSet& ground_truth, const AnnotationSet& prediction,
                         std::span<const std::string> categories, std::span<const double> iou_thresholds);

/// Areas per page; images for pages without boxes on either side are included.
std::vector<EvalImage> freeform_images(const AnnotationSet& ground_truth, const AnnotationSet& prediction,
                                       int page_count);

struct AgreementReport {
    std::string ground_truth;
    std::string prediction;
    std::optional<double> textual_accuracy;  // percent; absent without shared documents
    std::optional<double> freeform_ap;       // in [0, 1]
    std::size_t tokens_compared = 0;
    std::size_t boxes_compared = 0;          // ground-truth plus predicted freeform boxes
    std::vector<std::string> shared_documents;
};

struct AgreementMatrix {
    std::vector<std::string> annotators;
    std::vector<AgreementReport> reports;  // every ordered pair (i, j), i != j, row-major

    /// Report for ground truth `i` and prediction `j`; null on the diagonal.
    const AgreementReport* at(std::size_t i, std::size_t j) const;
};

/// Compares two annotators over the documents both have saved annotation files
/// for. Throws Error(NoSharedDocuments) when there are none.
AgreementReport compare_annotators(const ProjectStore& store, const std::string& ground_truth,
                                   const std::string& prediction);

/// Pairs without shared documents get a report with empty values.
AgreementMatrix agreement_matrix(const ProjectStore& store, const std::vector<std::string>& annotators);

}  // namespace docanno
