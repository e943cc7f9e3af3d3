// SPDX-License-Identifier: Apache-2.0
#include "docanno/metrics.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "docanno/error.hpp"
#include "docanno/store.hpp"

namespace docanno {

TokenLabelMap token_label_map(const AnnotationSet& set, const DocumentLayout& layouts) {
    struct Owner {
        double area;
        const Annotation* annotation;
    };
    std::map<TokenRef, Owner> owners;
    for (const Annotation& a : set.annotations) {
        if (!a.tokens) continue;
        const double area = a.bounds.area();
        for (const TokenRef& ref : *a.tokens) {
            if (ref.page < 0 || ref.page >= static_cast<int>(layouts.size()) || ref.token < 0 ||
                ref.token >= static_cast<int>(layouts[ref.page].tokens.size())) {
                throw Error(ErrorCode::LayoutMismatch, "annotation " + a.id + " references token (" +
                                                           std::to_string(ref.page) + ", " +
                                                           std::to_string(ref.token) + ") absent from the layout");
            }
            auto [it, inserted] = owners.try_emplace(ref, Owner{area, &a});
            if (inserted) continue;
            Owner& cur = it->second;
            if (area < cur.area || (area == cur.area && a.id < cur.annotation->id)) cur = Owner{area, &a};
        }
    }
    TokenLabelMap out;
    for (const auto& [ref, owner] : owners) out.emplace_hint(out.end(), ref, TokenLabel{owner.annotation->label, owner.annotation->id});
    return out;
}

double TokenAgreement::percent() const {
    if (compared == 0) return 100.0;
    return 100.0 * static_cast<double>(agreed) / static_cast<double>(compared);
}

TokenAgreement token_agreement(const TokenLabelMap& a, const TokenLabelMap& b) {
    TokenAgreement result;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        ++result.compared;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            ++ib;
        } else {
            if (ia->second.label == ib->second.label) ++result.agreed;
            ++ia;
            ++ib;
        }
    }
    return result;
}

double token_accuracy(const AnnotationSet& a, const AnnotationSet& b, const DocumentLayout& layouts) {
    return token_agreement(token_label_map(a, layouts), token_label_map(b, layouts)).percent();
}

std::vector<double> default_iou_thresholds() {
    return {0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
}

namespace {

constexpr int kRecallPoints = 101;

// Interpolated precision averaged over the recall grid for one category at one threshold.
double category_ap(std::span<const EvalImage> images, const std::string& category, double threshold,
                   std::size_t gt_count) {
    std::vector<bool> is_tp;
    std::vector<int> candidates;
    std::vector<bool> matched;
    for (const EvalImage& image : images) {
        candidates.clear();
        for (std::size_t g = 0; g < image.ground_truth.size(); ++g)
            if (image.ground_truth[g].category == category) candidates.push_back(static_cast<int>(g));
        matched.assign(candidates.size(), false);
        for (const EvalBox& p : image.predictions) {
            if (p.category != category) continue;
            int best = -1;
            double best_iou = threshold;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (matched[c]) continue;
                const double v = iou(p.bounds, image.ground_truth[candidates[c]].bounds);
                if (v >= best_iou && (best < 0 || v > best_iou)) {
                    best = static_cast<int>(c);
                    best_iou = v;
                }
            }
            if (best >= 0) matched[best] = true;
            is_tp.push_back(best >= 0);
        }
    }

    const std::size_t n = is_tp.size();
    std::vector<double> precision(n), recall(n);
    std::size_t tp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_tp[i]) ++tp;
        precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
        recall[i] = static_cast<double>(tp) / static_cast<double>(gt_count);
    }
    for (std::size_t i = n; i-- > 1;) precision[i - 1] = std::max(precision[i - 1], precision[i]);

    double sum = 0.0;
    std::size_t k = 0;
    for (int r = 0; r < kRecallPoints; ++r) {
        const double level = static_cast<double>(r) / (kRecallPoints - 1);
        while (k < n && recall[k] < level) ++k;
        if (k < n) sum += precision[k];
    }
    return sum / kRecallPoints;
}

}  // namespace

double average_precision(std::span<const EvalImage> images, std::span<const std::string> categories,
                         std::span<const double> iou_thresholds) {
    std::map<std::string, std::size_t, std::less<>> gt_counts;
    for (const std::string& c : categories) gt_counts.emplace(c, 0);
    bool any_prediction = false;
    auto check = [&](const EvalBox& box) -> std::size_t& {
        auto it = gt_counts.find(box.category);
        if (it == gt_counts.end()) throw Error(ErrorCode::UnknownCategory, "unknown category: " + box.category);
        return it->second;
    };
    for (const EvalImage& image : images) {
        for (const EvalBox& g : image.ground_truth) ++check(g);
        for (const EvalBox& p : image.predictions) {
            check(p);
            any_prediction = true;
        }
    }

    std::vector<const std::string*> present;
    std::set<std::string_view> seen;
    for (const std::string& c : categories)
        if (gt_counts[c] > 0 && seen.insert(c).second) present.push_back(&c);
    if (present.empty()) return any_prediction ? 0.0 : 1.0;
    if (iou_thresholds.empty()) throw Error(ErrorCode::InvalidFormat, "no IoU thresholds given");

    double total = 0.0;
    for (double t : iou_thresholds) {
        double per_threshold = 0.0;
        for (const std::string* c : present) per_threshold += category_ap(images, *c, t, gt_counts[*c]);
        total += per_threshold / static_cast<double>(present.size());
    }
    return total / static_cast<double>(iou_thresholds.size());
}

std::vector<EvalImage> freeform_images(const AnnotationSet& ground_truth, const AnnotationSet& prediction,
                                       int page_count) {
    int pages = page_count;
    for (const auto* set : {&ground_truth, &prediction})
        for (const Annotation& a : set->annotations) pages = std::max(pages, a.page + 1);
    std::vector<EvalImage> images(static_cast<std::size_t>(std::max(pages, 0)));
    for (const Annotation& a : ground_truth.annotations)
        if (!a.is_textual() && a.page >= 0) images[a.page].ground_truth.push_back({a.bounds, a.label});
    for (const Annotation& a : prediction.annotations)
        if (!a.is_textual() && a.page >= 0) images[a.page].predictions.push_back({a.bounds, a.label});
    return images;
}

double average_precision(const AnnotationSet& ground_truth, const AnnotationSet& prediction,
                         std::span<const std::string> categories, std::span<const double> iou_thresholds) {
    const auto images = freeform_images(ground_truth, prediction, 0);
    return average_precision(images, categories, iou_thresholds);
}

const AgreementReport* AgreementMatrix::at(std::size_t i, std::size_t j) const {
    const std::size_t n = annotators.size();
    if (i == j || i >= n || j >= n) return nullptr;
    return &reports[i * (n - 1) + (j < i ? j : j - 1)];
}

namespace {

AgreementReport compare_pair(const ProjectStore& store, const std::string& gt, const std::string& pred,
                             const std::vector<std::string>& categories) {
    AgreementReport report;
    report.ground_truth = gt;
    report.prediction = pred;
    const auto gt_docs = store.saved_documents(gt);
    const auto pred_docs = store.saved_documents(pred);
    std::set_intersection(gt_docs.begin(), gt_docs.end(), pred_docs.begin(), pred_docs.end(),
                          std::back_inserter(report.shared_documents));
    if (report.shared_documents.empty()) return report;

    TokenAgreement tokens;
    std::vector<EvalImage> images;
    for (const std::string& hash : report.shared_documents) {
        const auto layout = store.layout(hash);
        const AnnotationSet a = store.load_saved(gt, hash).value_or(AnnotationSet{});
        const AnnotationSet b = store.load_saved(pred, hash).value_or(AnnotationSet{});
        const TokenAgreement t = token_agreement(token_label_map(a, *layout), token_label_map(b, *layout));
        tokens.agreed += t.agreed;
        tokens.compared += t.compared;
        auto doc_images = freeform_images(a, b, static_cast<int>(layout->size()));
        for (EvalImage& img : doc_images) {
            report.boxes_compared += img.ground_truth.size() + img.predictions.size();
            images.push_back(std::move(img));
        }
    }
    report.tokens_compared = tokens.compared;
    report.textual_accuracy = tokens.percent();
    const auto thresholds = default_iou_thresholds();
    report.freeform_ap = average_precision(images, categories, thresholds);
    return report;
}

std::vector<std::string> category_names(const ProjectStore& store) {
    std::vector<std::string> names;
    for (const Label& l : store.schema().labels) names.push_back(l.name);
    return names;
}

}  // namespace

AgreementReport compare_annotators(const ProjectStore& store, const std::string& ground_truth,
                                   const std::string& prediction) {
    AgreementReport report = compare_pair(store, ground_truth, prediction, category_names(store));
    if (report.shared_documents.empty())
        throw Error(ErrorCode::NoSharedDocuments,
                    ground_truth + " and " + prediction + " have no annotated documents in common");
    return report;
}

AgreementMatrix agreement_matrix(const ProjectStore& store, const std::vector<std::string>& annotators) {
    AgreementMatrix matrix;
    matrix.annotators = annotators;
    const auto categories = category_names(store);
    for (std::size_t i = 0; i < annotators.size(); ++i)
        for (std::size_t j = 0; j < annotators.size(); ++j)
            if (i != j) matrix.reports.push_back(compare_pair(store, annotators[i], annotators[j], categories));
    return matrix;
}

}  // namespace docanno
