// SPDX-License-Identifier: Apache-2.0
#include "docanno/annotation.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"

namespace docanno {
namespace {

using nlohmann::json;

bool is_hex_color(const std::string& c) {
    if (c.size() != 7 || c[0] != '#') return false;
    for (std::size_t i = 1; i < 7; ++i) {
        if (!std::isxdigit(static_cast<unsigned char>(c[i]))) return false;
    }
    return true;
}

bool close(const Bounds& a, const Bounds& b, double tol) {
    return std::abs(a.left - b.left) <= tol && std::abs(a.top - b.top) <= tol &&
           std::abs(a.right - b.right) <= tol && std::abs(a.bottom - b.bottom) <= tol;
}

[[noreturn]] void bad_format(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::InvalidFormat, where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad_format(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_string()) bad_format(where + "." + key, "expected a string");
    return v.get<std::string>();
}

int int_member(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_number_integer()) bad_format(where + "." + key, "expected an integer");
    return v.get<int>();
}

double number_member(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_number()) bad_format(where + "." + key, "expected a number");
    return v.get<double>();
}

}  // namespace

const Label* LabelSchema::find_label(std::string_view name) const {
    for (const Label& l : labels) {
        if (l.name == name) return &l;
    }
    return nullptr;
}

bool LabelSchema::has_relation(std::string_view name) const {
    return std::find(relations.begin(), relations.end(), name) != relations.end();
}

std::vector<int> select_tokens(const PageTokenLayout& layout, const Bounds& drag) {
    std::vector<int> out;
    for (std::size_t i = 0; i < layout.tokens.size(); ++i) {
        if (intersection_area(layout.tokens[i].bounds(), drag) > 0.0) out.push_back(static_cast<int>(i));
    }
    return out;
}

Bounds snap_bounds(std::span<const Token> tokens, double padding, std::optional<Size> page) {
    if (tokens.empty()) throw Error(ErrorCode::EmptySelection, "cannot snap an empty token selection");
    Bounds u = tokens.front().bounds();
    for (const Token& t : tokens.subspan(1)) u = union_of(u, t.bounds());
    u = expanded(u, padding);
    return page ? clamped(u, *page) : u;
}

Bounds snap_bounds(const DocumentLayout& layouts, std::span<const TokenRef> refs, double padding) {
    std::vector<Token> tokens;
    tokens.reserve(refs.size());
    std::optional<Size> page;
    for (const TokenRef& r : refs) {
        const PageTokenLayout& p = layouts.at(static_cast<std::size_t>(r.page));
        tokens.push_back(p.tokens.at(static_cast<std::size_t>(r.token)));
        page = p.page.size();
    }
    return snap_bounds(tokens, padding, page);
}

std::vector<Violation> validate_annotation_set(const AnnotationSet& set, const DocumentLayout& layouts,
                                               const LabelSchema& schema) {
    std::vector<Violation> out;
    auto add = [&](std::string code, std::string location, std::string message) {
        out.push_back({std::move(code), std::move(location), std::move(message)});
    };

    std::unordered_set<std::string> ids;
    for (std::size_t i = 0; i < set.annotations.size(); ++i) {
        const Annotation& a = set.annotations[i];
        const std::string where = "annotations[" + std::to_string(i) + "]";
        if (a.id.empty()) add("empty-id", where + ".id", "annotation id is empty");
        if (!ids.insert(a.id).second) add("duplicate-annotation-id", where + ".id", "duplicate id " + a.id);
        if (!schema.find_label(a.label)) add("unknown-label", where + ".label", "label '" + a.label + "' is not in the schema");

        const Bounds& b = a.bounds;
        const bool finite = std::isfinite(b.left) && std::isfinite(b.top) && std::isfinite(b.right) && std::isfinite(b.bottom);
        if (!finite || !b.is_ordered()) add("invalid-bounds", where + ".bounds", "bounds are not an ordered rectangle");

        if (a.page < 0 || a.page >= static_cast<int>(layouts.size())) {
            add("unknown-page", where + ".page", "page " + std::to_string(a.page) + " does not exist");
            continue;
        }
        const PageInfo& page = layouts[a.page].page;
        if (finite && (b.left < 0.0 || b.top < 0.0 || b.right > page.width || b.bottom > page.height)) {
            add("out-of-page-bounds", where + ".bounds", "bounds extend beyond the page");
        }

        if (!a.tokens) continue;
        if (a.tokens->empty()) {
            add("empty-token-refs", where + ".tokens", "textual annotation has no tokens");
            continue;
        }
        bool refs_ok = true;
        for (std::size_t k = 0; k < a.tokens->size(); ++k) {
            const TokenRef& r = (*a.tokens)[k];
            const std::string rw = where + ".tokens[" + std::to_string(k) + "]";
            if (r.page != a.page) {
                add("token-page-mismatch", rw, "token page differs from the annotation page");
                refs_ok = false;
            } else if (r.token < 0 || r.token >= static_cast<int>(layouts[a.page].tokens.size())) {
                add("unknown-token", rw, "token " + std::to_string(r.token) + " does not exist");
                refs_ok = false;
            }
        }
        if (refs_ok && finite) {
            const Bounds snapped = snap_bounds(layouts, *a.tokens, schema.padding);
            if (!close(snapped, b, kSnapTolerance)) {
                add("snap-mismatch", where + ".bounds", "bounds differ from the snapped token union");
            }
        }
    }

    std::unordered_set<std::string> relation_ids;
    for (std::size_t i = 0; i < set.relations.size(); ++i) {
        const RelationGroup& r = set.relations[i];
        const std::string where = "relations[" + std::to_string(i) + "]";
        if (r.id.empty()) add("empty-id", where + ".id", "relation id is empty");
        if (!relation_ids.insert(r.id).second) add("duplicate-relation-id", where + ".id", "duplicate id " + r.id);
        if (!schema.has_relation(r.label)) add("unknown-relation-label", where + ".label", "relation label '" + r.label + "' is not in the schema");
        if (r.targets.size() < 2) add("too-few-targets", where + ".targetIds", "relations need at least two targets");
        std::unordered_set<std::string> seen;
        for (std::size_t k = 0; k < r.targets.size(); ++k) {
            const std::string tw = where + ".targetIds[" + std::to_string(k) + "]";
            if (!ids.contains(r.targets[k])) add("dangling-relation-target", tw, "no annotation with id " + r.targets[k]);
            if (!seen.insert(r.targets[k]).second) add("duplicate-relation-target", tw, "target listed twice");
        }
    }
    return out;
}

AnnotationSet canonicalize(AnnotationSet set, const DocumentLayout& layouts, double padding) {
    for (Annotation& a : set.annotations) {
        if (!a.tokens || a.tokens->empty()) continue;
        const bool resolvable = std::all_of(a.tokens->begin(), a.tokens->end(), [&](const TokenRef& r) {
            return r.page == a.page && r.page >= 0 && r.page < static_cast<int>(layouts.size()) && r.token >= 0 &&
                   r.token < static_cast<int>(layouts[r.page].tokens.size());
        });
        if (resolvable) a.bounds = snap_bounds(layouts, *a.tokens, padding);
    }
    return set;
}

std::string generate_annotation_id() {
    thread_local std::mt19937_64 rng{std::random_device{}()};
    const std::uint64_t hi = rng(), lo = rng();
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                  static_cast<unsigned long long>(lo));
    return buf;
}

nlohmann::json annotation_set_to_json(const AnnotationSet& set) {
    json annotations = json::array();
    for (const Annotation& a : set.annotations) {
        json tokens = nullptr;
        if (a.tokens) {
            tokens = json::array();
            for (const TokenRef& r : *a.tokens) tokens.push_back({{"pageIndex", r.page}, {"tokenIndex", r.token}});
        }
        annotations.push_back({{"id", a.id},
                               {"page", a.page},
                               {"label", a.label},
                               {"bounds", {{"left", a.bounds.left}, {"top", a.bounds.top}, {"right", a.bounds.right}, {"bottom", a.bounds.bottom}}},
                               {"tokens", std::move(tokens)}});
    }
    json relations = json::array();
    for (const RelationGroup& r : set.relations) {
        relations.push_back({{"id", r.id}, {"label", r.label}, {"targetIds", r.targets}});
    }
    return {{"annotations", std::move(annotations)}, {"relations", std::move(relations)}};
}

AnnotationSet annotation_set_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad_format("$", "expected an object");
    AnnotationSet set;
    if (auto it = j.find("annotations"); it != j.end()) {
        if (!it->is_array()) bad_format("annotations", "expected a list");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "annotations[" + std::to_string(i) + "]";
            const json& aj = (*it)[i];
            if (!aj.is_object()) bad_format(where, "expected an object");
            Annotation a;
            a.id = string_member(aj, "id", where);
            a.page = int_member(aj, "page", where);
            a.label = string_member(aj, "label", where);
            const json& bj = member(aj, "bounds", where);
            if (!bj.is_object()) bad_format(where + ".bounds", "expected an object");
            a.bounds = {number_member(bj, "left", where + ".bounds"), number_member(bj, "top", where + ".bounds"),
                        number_member(bj, "right", where + ".bounds"), number_member(bj, "bottom", where + ".bounds")};
            if (auto tj = aj.find("tokens"); tj != aj.end() && !tj->is_null()) {
                if (!tj->is_array()) bad_format(where + ".tokens", "expected a list or null");
                std::vector<TokenRef> refs;
                for (std::size_t k = 0; k < tj->size(); ++k) {
                    const std::string rw = where + ".tokens[" + std::to_string(k) + "]";
                    if (!(*tj)[k].is_object()) bad_format(rw, "expected an object");
                    refs.push_back({int_member((*tj)[k], "pageIndex", rw), int_member((*tj)[k], "tokenIndex", rw)});
                }
                a.tokens = std::move(refs);
            }
            set.annotations.push_back(std::move(a));
        }
    }
    if (auto it = j.find("relations"); it != j.end()) {
        if (!it->is_array()) bad_format("relations", "expected a list");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "relations[" + std::to_string(i) + "]";
            const json& rj = (*it)[i];
            if (!rj.is_object()) bad_format(where, "expected an object");
            RelationGroup r;
            r.id = string_member(rj, "id", where);
            r.label = string_member(rj, "label", where);
            const json& targets = member(rj, "targetIds", where);
            if (!targets.is_array()) bad_format(where + ".targetIds", "expected a list");
            for (std::size_t k = 0; k < targets.size(); ++k) {
                if (!targets[k].is_string()) bad_format(where + ".targetIds[" + std::to_string(k) + "]", "expected a string");
                r.targets.push_back(targets[k].get<std::string>());
            }
            set.relations.push_back(std::move(r));
        }
    }
    return set;
}

nlohmann::json schema_to_json(const LabelSchema& schema) {
    json labels = json::array();
    for (const Label& l : schema.labels) {
        json lj = {{"text", l.name}, {"color", l.color}};
        if (l.freeform) lj["freeform"] = true;
        labels.push_back(std::move(lj));
    }
    json relations = json::array();
    for (const std::string& r : schema.relations) relations.push_back({{"text", r}});
    json out = {{"labels", std::move(labels)}, {"relations", std::move(relations)}};
    if (schema.padding != kDefaultPadding) out["padding"] = schema.padding;
    return out;
}

LabelSchema schema_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad_format("config", "expected an object");
    LabelSchema schema;
    std::set<std::string> names;
    const json& labels = member(j, "labels", "config");
    if (!labels.is_array()) bad_format("config.labels", "expected a list");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string where = "config.labels[" + std::to_string(i) + "]";
        if (!labels[i].is_object()) bad_format(where, "expected an object");
        Label l;
        l.name = string_member(labels[i], "text", where);
        l.color = string_member(labels[i], "color", where);
        if (auto f = labels[i].find("freeform"); f != labels[i].end()) {
            if (!f->is_boolean()) bad_format(where + ".freeform", "expected a boolean");
            l.freeform = f->get<bool>();
        }
        if (l.name.empty()) bad_format(where + ".text", "label name is empty");
        if (!is_hex_color(l.color)) bad_format(where + ".color", "expected a #rrggbb color");
        if (!names.insert(l.name).second) bad_format(where + ".text", "duplicate label '" + l.name + "'");
        schema.labels.push_back(std::move(l));
    }
    std::set<std::string> relation_names;
    if (auto rel = j.find("relations"); rel != j.end()) {
        if (!rel->is_array()) bad_format("config.relations", "expected a list");
        for (std::size_t i = 0; i < rel->size(); ++i) {
            const std::string where = "config.relations[" + std::to_string(i) + "]";
            if (!(*rel)[i].is_object()) bad_format(where, "expected an object");
            std::string name = string_member((*rel)[i], "text", where);
            if (!relation_names.insert(name).second) bad_format(where + ".text", "duplicate relation '" + name + "'");
            schema.relations.push_back(std::move(name));
        }
    }
    if (auto p = j.find("padding"); p != j.end()) {
        if (!p->is_number() || p->get<double>() < 0.0) bad_format("config.padding", "expected a non-negative number");
        schema.padding = p->get<double>();
    }
    return schema;
}

}  // namespace docanno
