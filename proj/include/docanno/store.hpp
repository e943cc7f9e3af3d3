// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "docanno/annotation.hpp"
#include "docanno/error.hpp"
#include "docanno/layout.hpp"

namespace docanno {

/// Reserved annotator identity holding model predictions.
inline constexpr std::string_view kPredictionsAnnotator = "__predictions__";

struct Status {
    bool finished = false;
    bool junk = false;
    std::string comments;
    std::optional<std::string> completed_at;  // ISO-8601 UTC

    friend bool operator==(const Status&, const Status&) = default;
};

nlohmann::json status_to_json(const Status& status);
/// Throws Error(InvalidFormat) for malformed payloads; does not check finished/junk.
Status status_from_json(const nlohmann::json& j);

struct Progress {
    std::size_t finished = 0;
    std::size_t junk = 0;
    std::size_t in_progress = 0;

    friend bool operator==(const Progress&, const Progress&) = default;
};

/// Thrown by save/prepopulate when a set fails validation.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Thrown by assign when some hashes are not registered.
class UnknownDocumentError : public Error {
public:
    explicit UnknownDocumentError(std::vector<std::string> hashes);
    const std::vector<std::string>& hashes() const { return hashes_; }

private:
    std::vector<std::string> hashes_;
};

struct SaveResult {
    std::uint64_t revision = 0;
    AnnotationSet annotations;  // as stored, textual bounds snapped
};

struct PrepopulateFailure {
    std::string document;
    std::string message;
    std::vector<Violation> violations;
};

struct PrepopulateResult {
    std::size_t populated = 0;
    std::vector<PrepopulateFailure> failures;
};

/// Points inside an atomic file replacement where a fault can be injected.
enum class WritePoint { BeforeTempWrite, MidTempWrite, AfterTempWrite, BeforeRename, AfterRename };

/// Called at every write point; may throw to simulate a crash. Process-wide,
/// intended for tests.
using FaultHook = std::function<void(WritePoint, const std::filesystem::path& target)>;
void set_fault_hook(FaultHook hook);

/// Writes `contents` to a sibling temporary file, fsyncs it and renames it over `target`.
void atomic_write_file(const std::filesystem::path& target, std::string_view contents);

std::string sha256_hex(std::string_view bytes);

/// Checks that an annotator id is usable as a file name. Throws Error(InvalidIdentity).
void validate_annotator_id(std::string_view annotator);

/// On-disk project: `<root>/config.json` and one directory per document hash
/// holding `document.pdf`, `structure.json`, `<annotator>.json` and
/// `status/<annotator>.json`. An annotator is assigned to a document exactly
/// when its status file exists. Safe to share between threads.
class ProjectStore {
public:
    /// Opens (creating if needed) the project directory. A missing config.json
    /// yields an empty schema.
    explicit ProjectStore(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    LabelSchema schema() const;
    void set_schema(const LabelSchema& schema);

    /// Extracts tokens and stores the PDF under its SHA-256 hash. Idempotent.
    std::string add_document(std::string_view pdf_bytes, std::vector<std::string>* warnings = nullptr);
    /// Stores a PDF with a layout produced elsewhere (e.g. an external processor).
    std::string add_document(std::string_view pdf_bytes, const DocumentLayout& layout);

    std::vector<std::string> documents() const;  // sorted
    bool has_document(std::string_view hash) const;
    std::string pdf_bytes(std::string_view hash) const;
    std::filesystem::path pdf_path(std::string_view hash) const;
    /// Cached; throws Error(UnknownDocument).
    std::shared_ptr<const DocumentLayout> layout(std::string_view hash) const;

    /// Union-adds documents to the annotator's assignment. Throws UnknownDocumentError.
    std::set<std::string> assign(const std::string& annotator, const std::vector<std::string>& hashes);
    std::set<std::string> assignments(const std::string& annotator) const;
    bool is_assigned(const std::string& annotator, std::string_view hash) const;
    /// Human annotators with at least one assignment, sorted.
    std::vector<std::string> annotators() const;

    /// Validates, snaps textual bounds and atomically replaces the annotation file.
    /// Throws Error(NotAssigned) or ValidationError.
    SaveResult save_annotations(const std::string& annotator, const std::string& hash, const AnnotationSet& set);

    /// Last saved set, else the pre-annotation set, else empty. Throws Error(NotAssigned).
    AnnotationSet load_annotations(const std::string& annotator, const std::string& hash) const;
    /// The annotator's own saved file, if any; no assignment check.
    std::optional<AnnotationSet> load_saved(const std::string& annotator, std::string_view hash) const;
    /// Revision of the saved file, 0 when never saved.
    std::uint64_t revision(const std::string& annotator, std::string_view hash) const;
    /// Documents for which the annotator has a saved file, sorted.
    std::vector<std::string> saved_documents(const std::string& annotator) const;

    /// Stores prediction payloads keyed by document hash under the reserved identity.
    PrepopulateResult prepopulate(const nlohmann::json& predictions);

    /// Throws Error(NotAssigned) or Error(InvalidStatus).
    Status set_status(const std::string& annotator, const std::string& hash, Status status);
    Status status(const std::string& annotator, std::string_view hash) const;
    std::map<std::string, Progress> project_progress() const;

private:
    std::filesystem::path doc_dir(std::string_view hash) const;
    std::filesystem::path annotation_path(std::string_view annotator, std::string_view hash) const;
    std::filesystem::path status_path(std::string_view annotator, std::string_view hash) const;
    std::mutex& pair_lock(const std::string& annotator, const std::string& hash);
    AnnotationSet prepare_for_storage(const AnnotationSet& set, const DocumentLayout& layout,
                                      const LabelSchema& schema, bool resolve_tokens) const;

    std::filesystem::path root_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::string, std::shared_ptr<const DocumentLayout>, std::less<>> layout_cache_;
    std::mutex locks_mutex_;
    std::map<std::pair<std::string, std::string>, std::unique_ptr<std::mutex>> pair_locks_;
    mutable std::mutex schema_mutex_;
};

}  // namespace docanno
