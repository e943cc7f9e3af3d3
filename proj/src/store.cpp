// SPDX-License-Identifier: Apache-2.0
#include "docanno/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "docanno/pdf.hpp"

namespace docanno {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kPdfFile = "document.pdf";
constexpr const char* kLayoutFile = "structure.json";
constexpr const char* kConfigFile = "config.json";
constexpr const char* kStatusDir = "status";

std::mutex g_hook_mutex;
FaultHook g_hook;

void fire(WritePoint point, const fs::path& target) {
    FaultHook hook;
    {
        std::lock_guard lock(g_hook_mutex);
        hook = g_hook;
    }
    if (hook) hook(point, target);
}

[[noreturn]] void io_error(const std::string& what, const fs::path& path, int err) {
    throw Error(ErrorCode::Io, what + " " + path.string() + ": " + std::strerror(err));
}

void write_all(int fd, const char* data, std::size_t size, const fs::path& path) {
    while (size > 0) {
        const ssize_t n = ::write(fd, data, size);
        if (n < 0) {
            if (errno == EINTR) continue;
            io_error("cannot write", path, errno);
        }
        data += n;
        size -= static_cast<std::size_t>(n);
    }
}

void sync_directory(const fs::path& dir) {
    const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
    if (fd < 0) return;
    ::fsync(fd);
    ::close(fd);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) io_error("cannot read", path, errno);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const fs::path& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidFormat, path.string() + ": " + e.what());
    }
}

std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_hash(std::string_view s) {
    if (s.size() != 64) return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    return true;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

std::string serialize_saved(const AnnotationSet& set, std::uint64_t revision) {
    json j = annotation_set_to_json(set);
    j["revision"] = revision;
    return j.dump(2) + "\n";
}

}  // namespace

nlohmann::json status_to_json(const Status& s) {
    json j{{"finished", s.finished}, {"junk", s.junk}, {"comments", s.comments}};
    j["completedAt"] = s.completed_at ? json(*s.completed_at) : json(nullptr);
    return j;
}

Status status_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidFormat, "status: expected an object");
    Status s;
    auto flag = [&](const char* key, bool& out) {
        if (auto it = j.find(key); it != j.end()) {
            if (!it->is_boolean()) throw Error(ErrorCode::InvalidFormat, std::string("status.") + key + ": expected a boolean");
            out = it->get<bool>();
        }
    };
    flag("finished", s.finished);
    flag("junk", s.junk);
    if (auto it = j.find("comments"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw Error(ErrorCode::InvalidFormat, "status.comments: expected a string");
        s.comments = it->get<std::string>();
    }
    if (auto it = j.find("completedAt"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw Error(ErrorCode::InvalidFormat, "status.completedAt: expected a string");
        s.completed_at = it->get<std::string>();
    }
    return s;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::ValidationFailed, [&] {
          std::string msg = "annotation set failed validation";
          for (const auto& v : violations) msg += "; " + v.location + ": " + v.message;
          return msg;
      }()),
      violations_(std::move(violations)) {}

UnknownDocumentError::UnknownDocumentError(std::vector<std::string> hashes)
    : Error(ErrorCode::UnknownDocument, "unknown document(s): " + join(hashes)), hashes_(std::move(hashes)) {}

void set_fault_hook(FaultHook hook) {
    std::lock_guard lock(g_hook_mutex);
    g_hook = std::move(hook);
}

void atomic_write_file(const fs::path& target, std::string_view contents) {
    static std::atomic<unsigned> counter{0};
    const fs::path dir = target.parent_path();
    const fs::path temp = dir / ("." + target.filename().string() + ".tmp-" + std::to_string(::getpid()) + "-" +
                                 std::to_string(counter++));
    fire(WritePoint::BeforeTempWrite, target);
    const int fd = ::open(temp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
    if (fd < 0) io_error("cannot create", temp, errno);
    try {
        const std::size_t half = contents.size() / 2;
        write_all(fd, contents.data(), half, temp);
        fire(WritePoint::MidTempWrite, target);
        write_all(fd, contents.data() + half, contents.size() - half, temp);
        if (::fsync(fd) != 0) io_error("cannot sync", temp, errno);
        fire(WritePoint::AfterTempWrite, target);
    } catch (...) {
        ::close(fd);
        throw;
    }
    if (::close(fd) != 0) io_error("cannot close", temp, errno);
    fire(WritePoint::BeforeRename, target);
    if (::rename(temp.c_str(), target.c_str()) != 0) {
        const int err = errno;
        ::unlink(temp.c_str());
        io_error("cannot rename onto", target, err);
    }
    sync_directory(dir);
    fire(WritePoint::AfterRename, target);
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::Io, "SHA-256 computation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

void validate_annotator_id(std::string_view id) {
    auto fail = [&](const char* why) {
        throw Error(ErrorCode::InvalidIdentity, "invalid annotator id '" + std::string(id) + "': " + why);
    };
    if (id.empty()) fail("empty");
    if (id.size() > 200) fail("too long");
    if (id.front() == '.') fail("starts with a dot");
    if (id == kPredictionsAnnotator) fail("reserved");
    if (id == "structure") fail("reserved");
    for (unsigned char c : id) {
        if (c == '/' || c == '\\') fail("contains a path separator");
        if (c < 0x20 || c == 0x7f) fail("contains a control character");
    }
}

ProjectStore::ProjectStore(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create project directory " + root_.string() + ": " + ec.message());
}

fs::path ProjectStore::doc_dir(std::string_view hash) const { return root_ / std::string(hash); }

fs::path ProjectStore::annotation_path(std::string_view annotator, std::string_view hash) const {
    return doc_dir(hash) / (std::string(annotator) + ".json");
}

fs::path ProjectStore::status_path(std::string_view annotator, std::string_view hash) const {
    return doc_dir(hash) / kStatusDir / (std::string(annotator) + ".json");
}

LabelSchema ProjectStore::schema() const {
    std::lock_guard lock(schema_mutex_);
    const fs::path path = root_ / kConfigFile;
    if (!fs::exists(path)) return {};
    return schema_from_json(read_json(path));
}

void ProjectStore::set_schema(const LabelSchema& schema) {
    std::lock_guard lock(schema_mutex_);
    atomic_write_file(root_ / kConfigFile, schema_to_json(schema).dump(2) + "\n");
}

std::string ProjectStore::add_document(std::string_view pdf_bytes, std::vector<std::string>* warnings) {
    if (const std::string hash = sha256_hex(pdf_bytes); has_document(hash)) return hash;
    ExtractionResult result = extract_token_layout(pdf_bytes);
    if (warnings) *warnings = std::move(result.warnings);
    return add_document(pdf_bytes, result.pages);
}

std::string ProjectStore::add_document(std::string_view pdf_bytes, const DocumentLayout& layout) {
    const std::string hash = sha256_hex(pdf_bytes);
    if (has_document(hash)) return hash;
    const std::string layout_text = serialize_layout(layout);
    parse_layout(layout_text);
    const fs::path dir = doc_dir(hash);
    std::error_code ec;
    fs::create_directories(dir / kStatusDir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
    atomic_write_file(dir / kPdfFile, pdf_bytes);
    atomic_write_file(dir / kLayoutFile, layout_text);
    return hash;
}

std::vector<std::string> ProjectStore::documents() const {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(root_, ec)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_directory() && is_hash(name) && fs::exists(entry.path() / kLayoutFile)) out.push_back(name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ProjectStore::has_document(std::string_view hash) const {
    return is_hash(hash) && fs::exists(doc_dir(hash) / kLayoutFile);
}

fs::path ProjectStore::pdf_path(std::string_view hash) const {
    if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + std::string(hash));
    return doc_dir(hash) / kPdfFile;
}

std::string ProjectStore::pdf_bytes(std::string_view hash) const { return read_file(pdf_path(hash)); }

std::shared_ptr<const DocumentLayout> ProjectStore::layout(std::string_view hash) const {
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = layout_cache_.find(hash); it != layout_cache_.end()) return it->second;
    }
    if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + std::string(hash));
    auto parsed = std::make_shared<const DocumentLayout>(parse_layout(read_file(doc_dir(hash) / kLayoutFile)));
    std::unique_lock lock(cache_mutex_);
    return layout_cache_.try_emplace(std::string(hash), std::move(parsed)).first->second;
}

std::set<std::string> ProjectStore::assign(const std::string& annotator, const std::vector<std::string>& hashes) {
    validate_annotator_id(annotator);
    std::vector<std::string> missing;
    for (const auto& h : hashes)
        if (!has_document(h)) missing.push_back(h);
    if (!missing.empty()) throw UnknownDocumentError(std::move(missing));
    for (const auto& h : hashes) {
        std::lock_guard lock(pair_lock(annotator, h));
        const fs::path path = status_path(annotator, h);
        if (fs::exists(path)) continue;
        fs::create_directories(path.parent_path());
        atomic_write_file(path, status_to_json(Status{}).dump(2) + "\n");
    }
    return assignments(annotator);
}

std::set<std::string> ProjectStore::assignments(const std::string& annotator) const {
    std::set<std::string> out;
    for (const auto& h : documents())
        if (fs::exists(status_path(annotator, h))) out.insert(h);
    return out;
}

bool ProjectStore::is_assigned(const std::string& annotator, std::string_view hash) const {
    return has_document(hash) && !annotator.empty() && annotator.find('/') == std::string::npos &&
           fs::exists(status_path(annotator, hash));
}

std::vector<std::string> ProjectStore::annotators() const {
    std::set<std::string> names;
    for (const auto& h : documents()) {
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(doc_dir(h) / kStatusDir, ec)) {
            const fs::path& p = entry.path();
            const std::string file = p.filename().string();
            if (file.front() == '.' || p.extension() != ".json") continue;
            std::string name = p.stem().string();
            if (name != kPredictionsAnnotator) names.insert(std::move(name));
        }
    }
    return {names.begin(), names.end()};
}

std::mutex& ProjectStore::pair_lock(const std::string& annotator, const std::string& hash) {
    std::lock_guard lock(locks_mutex_);
    auto& slot = pair_locks_[{annotator, hash}];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

AnnotationSet ProjectStore::prepare_for_storage(const AnnotationSet& set, const DocumentLayout& layout,
                                                const LabelSchema& schema, bool resolve_tokens) const {
    AnnotationSet out = set;
    if (resolve_tokens) {
        for (Annotation& a : out.annotations) {
            if (a.tokens || a.page < 0 || a.page >= static_cast<int>(layout.size())) continue;
            const Label* label = schema.find_label(a.label);
            if (!label || label->freeform) continue;
            const auto indices = select_tokens(layout[a.page], a.bounds);
            if (indices.empty()) continue;
            std::vector<TokenRef> refs;
            for (int i : indices) refs.push_back({a.page, i});
            a.tokens = std::move(refs);
        }
    }
    out = canonicalize(std::move(out), layout, schema.padding);
    if (auto violations = validate_annotation_set(out, layout, schema); !violations.empty())
        throw ValidationError(std::move(violations));
    return out;
}

SaveResult ProjectStore::save_annotations(const std::string& annotator, const std::string& hash,
                                          const AnnotationSet& set) {
    validate_annotator_id(annotator);
    if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + hash);
    if (!is_assigned(annotator, hash))
        throw Error(ErrorCode::NotAssigned, annotator + " is not assigned to " + hash);
    const LabelSchema current = schema();
    const auto doc_layout = layout(hash);
    SaveResult result;
    result.annotations = prepare_for_storage(set, *doc_layout, current, false);

    std::lock_guard lock(pair_lock(annotator, hash));
    result.revision = revision(annotator, hash) + 1;
    atomic_write_file(annotation_path(annotator, hash), serialize_saved(result.annotations, result.revision));
    return result;
}

std::optional<AnnotationSet> ProjectStore::load_saved(const std::string& annotator, std::string_view hash) const {
    const fs::path path = annotation_path(annotator, hash);
    if (!fs::exists(path)) return std::nullopt;
    return annotation_set_from_json(read_json(path));
}

std::uint64_t ProjectStore::revision(const std::string& annotator, std::string_view hash) const {
    const fs::path path = annotation_path(annotator, hash);
    if (!fs::exists(path)) return 0;
    const json j = read_json(path);
    if (auto it = j.find("revision"); it != j.end() && it->is_number_unsigned()) return it->get<std::uint64_t>();
    return 0;
}

AnnotationSet ProjectStore::load_annotations(const std::string& annotator, const std::string& hash) const {
    if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + hash);
    if (!is_assigned(annotator, hash))
        throw Error(ErrorCode::NotAssigned, annotator + " is not assigned to " + hash);
    if (auto saved = load_saved(annotator, hash)) return *saved;
    if (auto predicted = load_saved(std::string(kPredictionsAnnotator), hash)) return *predicted;
    return {};
}

std::vector<std::string> ProjectStore::saved_documents(const std::string& annotator) const {
    std::vector<std::string> out;
    for (const auto& h : documents())
        if (fs::exists(annotation_path(annotator, h))) out.push_back(h);
    return out;
}

PrepopulateResult ProjectStore::prepopulate(const nlohmann::json& predictions) {
    if (!predictions.is_object())
        throw Error(ErrorCode::InvalidFormat, "predictions: expected an object keyed by document hash");
    const LabelSchema current = schema();
    const std::string reserved(kPredictionsAnnotator);
    PrepopulateResult result;
    for (const auto& [hash, payload] : predictions.items()) {
        try {
            if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + hash);
            const AnnotationSet parsed = annotation_set_from_json(payload);
            const AnnotationSet stored = prepare_for_storage(parsed, *layout(hash), current, true);
            std::lock_guard lock(pair_lock(reserved, hash));
            atomic_write_file(annotation_path(reserved, hash), serialize_saved(stored, revision(reserved, hash) + 1));
            ++result.populated;
        } catch (const ValidationError& e) {
            result.failures.push_back({hash, e.what(), e.violations()});
        } catch (const Error& e) {
            result.failures.push_back({hash, e.what(), {}});
        }
    }
    return result;
}

Status ProjectStore::set_status(const std::string& annotator, const std::string& hash, Status status) {
    if (!has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + hash);
    if (!is_assigned(annotator, hash))
        throw Error(ErrorCode::NotAssigned, annotator + " is not assigned to " + hash);
    if (status.finished && status.junk)
        throw Error(ErrorCode::InvalidStatus, "a document cannot be both finished and junk");
    if (status.finished && !status.completed_at) status.completed_at = now_utc();
    if (!status.finished) status.completed_at.reset();
    std::lock_guard lock(pair_lock(annotator, hash));
    atomic_write_file(status_path(annotator, hash), status_to_json(status).dump(2) + "\n");
    return status;
}

Status ProjectStore::status(const std::string& annotator, std::string_view hash) const {
    if (!is_assigned(annotator, hash))
        throw Error(ErrorCode::NotAssigned, annotator + " is not assigned to " + std::string(hash));
    return status_from_json(read_json(status_path(annotator, hash)));
}

std::map<std::string, Progress> ProjectStore::project_progress() const {
    std::map<std::string, Progress> out;
    for (const auto& annotator : annotators()) {
        Progress& p = out[annotator];
        for (const auto& h : assignments(annotator)) {
            const Status s = status(annotator, h);
            if (s.finished)
                ++p.finished;
            else if (s.junk)
                ++p.junk;
            else
                ++p.in_progress;
        }
    }
    return out;
}

}  // namespace docanno
