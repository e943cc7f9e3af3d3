// SPDX-License-Identifier: Apache-2.0
#include "docanno/service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "docanno/error.hpp"
#include "docanno/store.hpp"

namespace docanno {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

class HttpError : public std::runtime_error {
public:
    HttpError(int status, std::string code, const std::string& message)
        : std::runtime_error(message), status(status), code(std::move(code)) {}
    int status;
    std::string code;
};

int http_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownDocument: return 404;
        case ErrorCode::NotAssigned: return 403;
        case ErrorCode::ValidationFailed:
        case ErrorCode::InvalidStatus: return 422;
        case ErrorCode::InvalidFormat:
        case ErrorCode::InvalidIdentity: return 400;
        default: return 500;
    }
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message,
                const json* violations = nullptr) {
    json body{{"status", status}, {"code", code}, {"message", message}};
    if (violations) body["violations"] = *violations;
    res.status = status;
    res.set_content(body.dump(), kJson);
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"code", v.code}, {"location", v.location}, {"message", v.message}});
    return out;
}

std::string etag(const std::string& value) { return "\"" + value + "\""; }

bool not_modified(const httplib::Request& req, httplib::Response& res, const std::string& tag) {
    res.set_header("ETag", tag);
    if (req.get_header_value("If-None-Match") == tag) {
        res.status = 304;
        return true;
    }
    return false;
}

json parse_body(const httplib::Request& req) {
    try {
        return json::parse(req.body);
    } catch (const json::parse_error& e) {
        throw HttpError(400, "invalid-format", std::string("request body is not valid JSON: ") + e.what());
    }
}

}  // namespace

struct Service::Impl {
    ProjectStore& store;
    ServiceOptions options;
    httplib::Server server;
    bool bound = false;

    Impl(ProjectStore& s, ServiceOptions o) : store(s), options(std::move(o)) {
        // Without SO_REUSEPORT, so that a second instance fails to bind instead of sharing the port.
        server.set_socket_options([](socket_t sock) {
            int yes = 1;
            ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
        });
        routes();
    }

    std::string identity(const httplib::Request& req) const {
        if (!req.has_header(options.identity_header)) {
            if (options.development) return kDevelopmentUser;
            throw HttpError(401, "missing-identity", "request has no " + options.identity_header + " header");
        }
        std::string id = req.get_header_value(options.identity_header);
        validate_annotator_id(id);
        return id;
    }

    std::string assigned_document(const httplib::Request& req, const std::string& who) const {
        std::string hash = req.matches[1];
        if (!store.has_document(hash)) throw Error(ErrorCode::UnknownDocument, "unknown document: " + hash);
        if (!store.is_assigned(who, hash)) throw Error(ErrorCode::NotAssigned, who + " is not assigned to " + hash);
        return hash;
    }

    template <class F>
    httplib::Server::Handler guarded(F f) {
        return [f](const httplib::Request& req, httplib::Response& res) {
            try {
                f(req, res);
            } catch (const HttpError& e) {
                send_error(res, e.status, e.code, e.what());
            } catch (const ValidationError& e) {
                const json v = violations_json(e.violations());
                send_error(res, 422, error_code_name(e.code()), e.what(), &v);
            } catch (const Error& e) {
                send_error(res, http_status(e.code()), error_code_name(e.code()), e.what());
            } catch (const std::exception& e) {
                send_error(res, 500, "internal-error", e.what());
            }
        };
    }

    static json annotations_payload(const AnnotationSet& set, std::uint64_t revision) {
        json j = annotation_set_to_json(set);
        j["revision"] = revision;
        return j;
    }

    void routes() {
        server.Get("/api/docs", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string who = identity(req);
            json out = json::array();
            for (const auto& hash : store.assignments(who)) {
                out.push_back({{"hash", hash},
                               {"page_count", store.layout(hash)->size()},
                               {"status", status_to_json(store.status(who, hash))}});
            }
            res.set_content(out.dump(), kJson);
        }));

        server.Get(R"(/api/doc/([0-9a-f]+)/pdf)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string hash = assigned_document(req, identity(req));
            if (not_modified(req, res, etag(hash))) return;
            res.set_content(store.pdf_bytes(hash), "application/pdf");
        }));

        server.Get(R"(/api/doc/([0-9a-f]+)/tokens)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string hash = assigned_document(req, identity(req));
            if (not_modified(req, res, etag(hash))) return;
            res.set_content(serialize_layout(*store.layout(hash)), kJson);
        }));

        server.Get("/api/config/labels", guarded([this](const httplib::Request& req, httplib::Response& res) {
            identity(req);
            res.set_content(schema_to_json(store.schema()).dump(), kJson);
        }));

        server.Get(R"(/api/doc/([0-9a-f]+)/annotations)",
                   guarded([this](const httplib::Request& req, httplib::Response& res) {
                       const std::string who = identity(req);
                       const std::string hash = assigned_document(req, who);
                       const std::uint64_t rev = store.revision(who, hash);
                       if (not_modified(req, res, etag(std::to_string(rev)))) return;
                       res.set_content(annotations_payload(store.load_annotations(who, hash), rev).dump(), kJson);
                   }));

        server.Post(R"(/api/doc/([0-9a-f]+)/annotations)",
                    guarded([this](const httplib::Request& req, httplib::Response& res) {
                        const std::string who = identity(req);
                        const std::string hash = assigned_document(req, who);
                        const AnnotationSet set = annotation_set_from_json(parse_body(req));
                        const SaveResult saved = store.save_annotations(who, hash, set);
                        res.set_header("ETag", etag(std::to_string(saved.revision)));
                        res.set_content(annotations_payload(saved.annotations, saved.revision).dump(), kJson);
                    }));

        server.Post(R"(/api/doc/([0-9a-f]+)/status)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            const std::string who = identity(req);
            const std::string hash = assigned_document(req, who);
            const Status stored = store.set_status(who, hash, status_from_json(parse_body(req)));
            res.set_content(status_to_json(stored).dump(), kJson);
        }));

        if (options.static_dir) server.set_mount_point("/", options.static_dir->string());

        server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
            if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
            const bool missing = res.status == 404;
            send_error(res, res.status, missing ? "not-found" : "http-error",
                       missing ? "no route for " + req.method + " " + req.path : httplib::status_message(res.status));
            return httplib::Server::HandlerResponse::Handled;
        });
    }
};

Service::Service(ProjectStore& store, ServiceOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
    const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound < 0)
        throw Error(ErrorCode::Io, "cannot bind to " + host + ":" + std::to_string(port) +
                                       " (address unavailable or port already in use)");
    impl_->bound = true;
    return bound;
}

void Service::run() {
    if (!impl_->bound) throw Error(ErrorCode::Io, "service is not bound to a port");
    impl_->server.listen_after_bind();
}

void Service::stop() {
    if (impl_->server.is_running()) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace docanno
