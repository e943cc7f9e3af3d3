// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace docanno {

class ProjectStore;

inline constexpr const char* kDevelopmentUser = "development_user";

struct ServiceOptions {
    std::string identity_header = "X-Annotator";
    /// Without the identity header, development mode acts as kDevelopmentUser and
    /// production mode answers 401.
    bool development = true;
    /// Directory served under "/" (the browser client bundle).
    std::optional<std::filesystem::path> static_dir;
};

/// HTTP API over a project store.
///
///   GET  /api/docs
///   GET  /api/doc/{hash}/pdf
///   GET  /api/doc/{hash}/tokens
///   GET  /api/doc/{hash}/annotations
///   POST /api/doc/{hash}/annotations
///   POST /api/doc/{hash}/status
///   GET  /api/config/labels
///
/// Errors are JSON objects {"status", "code", "message"}; validation failures add
/// a "violations" list.
class Service {
public:
    Service(ProjectStore& store, ServiceOptions options = {});
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds the listening socket; port 0 picks a free one. Returns the bound port.
    /// Throws Error(Io) when the address is unavailable.
    int bind(const std::string& host, int port);
    /// Serves until stop() is called. Requires a successful bind().
    void run();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace docanno
