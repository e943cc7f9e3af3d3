// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace docanno {

std::string shell_quote(const std::string& s);
void replace_all(std::string& s, const std::string& from, const std::string& to);

struct TempFile {
    std::filesystem::path path;

    TempFile();
    ~TempFile();
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    std::string read() const;
};

struct ShellResult {
    bool ok = false;
    std::string description;  // "exited with status 3", "terminated by a signal"
    std::string diagnostics;  // captured stderr, truncated
};

/// Runs `command` through /bin/sh, optionally redirecting stdout to a file.
ShellResult run_shell(const std::string& command, const std::optional<std::filesystem::path>& stdout_path = {});

}  // namespace docanno
