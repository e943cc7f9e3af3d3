// SPDX-License-Identifier: Apache-2.0
#include "process.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <fstream>
#include <sstream>

#include "docanno/error.hpp"

namespace docanno {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
        s.replace(pos, from.size(), to);
    }
}

TempFile::TempFile() {
    std::string pattern = (std::filesystem::temp_directory_path() / "docanno-XXXXXX").string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw Error(ErrorCode::Io, "cannot create temporary file");
    ::close(fd);
    path = pattern;
}

TempFile::~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
}

std::string TempFile::read() const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ShellResult run_shell(const std::string& command, const std::optional<std::filesystem::path>& stdout_path) {
    TempFile diagnostics;
    const pid_t pid = ::fork();
    if (pid < 0) return {false, "could not fork", {}};
    if (pid == 0) {
        const int err = ::open(diagnostics.path.c_str(), O_WRONLY | O_TRUNC);
        if (err >= 0) ::dup2(err, STDERR_FILENO);
        if (stdout_path) {
            const int out = ::open(stdout_path->c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
            if (out >= 0) ::dup2(out, STDOUT_FILENO);
        }
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    int status = 0;
    while (::waitpid(pid, &status, 0) < 0) {
        if (errno != EINTR) return {false, "could not be waited for", {}};
    }
    ShellResult result;
    result.ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    if (!result.ok) {
        result.description = WIFEXITED(status) ? "exited with status " + std::to_string(WEXITSTATUS(status))
                                               : "terminated by a signal";
        result.diagnostics = diagnostics.read();
        if (result.diagnostics.size() > 4096) result.diagnostics.resize(4096);
    }
    return result;
}

}  // namespace docanno
