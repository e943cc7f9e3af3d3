// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace docanno {

enum class ErrorCode {
    MalformedPdf,
    EncryptedPdf,
    UnsupportedFeature,
    ProcessorFailed,
    InvalidLayout,
    EmptySelection,
    InvalidDimensions,
    LayoutMismatch,
    UnknownCategory,
    NoSharedDocuments,
    UnknownDocument,
    NotAssigned,
    ValidationFailed,
    InvalidStatus,
    UnknownAnnotator,
    InvalidIdentity,
    InvalidFormat,
    Io,
};

/// Machine-readable kebab-case name, e.g. "malformed-pdf".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace docanno
