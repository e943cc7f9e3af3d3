// SPDX-License-Identifier: Apache-2.0
#include "docanno/error.hpp"

namespace docanno {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedPdf: return "malformed-pdf";
        case ErrorCode::EncryptedPdf: return "encrypted-pdf";
        case ErrorCode::UnsupportedFeature: return "unsupported-feature";
        case ErrorCode::ProcessorFailed: return "processor-failed";
        case ErrorCode::InvalidLayout: return "invalid-layout";
        case ErrorCode::EmptySelection: return "empty-selection";
        case ErrorCode::InvalidDimensions: return "invalid-dimensions";
        case ErrorCode::LayoutMismatch: return "layout-mismatch";
        case ErrorCode::UnknownCategory: return "unknown-category";
        case ErrorCode::NoSharedDocuments: return "no-shared-documents";
        case ErrorCode::UnknownDocument: return "unknown-document";
        case ErrorCode::NotAssigned: return "not-assigned";
        case ErrorCode::ValidationFailed: return "validation-failed";
        case ErrorCode::InvalidStatus: return "invalid-status";
        case ErrorCode::UnknownAnnotator: return "unknown-annotator";
        case ErrorCode::InvalidIdentity: return "invalid-identity";
        case ErrorCode::InvalidFormat: return "invalid-format";
        case ErrorCode::Io: return "io-error";
    }
    return "error";
}

}  // namespace docanno
