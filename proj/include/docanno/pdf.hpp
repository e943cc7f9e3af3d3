// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "docanno/layout.hpp"

namespace docanno {

struct ExtractionResult {
    DocumentLayout pages;
    /// Runs that were skipped (Type 3 fonts, unsupported filters, off-page text).
    std::vector<std::string> warnings;
};

/// Interprets every page's content stream and returns one token layout per page.
/// Throws Error(MalformedPdf) or Error(EncryptedPdf).
ExtractionResult extract_token_layout(std::string_view pdf_bytes);

/// Runs an external pre-processor and validates the layout file it writes.
///
/// `{input}` in the template is replaced by the shell-quoted PDF path. When the
/// template contains `{output}` that placeholder receives a temporary file path
/// the processor must write; otherwise the layout is read from standard output.
/// Throws Error(ProcessorFailed) on a nonzero exit and Error(InvalidLayout) when
/// the produced file fails validation.
DocumentLayout run_external_processor(const std::string& command_template,
                                      const std::filesystem::path& pdf_path);

}  // namespace docanno
