// SPDX-License-Identifier: Apache-2.0
#include "docanno/error.hpp"
#include "docanno/pdf.hpp"
#include "pdf/content.hpp"
#include "pdf/document.hpp"
#include "process.hpp"

namespace docanno {

ExtractionResult extract_token_layout(std::string_view pdf_bytes) {
    pdf::Document doc(pdf_bytes);
    ExtractionResult result;
    const auto& pages = doc.pages();
    result.pages.reserve(pages.size());
    for (std::size_t i = 0; i < pages.size(); ++i) {
        pdf::PageInterpreter interp(doc, pages[i], static_cast<int>(i));
        PageTokenLayout layout;
        layout.tokens = interp.run();
        layout.page = PageInfo{static_cast<int>(i), interp.view_size().width, interp.view_size().height};
        if (!(layout.page.width > 0.0) || !(layout.page.height > 0.0)) {
            throw Error(ErrorCode::MalformedPdf, "page " + std::to_string(i) + " has an empty media box");
        }
        result.warnings.insert(result.warnings.end(), interp.warnings().begin(), interp.warnings().end());
        result.pages.push_back(std::move(layout));
    }
    return result;
}

DocumentLayout run_external_processor(const std::string& command_template, const std::filesystem::path& pdf_path) {
    if (command_template.find("{input}") == std::string::npos) {
        throw Error(ErrorCode::ProcessorFailed, "processor template has no {input} placeholder");
    }
    TempFile output;
    const bool explicit_output = command_template.find("{output}") != std::string::npos;
    std::string command = command_template;
    replace_all(command, "{input}", shell_quote(pdf_path.string()));
    replace_all(command, "{output}", shell_quote(output.path.string()));
    const ShellResult run = run_shell(command, explicit_output ? std::nullopt : std::optional(output.path));
    if (!run.ok) {
        throw Error(ErrorCode::ProcessorFailed,
                    "processor " + run.description + (run.diagnostics.empty() ? "" : ": " + run.diagnostics));
    }
    return parse_layout(output.read());
}

}  // namespace docanno
