// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "docanno/error.hpp"
#include "docanno/exporters.hpp"
#include "docanno/pdf.hpp"
#include "docanno/service.hpp"
#include "docanno/store.hpp"

namespace docanno::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << contents;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

/// Parses JSON text, reporting failures as "<name>:<line>:<column>: <reason>".
json parse_json_file(const fs::path& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string reason = e.what();
        if (auto pos = reason.find("syntax error"); pos != std::string::npos) reason = reason.substr(pos);
        throw Error(ErrorCode::InvalidFormat,
                    path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason);
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

std::string format_agreement_table(const AgreementMatrix& m) {
    const std::size_t n = m.annotators.size();
    if (n == 0) return "(no annotators with saved annotations)\n";
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        cells[0][i + 1] = m.annotators[i];
        cells[i + 1][0] = m.annotators[i];
        for (std::size_t j = 0; j < n; ++j) {
            const AgreementReport* r = m.at(i, j);
            if (!r) {
                cells[i + 1][j + 1] = "N/A";
            } else if (!r->textual_accuracy || !r->freeform_ap) {
                cells[i + 1][j + 1] = "n/a";
            } else {
                cells[i + 1][j + 1] = fixed(*r->textual_accuracy, 2) + " / " + fixed(*r->freeform_ap * 100.0, 2);
            }
        }
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c <= n; ++c) {
            if (c > 0) line += " | ";
            line += pad(row[c], width[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string agreement_csv(const AgreementMatrix& m) {
    std::string out = "annotator_gt,annotator_pred,textual_accuracy,freeform_ap,tokens_compared,boxes_compared\n";
    for (const auto& r : m.reports) {
        out += r.ground_truth + "," + r.prediction + ",";
        out += (r.textual_accuracy ? fixed(*r.textual_accuracy, 6) : "n/a") + ",";
        out += (r.freeform_ap ? fixed(*r.freeform_ap, 6) : "n/a") + ",";
        out += std::to_string(r.tokens_compared) + "," + std::to_string(r.boxes_compared) + "\n";
    }
    return out;
}

std::string agreement_json(const AgreementMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.reports) {
        rows.push_back({{"annotator_gt", r.ground_truth},
                        {"annotator_pred", r.prediction},
                        {"textual_accuracy", r.textual_accuracy ? json(*r.textual_accuracy) : json(nullptr)},
                        {"freeform_ap", r.freeform_ap ? json(*r.freeform_ap) : json(nullptr)},
                        {"tokens_compared", r.tokens_compared},
                        {"boxes_compared", r.boxes_compared},
                        {"shared_documents", r.shared_documents}});
    }
    json out{{"annotators", m.annotators},
             {"document_scope", "documents saved by both annotators of each pair"},
             {"pairs", rows}};
    return out.dump(2) + "\n";
}

namespace {

int do_preprocess(ProjectStore& store, const std::vector<std::string>& files, const std::string& processor,
                  std::ostream& out, std::ostream& err) {
    int failures = 0;
    for (const auto& file : files) {
        try {
            const std::string bytes = read_file(file);
            std::string hash;
            if (processor.empty()) {
                std::vector<std::string> warnings;
                hash = store.add_document(bytes, &warnings);
                for (const auto& w : warnings) err << "warning: " << file << ": " << w << "\n";
            } else {
                hash = store.add_document(bytes, run_external_processor(processor, file));
            }
            out << hash << "  " << file << "\n";
        } catch (const Error& e) {
            ++failures;
            err << "error: " << file << ": " << error_code_name(e.code()) << ": " << e.what() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

int do_status(const ProjectStore& store, std::ostream& out) {
    const auto progress = store.project_progress();
    std::size_t width = 9;
    for (const auto& [name, p] : progress) width = std::max(width, name.size());
    auto row = [&](const std::string& name, const std::string& a, const std::string& b, const std::string& c) {
        out << std::left << std::setw(static_cast<int>(width)) << name << std::right << "  " << std::setw(8) << a
            << "  " << std::setw(5) << b << "  " << std::setw(11) << c << "\n";
    };
    row("annotator", "finished", "junk", "in-progress");
    Progress total;
    for (const auto& [name, p] : progress) {
        row(name, std::to_string(p.finished), std::to_string(p.junk), std::to_string(p.in_progress));
        total.finished += p.finished;
        total.junk += p.junk;
        total.in_progress += p.in_progress;
    }
    row("total", std::to_string(total.finished), std::to_string(total.junk), std::to_string(total.in_progress));
    return 0;
}

std::atomic<Service*> g_service{nullptr};

int do_serve(ProjectStore& store, const std::string& host, int port, ServiceOptions options, std::ostream& out) {
    Service service(store, std::move(options));
    const int bound = service.bind(host, port);
    out << "serving " << store.root().string() << " on http://" << host << ":" << bound << "\n" << std::flush;

    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);
    g_service = &service;
    std::thread waiter([signals] {
        int sig = 0;
        sigwait(&signals, &sig);
        if (Service* s = g_service.load()) s->stop();
    });
    service.run();
    g_service = nullptr;
    // Wakes the waiter when the server stopped on its own.
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Administer PDF annotation projects", "docanno"};
    app.require_subcommand(1);
    std::string project = env_or("PAWLS_ROOT", ".");
    app.add_option("--project", project, "Project root directory (env PAWLS_ROOT)");

    auto* preprocess = app.add_subcommand("preprocess", "Extract tokens from PDFs and add them to the project");
    preprocess->alias("add");
    std::vector<std::string> pdfs;
    std::string processor;
    preprocess->add_option("pdfs", pdfs, "PDF files")->required();
    preprocess->add_option("--processor", processor,
                           "External layout command; {input} is the PDF, {output} the layout file");

    auto* assign = app.add_subcommand("assign", "Assign documents to an annotator");
    std::string assignee;
    std::vector<std::string> hashes;
    bool assign_all = false;
    assign->add_option("annotator", assignee, "Annotator id")->required();
    assign->add_option("hashes", hashes, "Document hashes");
    assign->add_flag("--all", assign_all, "Assign every document in the project");

    auto* status = app.add_subcommand("status", "Show per-annotator progress");

    auto* labels = app.add_subcommand("labels", "Show the label schema, or replace it from a file");
    std::string labels_file;
    labels->add_option("config", labels_file, "Schema file in config.json format");

    auto* measure = app.add_subcommand("measure", "Pairwise inter-annotator agreement");
    bool include_predictions = false;
    std::vector<std::string> measured;
    std::string report_path;
    measure->add_flag("--include-predictions", include_predictions, "Also compare against model predictions");
    measure->add_option("--annotator", measured, "Restrict to these annotators (repeatable)");
    measure->add_option("--report", report_path,
                        "Machine-readable report path; .json for JSON, otherwise CSV (default <project>/agreement.csv)");

    auto* exp = app.add_subcommand("export", "Export annotations");
    exp->require_subcommand(1);
    auto* coco = exp->add_subcommand("coco", "COCO dataset plus a page raster manifest");
    auto* tokens = exp->add_subcommand("tokens", "Token label table");
    std::vector<std::string> exported;
    std::string categories, out_path, rasterizer, delimiter = ",";
    double scale = 1.0;
    for (auto* sub : {coco, tokens}) {
        sub->add_option("--annotator", exported, "Annotator to export (repeatable; default all)");
        sub->add_option("--out", out_path, sub == coco ? "Output directory" : "Output file (default stdout)");
    }
    coco->add_option("--categories", categories, "Comma-separated labels to export (default all)");
    coco->add_option("--scale", scale, "Pixels per point (1.0 is 72 dpi)")->check(CLI::PositiveNumber);
    coco->add_option("--rasterizer", rasterizer,
                     "Page capture command; placeholders {pdf} {page} {page1} {scale} {dpi} {output}");
    tokens->add_option("--delimiter", delimiter, "Field delimiter")->check([](const std::string& d) {
        return d.size() == 1 ? std::string() : std::string("delimiter must be a single character");
    });

    auto* prepopulate = app.add_subcommand("prepopulate", "Load model predictions as pre-annotations");
    std::string predictions_file;
    prepopulate->add_option("predictions", predictions_file, "Predictions file keyed by document hash")->required();

    auto* serve = app.add_subcommand("serve", "Run the annotation HTTP service");
    int port = 8000;
    std::string host = "127.0.0.1", header = "X-Annotator", static_dir;
    bool production = false;
    if (const char* p = std::getenv("PAWLS_PORT"); p && *p) port = std::atoi(p);
    serve->add_option("--port", port, "Port (env PAWLS_PORT)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", host, "Listen address");
    serve->add_option("--identity-header", header, "Request header carrying the annotator id");
    serve->add_flag("--production", production, "Require the identity header instead of a development user");
    serve->add_option("--static", static_dir, "Directory with the browser client served under /");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << failed->help();
        return 2;
    }

    try {
        ProjectStore store(project);
        if (*preprocess) return do_preprocess(store, pdfs, processor, out, err);
        if (*assign) {
            if (assign_all) {
                const auto all = store.documents();
                hashes.insert(hashes.end(), all.begin(), all.end());
            }
            const auto before = store.assignments(assignee).size();
            const auto after = store.assign(assignee, hashes);
            out << "assigned " << (after.size() - before) << " new document(s) to " << assignee << " ("
                << after.size() << " total)\n";
            return 0;
        }
        if (*status) return do_status(store, out);
        if (*labels) {
            if (!labels_file.empty()) store.set_schema(schema_from_json(parse_json_file(labels_file)));
            out << schema_to_json(store.schema()).dump(2) << "\n";
            return 0;
        }
        if (*measure) {
            std::vector<std::string> who = measured;
            if (who.empty())
                for (const auto& a : store.annotators())
                    if (!store.saved_documents(a).empty()) who.push_back(a);
            const std::string reserved(kPredictionsAnnotator);
            if (include_predictions && !store.saved_documents(reserved).empty() &&
                std::find(who.begin(), who.end(), reserved) == who.end())
                who.push_back(reserved);
            const AgreementMatrix matrix = agreement_matrix(store, who);
            out << format_agreement_table(matrix);
            const fs::path report = report_path.empty() ? store.root() / "agreement.csv" : fs::path(report_path);
            write_file(report, report.extension() == ".json" ? agreement_json(matrix) : agreement_csv(matrix));
            out << "report written to " << report.string() << "\n";
            return 0;
        }
        if (*coco) {
            CocoOptions options;
            options.annotators = exported.empty() ? store.annotators() : exported;
            options.categories = split_list(categories);
            options.scale = scale;
            CocoExport result = export_coco(store, options);
            const fs::path dir = out_path.empty() ? fs::path("coco") : fs::path(out_path);
            write_file(dir / "annotations.json", coco_to_json(result.dataset).dump(2) + "\n");
            write_file(dir / "manifest.json", manifest_to_json(result.manifest).dump(2) + "\n");
            if (rasterizer.empty()) {
                result.warnings.push_back("no rasterizer configured; page captures listed in manifest.json only");
            } else {
                rasterize(store, result.manifest, rasterizer, dir / "images");
            }
            for (const auto& w : result.warnings) err << "warning: " << w << "\n";
            out << "exported " << result.dataset.annotations.size() << " annotation(s) on "
                << result.dataset.images.size() << " image(s) to " << dir.string() << "\n";
            return 0;
        }
        if (*tokens) {
            const auto rows = export_token_table(store, exported.empty() ? store.annotators() : exported);
            if (out_path.empty()) {
                write_token_table(out, rows, delimiter[0]);
            } else {
                std::ostringstream ss;
                write_token_table(ss, rows, delimiter[0]);
                write_file(out_path, ss.str());
                out << "wrote " << rows.size() << " row(s) to " << out_path << "\n";
            }
            return 0;
        }
        if (*prepopulate) {
            const PrepopulateResult result = store.prepopulate(parse_json_file(predictions_file));
            out << "populated " << result.populated << " document" << (result.populated == 1 ? "" : "s") << "\n";
            for (const auto& f : result.failures) {
                err << "error: " << f.document << ": " << f.message << "\n";
            }
            return result.failures.empty() ? 0 : 1;
        }
        if (*serve) {
            ServiceOptions options;
            options.identity_header = header;
            options.development = !production;
            if (!static_dir.empty()) options.static_dir = static_dir;
            return do_serve(store, host, port, options, out);
        }
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace docanno::cli
