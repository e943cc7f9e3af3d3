// SPDX-License-Identifier: Apache-2.0
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include "docanno/annotation.hpp"
#include "docanno/error.hpp"
#include "docanno/exporters.hpp"
#include "docanno/geometry.hpp"
#include "docanno/layout.hpp"
#include "docanno/metrics.hpp"
#include "docanno/pdf.hpp"
#include "docanno/store.hpp"
#include "docanno/synthetic_pdf.hpp"

namespace py = pybind11;
using namespace docanno;
using nlohmann::json;

namespace {

// Dicts and lists cross the boundary as JSON text.
py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json from_py(py::handle obj) {
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

DocumentLayout layout_arg(py::handle obj) { return layout_from_json(from_py(obj)); }
AnnotationSet set_arg(py::handle obj) { return annotation_set_from_json(from_py(obj)); }

py::tuple bounds_tuple(const Bounds& b) { return py::make_tuple(b.left, b.top, b.right, b.bottom); }

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"code", v.code}, {"location", v.location}, {"message", v.message}});
    return out;
}

json report_json(const AgreementReport& r) {
    json j = {{"ground_truth", r.ground_truth},
              {"prediction", r.prediction},
              {"textual_accuracy", nullptr},
              {"freeform_ap", nullptr},
              {"tokens_compared", r.tokens_compared},
              {"boxes_compared", r.boxes_compared},
              {"shared_documents", r.shared_documents}};
    if (r.textual_accuracy) j["textual_accuracy"] = *r.textual_accuracy;
    if (r.freeform_ap) j["freeform_ap"] = *r.freeform_ap;
    return j;
}

std::vector<double> thresholds_or_default(std::optional<std::vector<double>> t) {
    return t ? std::move(*t) : default_iou_thresholds();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Token extraction, annotation storage and agreement metrics for PDF layout annotation.";

    static py::handle error_type = py::exception<Error>(m, "DocannoError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = std::string(error_code_name(e.code()));
            exc.attr("violations") = to_py(violations_json(e.violations()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Bounds>(m, "Bounds")
        .def(py::init<>())
        .def(py::init([](double l, double t, double r, double b) { return Bounds{l, t, r, b}; }),
             py::arg("left"), py::arg("top"), py::arg("right"), py::arg("bottom"))
        .def_readwrite("left", &Bounds::left)
        .def_readwrite("top", &Bounds::top)
        .def_readwrite("right", &Bounds::right)
        .def_readwrite("bottom", &Bounds::bottom)
        .def_property_readonly("width", &Bounds::width)
        .def_property_readonly("height", &Bounds::height)
        .def_property_readonly("area", &Bounds::area)
        .def("as_tuple", &bounds_tuple)
        .def(py::self == py::self)
        .def("__repr__", [](const Bounds& b) {
            return "Bounds(" + std::to_string(b.left) + ", " + std::to_string(b.top) + ", " +
                   std::to_string(b.right) + ", " + std::to_string(b.bottom) + ")";
        });

    m.def("iou", &iou, py::arg("a"), py::arg("b"));
    m.def("intersection_area", &intersection_area, py::arg("a"), py::arg("b"));
    m.def(
        "rescale_bounds",
        [](const Bounds& b, std::pair<double, double> from, std::pair<double, double> to) {
            return rescale_bounds(b, {from.first, from.second}, {to.first, to.second});
        },
        py::arg("bounds"), py::arg("from_size"), py::arg("to_size"));

    m.def(
        "extract_tokens",
        [](py::bytes pdf) {
            const std::string bytes = pdf;
            ExtractionResult r;
            {
                py::gil_scoped_release release;
                r = extract_token_layout(bytes);
            }
            return py::make_tuple(to_py(layout_to_json(r.pages)), r.warnings);
        },
        py::arg("pdf"), "Returns (layout, warnings) for the PDF bytes.");

    m.def(
        "select_tokens",
        [](py::handle layout, int page, const Bounds& drag) {
            const DocumentLayout doc = layout_arg(layout);
            if (page < 0 || page >= static_cast<int>(doc.size())) throw py::index_error("page out of range");
            return select_tokens(doc[page], drag);
        },
        py::arg("layout"), py::arg("page"), py::arg("drag"));

    m.def(
        "snap_bounds",
        [](py::handle layout, const std::vector<std::pair<int, int>>& refs, double padding) {
            const DocumentLayout doc = layout_arg(layout);
            std::vector<TokenRef> tr;
            for (auto [p, t] : refs) {
                if (p < 0 || p >= static_cast<int>(doc.size()) || t < 0 ||
                    t >= static_cast<int>(doc[p].tokens.size()))
                    throw Error(ErrorCode::LayoutMismatch, "token ref does not resolve");
                tr.push_back({p, t});
            }
            if (tr.empty()) throw Error(ErrorCode::EmptySelection, "no tokens selected");
            return snap_bounds(doc, tr, padding);
        },
        py::arg("layout"), py::arg("refs"), py::arg("padding") = kDefaultPadding);

    m.def(
        "validate",
        [](py::handle set, py::handle layout, py::handle schema) {
            return to_py(
                violations_json(validate_annotation_set(set_arg(set), layout_arg(layout), schema_from_json(from_py(schema)))));
        },
        py::arg("annotations"), py::arg("layout"), py::arg("schema"));

    m.def(
        "token_accuracy",
        [](py::handle a, py::handle b, py::handle layout) {
            return token_accuracy(set_arg(a), set_arg(b), layout_arg(layout));
        },
        py::arg("a"), py::arg("b"), py::arg("layout"));

    m.def(
        "average_precision",
        [](py::handle gt, py::handle pred, const std::vector<std::string>& categories,
           std::optional<std::vector<double>> thresholds) {
            const auto t = thresholds_or_default(std::move(thresholds));
            return average_precision(set_arg(gt), set_arg(pred), categories, t);
        },
        py::arg("ground_truth"), py::arg("prediction"), py::arg("categories"), py::arg("iou_thresholds") = py::none());

    m.def("default_iou_thresholds", &default_iou_thresholds);

    m.def(
        "synthetic_pdf",
        [](const std::vector<std::string>& lines, double width, double height, int rotate) {
            SyntheticPage page{width, height, rotate, {}, {}};
            double y = height - 72.0;
            for (const auto& line : lines) {
                SyntheticTextRun run;
                run.y = y;
                run.text = line;
                page.runs.push_back(run);
                y -= 24.0;
            }
            return py::bytes(write_synthetic_pdf({page}));
        },
        py::arg("lines"), py::arg("width") = 612.0, py::arg("height") = 792.0, py::arg("rotate") = 0,
        "One-page Helvetica 12 pt PDF, one line per entry, 24 pt apart from the top margin.");

    py::class_<ProjectStore>(m, "Project")
        .def(py::init<std::filesystem::path>(), py::arg("root"))
        .def_property_readonly("root", &ProjectStore::root)
        .def_property(
            "schema", [](const ProjectStore& s) { return to_py(schema_to_json(s.schema())); },
            [](ProjectStore& s, py::handle j) { s.set_schema(schema_from_json(from_py(j))); })
        .def(
            "add_document",
            [](ProjectStore& s, py::bytes pdf) {
                const std::string bytes = pdf;
                py::gil_scoped_release release;
                return s.add_document(bytes);
            },
            py::arg("pdf"))
        .def("documents", &ProjectStore::documents)
        .def("layout", [](const ProjectStore& s, const std::string& h) { return to_py(layout_to_json(*s.layout(h))); })
        .def("assign", &ProjectStore::assign, py::arg("annotator"), py::arg("hashes"))
        .def("assignments", &ProjectStore::assignments, py::arg("annotator"))
        .def("annotators", &ProjectStore::annotators)
        .def(
            "save",
            [](ProjectStore& s, const std::string& who, const std::string& h, py::handle set) {
                const SaveResult r = s.save_annotations(who, h, set_arg(set));
                json j = annotation_set_to_json(r.annotations);
                j["revision"] = r.revision;
                return to_py(j);
            },
            py::arg("annotator"), py::arg("hash"), py::arg("annotations"))
        .def(
            "load",
            [](const ProjectStore& s, const std::string& who, const std::string& h) {
                return to_py(annotation_set_to_json(s.load_annotations(who, h)));
            },
            py::arg("annotator"), py::arg("hash"))
        .def("revision", &ProjectStore::revision, py::arg("annotator"), py::arg("hash"))
        .def(
            "prepopulate",
            [](ProjectStore& s, py::handle predictions) {
                const PrepopulateResult r = s.prepopulate(from_py(predictions));
                json failures = json::array();
                for (const auto& f : r.failures)
                    failures.push_back(
                        {{"document", f.document}, {"message", f.message}, {"violations", violations_json(f.violations)}});
                return to_py({{"populated", r.populated}, {"failures", failures}});
            },
            py::arg("predictions"))
        .def(
            "set_status",
            [](ProjectStore& s, const std::string& who, const std::string& h, py::handle status) {
                return to_py(status_to_json(s.set_status(who, h, status_from_json(from_py(status)))));
            },
            py::arg("annotator"), py::arg("hash"), py::arg("status"))
        .def(
            "status",
            [](const ProjectStore& s, const std::string& who, const std::string& h) {
                return to_py(status_to_json(s.status(who, h)));
            },
            py::arg("annotator"), py::arg("hash"))
        .def(
            "agreement",
            [](const ProjectStore& s, const std::vector<std::string>& annotators) {
                AgreementMatrix mx;
                {
                    py::gil_scoped_release release;
                    mx = agreement_matrix(s, annotators.empty() ? s.annotators() : annotators);
                }
                json reports = json::array();
                for (const auto& r : mx.reports) reports.push_back(report_json(r));
                return to_py({{"annotators", mx.annotators}, {"reports", reports}});
            },
            py::arg("annotators") = std::vector<std::string>{})
        .def(
            "export_coco",
            [](const ProjectStore& s, const std::vector<std::string>& annotators,
               const std::vector<std::string>& categories, double scale) {
                const CocoExport e = export_coco(s, {annotators, categories, scale});
                return py::make_tuple(to_py(coco_to_json(e.dataset)), to_py(manifest_to_json(e.manifest)), e.warnings);
            },
            py::arg("annotators"), py::arg("categories") = std::vector<std::string>{}, py::arg("scale") = 1.0);
}
