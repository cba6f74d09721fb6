#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corkcalc/alexander.hpp"
#include "corkcalc/builders.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"
#include "corkcalc/moves.hpp"
#include "corkcalc/scenario.hpp"
#include "corkcalc/script.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace corkcalc;

namespace {

long long small(const Int& n) { return n.convert_to<long long>(); }

std::string first_component(const FramedLinkDiagram& d) {
    if (d.components.empty()) throw Error("UnknownComponent", "diagram has no components");
    return d.components[0].id;
}

py::dict outcome_dict(const ScriptOutcome& out) {
    py::dict r;
    r["ok"] = out.ok;
    r["diagram"] = out.diagram;
    r["error"] = out.error;
    r["failed_step"] = out.ok ? py::object(py::none()) : py::object(py::int_(out.failed_step));
    py::list steps;
    for (const TraceEntry& te : out.trace.entries) {
        py::dict s;
        s["step"] = te.step;
        s["pre_hash"] = te.pre_hash;
        s["post_hash"] = te.post_hash;
        s["h1_pre"] = te.pre.h1.to_string();
        s["h1_post"] = te.post.h1.to_string();
        steps.append(std::move(s));
    }
    r["steps"] = std::move(steps);
    return r;
}

}  // namespace

PYBIND11_MODULE(_corkcalc, m) {
    m.doc() = "Exact calculator for framed-link surgery diagrams";

    py::register_exception<Error>(m, "Error");

    py::class_<FramedLinkDiagram>(m, "Diagram")
        .def_static("parse", &parse_fld, py::arg("text"),
                    "Parse the plain-text diagram format.")
        .def("serialize", &serialize_fld, "Canonical plain-text form.")
        .def("validate",
             [](const FramedLinkDiagram& d) { return d.validate(); },
             "List of violations; empty means the diagram is well formed.")
        .def_property_readonly("hash", &diagram_hash)
        .def_property_readonly("crossings",
                               [](const FramedLinkDiagram& d) { return d.crossings.size(); })
        .def_property_readonly("components",
                               [](const FramedLinkDiagram& d) {
                                   std::vector<std::tuple<std::string, std::string, std::string>>
                                       out;
                                   for (const auto& c : d.components)
                                       out.emplace_back(c.id, c.label, c.coeff.to_string());
                                   return out;
                               })
        .def("__eq__",
             [](const FramedLinkDiagram& a, const FramedLinkDiagram& b) { return a == b; })
        .def("__repr__", [](const FramedLinkDiagram& d) {
            return "<Diagram components=" + std::to_string(d.components.size()) +
                   " crossings=" + std::to_string(d.crossings.size()) + " hash=" +
                   diagram_hash(d) + ">";
        });

    m.def("parse", &parse_fld, py::arg("text"));
    m.def("twist_knot",
          [](int r, int s) { return twist_knot(r, s, {"k", "", SurgeryCoefficient::ornament()}); },
          py::arg("r"), py::arg("s"), "Double twist knot in the genus-one template.");

    m.def("alexander",
          [](const FramedLinkDiagram& d, std::optional<std::string> component) {
              const std::string c = component ? *component : first_component(d);
              return fox_alexander(d, c, false).to_string();
          },
          py::arg("diagram"), py::arg("component") = py::none(),
          "Normalized polynomial of one component, other components deleted.");

    m.def("h1", [](const FramedLinkDiagram& d) { return h1_surgery(d).to_string(); },
          py::arg("diagram"), "First homology of the surgered manifold.");

    m.def("linking_number",
          [](const FramedLinkDiagram& d, const std::string& a, const std::string& b) {
              return small(linking_number(d, a, b));
          },
          py::arg("diagram"), py::arg("a"), py::arg("b"));

    m.def("linking_matrix",
          [](const FramedLinkDiagram& d) {
              const LinkingPresentation p = linking_matrix(d);
              std::vector<std::vector<long long>> rows;
              for (std::size_t i = 0; i < p.linking.rows(); ++i) {
                  std::vector<long long> row;
                  for (std::size_t j = 0; j < p.linking.cols(); ++j)
                      row.push_back(small(p.linking.at(i, j)));
                  rows.push_back(std::move(row));
              }
              return py::make_tuple(p.order, rows);
          },
          py::arg("diagram"), "Component order and the symmetric linking matrix.");

    m.def("apply_script",
          [](const FramedLinkDiagram& d, const std::string& text) {
              return outcome_dict(apply_script(d, parse_script(text)));
          },
          py::arg("diagram"), py::arg("script"),
          "Run a move script; aborts at the first failing step.");

    m.def("twist_family",
          [](int lo, int hi) {
              if (lo > hi) throw Error("BadRange", "empty family range");
              std::vector<std::string> out;
              for (int k = lo; k <= hi; ++k)
                  out.push_back(
                      fox_alexander(twist_knot(k, -1, {"k", "", SurgeryCoefficient::ornament()}),
                                    "k")
                          .to_string());
              return out;
          },
          py::arg("lo") = -10, py::arg("hi") = 10,
          "Normalized polynomials of the clasp twist family.");

    m.def("scenario_ids", &scenario_ids);
    m.def("run_scenario",
          [](const std::string& id) { return scenario_report_json(run_scenario(id)); },
          py::arg("id"), "Run one end-to-end scenario; returns the JSON report.");
    m.def("run_scenario_text",
          [](const std::string& id) { return scenario_report_text(run_scenario(id)); },
          py::arg("id"));

    m.def("fixtures_dir", &fixtures_dir);
    m.def("load_fixture", &load_fixture_diagram, py::arg("name"));
}
