#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdalg/axioms.hpp"
#include "pdalg/canonical.hpp"
#include "pdalg/cli.hpp"
#include "pdalg/errors.hpp"
#include "pdalg/expr_io.hpp"
#include "pdalg/geometry.hpp"
#include "pdalg/io_json.hpp"
#include "pdalg/one_dim.hpp"

namespace py = pybind11;
using namespace pdalg;

namespace {

ReportFormat format_of(const std::string& f) {
  if (f == "text") return ReportFormat::text;
  if (f == "machine") return ReportFormat::machine;
  throw py::value_error("format must be 'text' or 'machine'");
}

py::dict entry_dict(const CheckEntry& e) {
  py::dict d;
  d["name"] = e.name;
  d["status"] = to_string(e.status);
  d["cases"] = e.cases;
  d["location"] = e.location;
  d["residual"] = e.residual_text;
  d["note"] = e.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Poisson differential algebras";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  py::class_<Chart>(m, "Chart")
      .def(py::init<std::vector<std::string>>(), py::arg("coords"))
      .def(py::init<std::vector<std::string>, const std::map<std::string, std::string>&>(), py::arg("coords"),
           py::arg("pairing"))
      .def_property_readonly("names", &Chart::names)
      .def_property_readonly("dim", &Chart::dim)
      .def_property_readonly("is_complex", &Chart::is_complex)
      .def("__eq__", [](const Chart& a, const Chart& b) { return a == b; });

  m.def("canonical_expr", [](const std::string& text, const Chart& c) { return to_string(parse_expr(text, c), c); },
        py::arg("text"), py::arg("chart"), "Parse an expression and print its canonical form.");
  m.def("canonical_form", [](const std::string& text, const Chart& c) { return to_string(parse_form(text, c), c); },
        py::arg("text"), py::arg("chart"));

  py::class_<VerificationReport>(m, "Report")
      .def_property_readonly("passed", &VerificationReport::passed)
      .def("entries",
           [](const VerificationReport& r) {
             py::list out;
             for (const auto& e : r.sorted()) out.append(entry_dict(e));
             return out;
           })
      .def("get", [](const VerificationReport& r, const std::string& name) { return entry_dict(r.get(name)); })
      .def("render", [](const VerificationReport& r, const std::string& f) { return render_report(r, format_of(f)); },
           py::arg("format") = "text");

  py::class_<SamplePlan>(m, "SamplePlan")
      .def(py::init([](unsigned degree, unsigned count, std::uint64_t seed) { return SamplePlan{degree, count, seed}; }),
           py::arg("max_degree") = 2, py::arg("count") = 25, py::arg("seed") = 0)
      .def_readwrite("max_degree", &SamplePlan::max_degree)
      .def_readwrite("count", &SamplePlan::count)
      .def_readwrite("seed", &SamplePlan::seed);

  py::class_<PoissonStructure>(m, "Structure")
      .def_static("from_json", &read_structure, py::arg("text"))
      .def("to_json", &write_structure)
      .def_property_readonly("chart", &PoissonStructure::chart)
      .def("P", [](const PoissonStructure& s, std::size_t a, std::size_t b) { return to_string(s.P(a, b), s.chart()); })
      .def("bracket",
           [](const PoissonStructure& s, const std::string& f, const std::string& g) {
             return to_string(s.bracket(parse_form(f, s.chart()), parse_form(g, s.chart())), s.chart());
           },
           py::arg("f"), py::arg("g"))
      .def("verify_axioms", [](const PoissonStructure& s, const SamplePlan& p) { return verify_axioms(s, p); },
           py::arg("plan") = SamplePlan{})
      .def("check_integrability", &check_integrability);

  py::class_<CanonicalConstants>(m, "Constants")
      .def_static("from_json", [](const std::string& text) { return read_constants(text).constants; })
      .def("to_json", [](const CanonicalConstants& c) { return write_constants(c); })
      .def_property_readonly("dim", &CanonicalConstants::dim)
      .def("check", &check_constants)
      .def("build", [](const CanonicalConstants& c) { return build_canonical(c).structure; });

  py::module_ od = m.def_submodule("onedim", "The one-dimensional complex case");
  auto triple = [](const std::string& a, const std::string& b, const std::string& c) { return parse_triple(a, b, c); };
  od.def("classify",
         [triple](const std::string& a, const std::string& b, const std::string& c) {
           return to_string(classify(triple(a, b, c)));
         },
         py::arg("a"), py::arg("b"), py::arg("c"));
  od.def("curvature",
         [triple](const std::string& a, const std::string& b, const std::string& c) {
           return to_string(gaussian_curvature(triple(a, b, c)), one_dim_chart());
         },
         py::arg("a"), py::arg("b"), py::arg("c"));
  od.def("build",
         [triple](const std::string& a, const std::string& b, const std::string& c) {
           return build_one_dim(triple(a, b, c));
         },
         py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "run",
      [](const std::string& command, const std::string& input, const std::map<std::string, std::string>& params,
         const SamplePlan& plan, const std::string& format, const std::string& emit) {
        CommandSpec spec{command, input, plan, format_of(format), params, emit};
        CommandResult r = run(spec);
        return py::make_tuple(r.status, r.output, r.error);
      },
      py::arg("command"), py::arg("input") = "", py::arg("params") = std::map<std::string, std::string>{},
      py::arg("plan") = SamplePlan{}, py::arg("format") = "text", py::arg("emit") = "",
      "Run a batch command; returns (exit status, output, error text).");
}
