#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grt/cli.hpp"
#include "grt/dk_pentagon.hpp"
#include "grt/five_cycle.hpp"
#include "grt/group_lab.hpp"
#include "grt/grt_ops.hpp"
#include "grt/lie_text.hpp"
#include "grt/torsor_lab.hpp"

namespace py = pybind11;
using namespace grt;

namespace {

FreeLiePtr lie2(int max_degree) { return FreeLie::create({"x", "y"}, max_degree); }

LieSeries parse2(const std::string& text, int max_degree) { return parse_lie(text, lie2(max_degree)); }

std::string lab(const std::string& kind, const std::string& id, std::uint64_t seed,
                const std::string& group, const std::string& target, const std::string& pairing,
                int arity, int samples, int max_degree, bool permissive) {
  LabConfig cfg;
  cfg.seed = seed;
  cfg.group = group;
  cfg.target = target;
  cfg.pairing = pairing;
  cfg.arity = arity;
  cfg.samples = samples;
  cfg.max_degree = max_degree;
  cfg.permissive = permissive;
  LabOutcome o;
  if (kind == "group") o = run_group_lab(id, cfg);
  else if (kind == "torsor") o = run_torsor_lab(id, cfg);
  else throw std::invalid_argument("lab kind must be 'group' or 'torsor'");
  nlohmann::json j = o.report.to_json();
  j["ok"] = o.ok;
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string& text, const std::vector<std::string>& alphabet, int max_degree) {
    return format_lie(parse_lie(text, FreeLie::create(alphabet, max_degree)));
  }, py::arg("text"), py::arg("alphabet"), py::arg("max_degree"));
  m.def("to_json", [](const std::string& text, const std::vector<std::string>& alphabet, int max_degree) {
    return to_json(parse_lie(text, FreeLie::create(alphabet, max_degree))).dump();
  }, py::arg("text"), py::arg("alphabet"), py::arg("max_degree"));
  m.def("from_json", [](const std::string& doc) { return format_lie(lie_from_json(nlohmann::json::parse(doc))); });

  m.def("project", [](const std::string& which, const std::string& text, int max_degree) {
    const LieSeries phi = parse2(text, max_degree);
    if (which == "hexagon") return format_lie(hexagon_project(phi));
    if (which == "antihexagon") return format_lie(antihexagon_project(phi));
    if (which == "skew") return format_lie(skew_symmetrize(phi));
    throw std::invalid_argument("unknown projector: " + which);
  }, py::arg("which"), py::arg("text"), py::arg("max_degree"));
  m.def("residual", [](const std::string& which, const std::string& text, int max_degree) {
    const LieSeries phi = parse2(text, max_degree);
    if (which == "pentagon") {
      const auto t4 = drinfeld_kohno(4, max_degree);
      return format_lie(t4->lift(pentagon_residual(*t4, phi)));
    }
    if (which == "hexagon") return format_lie(hexagon_residual(phi));
    if (which == "antihexagon") return format_lie(antihexagon_residual(phi));
    if (which == "skew") return format_lie(skew_residual(phi));
    if (which == "eq3") return format_lie(drinfeld_eq3_residual(phi));
    throw std::invalid_argument("unknown residual: " + which);
  }, py::arg("which"), py::arg("text"), py::arg("max_degree"));
  m.def("ihara", [](const std::string& f, const std::string& g, int max_degree) {
    return format_lie(ihara_bracket(parse2(f, max_degree), parse2(g, max_degree)));
  }, py::arg("f"), py::arg("g"), py::arg("max_degree"));
  m.def("dk_dimensions", [](int n, int max_degree) { return drinfeld_kohno(n, max_degree)->dimensions(); },
        py::arg("n"), py::arg("max_degree"));

  m.def("group_lab_ids", &group_lab_ids);
  m.def("torsor_lab_ids", &torsor_lab_ids);
  m.def("lab", &lab, py::arg("kind"), py::arg("id"), py::arg("seed") = 1, py::arg("group") = "",
        py::arg("target") = "", py::arg("pairing") = "", py::arg("arity") = 0, py::arg("samples") = 0,
        py::arg("max_degree") = 0, py::arg("permissive") = false,
        py::call_guard<py::gil_scoped_release>());

  m.def("fp_cycle", [](int p) { return fp_cycle(p).to_json().dump(); });
  m.def("dilog", &dilog);
  m.def("bloch_wigner", &bloch_wigner);
  m.def("bloch_wigner_sweep", [](int samples, std::uint64_t seed, double tolerance, double margin, int jobs) {
    return bloch_wigner_sweep(samples, seed, tolerance, margin, jobs).to_json().dump();
  }, py::arg("samples"), py::arg("seed"), py::arg("tolerance") = 1e-10, py::arg("margin") = 1e-3,
     py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"grtlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
