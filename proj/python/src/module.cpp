#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "chroma/chromatic.hpp"
#include "chroma/combinat.hpp"
#include "chroma/corrects.hpp"
#include "chroma/errors.hpp"
#include "chroma/ghom.hpp"
#include "chroma/lgvgrid.hpp"
#include "chroma/suites.hpp"
#include "chroma/symfunc.hpp"

namespace py = pybind11;
using namespace chroma;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

UnitIntervalOrder uio(const std::vector<int>& next) { return UnitIntervalOrder::from_next(next); }

// {"2,1": 1, ...}, with big or fractional values as strings
py::object coefficients(const SymFunc& f) { return to_python(coefficients_json(f)); }

py::object polynomial(const Polynomial& p) { return to_python(to_json(p)); }

}  // namespace

PYBIND11_MODULE(_chroma, m) {
  m.doc() = "Chromatic symmetric functions of unit interval orders";

  py::register_exception<Error>(m, "ChromaError", PyExc_ValueError);

  m.def("enumerate_uios", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& u : enumerate_uios(n)) out.push_back(u.next_vector());
    return out;
  }, py::arg("n"));
  m.def("uio_family", [](int n, int k) { return uio_family(n, k).next_vector(); }, py::arg("n"), py::arg("k"));
  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
  }, py::arg("n"));

  m.def("chromatic", [](const std::vector<int>& next, const std::string& basis) {
    const SymFunc x = chromatic_symmetric_stable(inc_graph(uio(next)));
    return coefficients(convert(x, parse_basis(basis)));
  }, py::arg("next"), py::arg("basis") = "e",
     "X of the incomparability graph in the given basis (e, m, p or s).");
  m.def("positivity_report", [](const std::vector<int>& next) {
    ChromaticOptions opts;
    opts.method = ChromaticMethod::stable_partitions;
    return to_python(to_json(positivity_report(inc_graph(uio(next)), opts)));
  }, py::arg("next"));
  m.def("sinks", [](const std::vector<int>& next) {
    std::map<int, std::string> out;
    for (const auto& [j, c] : acyclic_orientation_sinks(inc_graph(uio(next)))) out[j] = to_string(c);
    return out;
  }, py::arg("next"));

  m.def("convert", [](const std::string& from, const std::vector<int>& lambda, const std::string& to) {
    return coefficients(convert(SymFunc::element(parse_basis(from), Partition(lambda)), parse_basis(to)));
  }, py::arg("from_basis"), py::arg("partition"), py::arg("to_basis"));

  m.def("elementary_g", [](const std::vector<int>& next, int i) {
    return polynomial(elementary_g(GAnalogueContext(uio(next)), i));
  }, py::arg("next"), py::arg("i"));
  m.def("power_g", [](const std::vector<int>& next, int k) {
    return polynomial(power_g(GAnalogueContext(uio(next)), k));
  }, py::arg("next"), py::arg("k"));
  m.def("schur_g", [](const std::vector<int>& next, const std::vector<int>& lambda) {
    return polynomial(schur_g(GAnalogueContext(uio(next)), Partition(lambda)));
  }, py::arg("next"), py::arg("partition"));
  m.def("schur_via_lgv", [](const std::vector<int>& next, const std::vector<int>& lambda) {
    return polynomial(schur_via_lgv(uio(next), Partition(lambda)));
  }, py::arg("next"), py::arg("partition"));

  m.def("is_correct", [](const std::vector<int>& next, const std::vector<int>& seq) {
    return is_correct(uio(next), seq);
  }, py::arg("next"), py::arg("seq"));
  m.def("enumerate_corrects", [](const std::vector<int>& next, int k) {
    return enumerate_corrects(uio(next), k);
  }, py::arg("next"), py::arg("k"));
  m.def("power_via_corrects", [](const std::vector<int>& next, int k) {
    return polynomial(power_via_corrects(uio(next), k));
  }, py::arg("next"), py::arg("k"));
  m.def("covering_corrects_count", [](const std::vector<int>& next) {
    return to_string(covering_corrects_count(uio(next)));
  }, py::arg("next"));

  m.def("suites", [] { return suite_names(); });
  m.def("verify", [](const std::string& suite, std::optional<int> max_n, std::optional<int> max_k, int jobs) {
    SuiteConfig cfg;
    cfg.max_n = max_n;
    cfg.max_k = max_k;
    cfg.jobs = jobs;
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(suite, cfg);
    }
    return to_python(to_json(r));
  }, py::arg("suite"), py::arg("max_n") = py::none(), py::arg("max_k") = py::none(), py::arg("jobs") = 1);
  m.def("scan", [](int max_n, int jobs) {
    ScanConfig cfg;
    cfg.max_n = max_n;
    cfg.jobs = jobs;
    ScanResult r;
    {
      py::gil_scoped_release release;
      r = scan_epositivity(cfg);
    }
    return to_python(to_json(r));
  }, py::arg("max_n") = 7, py::arg("jobs") = 1);
}
