// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure-Python wrapper in manin/__init__.py.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "manin/casimir.hpp"
#include "manin/catalog.hpp"
#include "manin/grassmann.hpp"
#include "manin/json_io.hpp"

namespace py = pybind11;
using namespace manin;

namespace {

ExampleSpec make_spec(const std::string& id, int n, std::optional<int> window, std::optional<std::string> k,
                      const std::string& basis_file, const std::string& base) {
  ExampleSpec s;
  s.id = id;
  s.n = n;
  s.window = window;
  s.k = std::move(k);
  s.basis_file = basis_file;
  s.base = base;
  return s;
}

Target target_for(const std::vector<std::string>& words, std::optional<int> window, int n) {
  ExampleSpec s = make_spec({}, n, window, std::nullopt, {}, "2.1");
  if (!words.empty() && is_catalog_id(words[0])) s.id = words[0];
  return resolve_target(words, s);
}

std::string verify_json(const std::string& id, int n, std::optional<int> window, std::optional<std::string> k,
                        const std::string& basis_file, const std::string& base) {
  ManinTriple t = build_example(make_spec(id, n, window, std::move(k), basis_file, base));
  py::gil_scoped_release release;
  return certify(t).to_json().dump();
}

std::string report_all_json(const std::vector<std::string>& ids, int n, std::optional<int> window) {
  if (ids.empty()) throw std::invalid_argument("empty catalog filter");
  for (const auto& id : ids) {
    if (!is_catalog_id(id)) throw std::invalid_argument("unknown example id '" + id + "'");
  }
  ExampleSpec defaults = make_spec({}, n, window, std::nullopt, {}, "2.1");
  py::gil_scoped_release release;
  return catalog_to_json(run_catalog(ids, defaults)).dump();
}

std::string export_json(const std::vector<std::string>& words, std::optional<int> window, int n) {
  Target t = target_for(words, window, n);
  std::vector<BilinearForm> forms;
  if (t.form) forms.push_back(*t.form);
  return algebra_to_json(*t.algebra, forms).dump();
}

std::string canonical_json(const std::string& text) {
  ImportedAlgebra a = algebra_from_json(json::parse(text));
  return algebra_to_json(*a.algebra, a.forms).dump();
}

std::string casimir_json(const std::vector<std::string>& words, std::optional<int> window, int n, uint64_t seed) {
  Target t = target_for(words, window, n);
  if (!t.form) throw std::invalid_argument(t.description + " carries no invariant form");
  const LieSuperAlgebra& g = *t.algebra;
  TwoTensor delta = casimir(g, *t.form);
  json j;
  j["target"] = t.description;
  j["form"] = t.form->name();
  j["casimir"] = tensor_to_json(delta, g.space());
  json cs = json::array();
  cs.push_back(check_to_json(check_ad_invariance(g, delta)));
  cs.push_back(check_to_json(check_casimir_supersymmetry(g, delta)));
  cs.push_back(check_to_json(check_basis_independence(g, *t.form, seed)));
  j["checks"] = std::move(cs);
  return j.dump();
}

std::string cybe_json(const std::vector<std::string>& words, int n, size_t samples) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  Target t = target_for(words, std::nullopt, n);
  if (!t.form) throw std::invalid_argument(t.description + " carries no invariant form");
  const LieSuperAlgebra& g = *t.algebra;
  TwoTensor delta = casimir(g, *t.form);
  const auto pts = default_samples(samples);
  std::vector<ThreeTensor> res = cybe_residual(g, delta, pts);
  json j;
  j["target"] = t.description;
  json arr = json::array();
  bool zero = true;
  for (size_t s = 0; s < pts.size(); ++s) {
    json e;
    e["u"] = scalar_to_json(pts[s].u);
    e["v"] = scalar_to_json(pts[s].v);
    e["w"] = scalar_to_json(pts[s].w);
    e["residual"] = tensor_to_json(res[s], g.space());
    zero = zero && res[s].is_zero();
    arr.push_back(std::move(e));
  }
  j["samples"] = std::move(arr);
  j["verdict"] = zero ? "PASS" : "FAIL";
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Manin triples of Lie superalgebras";
  py::register_exception<InvalidZeta>(m, "InvalidZeta", PyExc_ValueError);

  m.def("catalog_ids", &catalog_ids);
  m.def("verify_json", &verify_json, py::arg("id"), py::arg("n") = 2, py::arg("window") = py::none(),
        py::arg("k") = py::none(), py::arg("basis_file") = "", py::arg("base") = "2.1");
  m.def("report_all_json", &report_all_json, py::arg("ids"), py::arg("n") = 2, py::arg("window") = py::none());
  m.def("export_json", &export_json, py::arg("target"), py::arg("window") = py::none(), py::arg("n") = 2);
  m.def("canonical_json", &canonical_json, py::arg("text"));
  m.def("casimir_json", &casimir_json, py::arg("target"), py::arg("window") = py::none(), py::arg("n") = 2,
        py::arg("seed") = 1);
  m.def("cybe_json", &cybe_json, py::arg("target"), py::arg("n") = 2, py::arg("samples") = 4);
}
