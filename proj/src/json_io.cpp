#include "manin/json_io.hpp"

namespace manin {

json scalar_to_json(const Scalar& s) { return json{{"re", s.re().str()}, {"im", s.im().str()}}; }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<int64_t>());
  if (!j.is_object()) throw std::invalid_argument("scalar must be {\"re\",\"im\"} or a string");
  Rational re = j.contains("re") ? Rational::parse(j.at("re").get<std::string>()) : Rational(0);
  Rational im = j.contains("im") ? Rational::parse(j.at("im").get<std::string>()) : Rational(0);
  return {re, im};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& [k, c] : v) out.push_back({{"k", k}, {"coeff", scalar_to_json(c)}});
  return out;
}

Vector vector_from_json(const json& j) {
  std::vector<Vector::Term> t;
  for (const auto& e : j) t.emplace_back(e.at("k").get<uint32_t>(), scalar_from_json(e.at("coeff")));
  return Vector::from_terms(std::move(t));
}

json algebra_to_json(const LieSuperAlgebra& g, const std::vector<BilinearForm>& forms) {
  json out;
  out["name"] = g.name();
  json basis = json::array();
  for (size_t i = 0; i < g.dim(); ++i) {
    json b{{"label", g.space().label(i)}, {"parity", g.parity(i)}};
    if (g.truncated()) b["degree"] = g.grading().degree[i];
    basis.push_back(std::move(b));
  }
  out["basis"] = std::move(basis);
  if (g.truncated()) {
    const auto& gr = g.grading();
    out["grading"] = {{"lo", gr.lo}, {"hi", gr.hi}, {"shifts", gr.shifts}, {"pair_sum", gr.pair_sum}};
  }
  json brackets = json::array();
  json escapes = json::array();
  const auto d = static_cast<uint32_t>(g.dim());
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < d; ++j) {
      const Vector& v = g.structure(i, j);
      if (!v.is_zero()) brackets.push_back({{"i", i}, {"j", j}, {"terms", vector_to_json(v)}});
      if (g.escaped(i, j)) escapes.push_back({{"i", i}, {"j", j}, {"degrees", g.escapes(i, j)}});
    }
  }
  out["brackets"] = std::move(brackets);
  if (g.truncated()) out["escapes"] = std::move(escapes);
  json fs = json::array();
  for (const auto& f : forms) {
    json gram = json::array();
    for (uint32_t i = 0; i < f.dim(); ++i) {
      for (const auto& [j, c] : f.rows()[i]) gram.push_back({{"i", i}, {"j", j}, {"coeff", scalar_to_json(c)}});
    }
    fs.push_back({{"name", f.name()}, {"parity", f.parity()}, {"gram", std::move(gram)}});
  }
  out["forms"] = std::move(fs);
  return out;
}

ImportedAlgebra algebra_from_json(const json& j) {
  std::vector<std::string> labels;
  std::vector<Parity> par;
  std::vector<int> degrees;
  for (const auto& b : j.at("basis")) {
    labels.push_back(b.at("label").get<std::string>());
    par.push_back(b.at("parity").get<Parity>());
    if (b.contains("degree")) degrees.push_back(b.at("degree").get<int>());
  }
  const size_t d = labels.size();
  std::vector<Vector> table(d * d);
  for (const auto& br : j.at("brackets")) {
    auto i = br.at("i").get<size_t>(), k = br.at("j").get<size_t>();
    if (i >= d || k >= d) throw DimensionMismatch("algebra JSON: bracket index out of range");
    table[i * d + k] = vector_from_json(br.at("terms"));
  }
  SuperSpace space(std::move(labels), std::move(par));
  ImportedAlgebra out;
  const std::string name = j.at("name").get<std::string>();
  if (j.contains("grading")) {
    const auto& gj = j.at("grading");
    Grading gr;
    gr.degree = std::move(degrees);
    gr.lo = gj.at("lo").get<int>();
    gr.hi = gj.at("hi").get<int>();
    gr.shifts = gj.at("shifts").get<std::vector<int>>();
    gr.pair_sum = gj.at("pair_sum").get<int>();
    std::vector<DegreeSet> esc(d * d);
    for (const auto& e : j.value("escapes", json::array())) {
      esc[e.at("i").get<size_t>() * d + e.at("j").get<size_t>()] = e.at("degrees").get<DegreeSet>();
    }
    out.algebra = share(LieSuperAlgebra(name, std::move(space), std::move(table), std::move(gr), std::move(esc)));
  } else {
    out.algebra = share(LieSuperAlgebra(name, std::move(space), std::move(table)));
  }
  for (const auto& f : j.value("forms", json::array())) {
    std::vector<VectorAccumulator> rows(d);
    for (const auto& e : f.at("gram")) {
      auto i = e.at("i").get<size_t>();
      if (i >= d) throw DimensionMismatch("algebra JSON: Gram index out of range");
      rows[i].add(e.at("j").get<uint32_t>(), scalar_from_json(e.at("coeff")));
    }
    std::vector<Vector> rr;
    for (auto& r : rows) rr.push_back(r.take());
    out.forms.emplace_back(f.at("name").get<std::string>(), f.at("parity").get<Parity>(), std::move(rr));
  }
  return out;
}

json check_to_json(const CheckReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"indices", x.indices}, {"detail", x.detail}});
  json out{{"name", r.name},
           {"verdict", to_string(r.verdict())},
           {"checked", r.checked},
           {"skipped", r.skipped},
           {"violations", r.violations},
           {"witnesses", std::move(w)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace manin
