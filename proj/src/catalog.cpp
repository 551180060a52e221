#include "manin/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "manin/contact.hpp"
#include "manin/grassmann.hpp"
#include "manin/loop.hpp"
#include "manin/matrix_families.hpp"

#ifndef MANIN_DATA_DIR
#define MANIN_DATA_DIR "data"
#endif

namespace manin {

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"2.1", "2.1p", "2.2", "2.2p", "2.3",
                                            "2.3p", "2.4", "2.5.1", "2.5.3", "2.6"};
  return ids;
}

bool is_catalog_id(const std::string& id) {
  const auto& ids = catalog_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string default_basis_file() { return std::string(MANIN_DATA_DIR) + "/example_2_4_candidate.json"; }

namespace {

template <class H>
std::shared_ptr<const SubalgebraHandle> hold(H&& h) {
  return std::make_shared<const SubalgebraHandle>(std::forward<H>(h));
}

ZetaVector zeta_for(const ExampleSpec& s, size_t components) {
  return s.k ? ZetaVector::parse(*s.k) : ZetaVector::standard(components);
}

void check_size(const ExampleSpec& s, int lo, int hi) {
  if (s.n < lo || s.n > hi) {
    throw std::invalid_argument("example " + s.id + ": n must be in " + std::to_string(lo) + ".." +
                                std::to_string(hi));
  }
}

}  // namespace

ManinTriple build_example(const ExampleSpec& s) {
  if (!is_catalog_id(s.id)) throw std::invalid_argument("unknown example id '" + s.id + "'");
  ManinTriple t;
  t.example = s.id;
  const auto n = static_cast<size_t>(s.n);

  if (s.id == "2.1" || s.id == "2.2") {
    check_size(s, 1, 4);
    t.params = {{"n", std::to_string(n)}};
    t.g = build_gl(n, n);
    t.form = str_form(n, n);
    t.a = hold(s.id == "2.1" ? q_in_gl(t.g, n) : build_pe(t.g, n));
    t.a_star = hold(dual_subalgebra(s.id, n, t.g));
    return t;
  }
  if (s.id == "2.1p" || s.id == "2.2p") {
    check_size(s, 2, 4);
    t.params = {{"n", std::to_string(n)}};
    PslModel psl = build_psl(n);
    t.g = psl.psl.algebra;
    t.form = psl.form;
    const SubalgebraHandle src = s.id == "2.1p" ? q_in_gl(psl.gl, n) : build_spe(psl.gl, n);
    std::vector<Vector> vs(src.subspace().basis());
    t.a = hold(psl.image(vs, s.id == "2.1p" ? "pq(" + std::to_string(n) + ")" : "spe(" + std::to_string(n) + ")"));
    t.a_star = hold(dual_subalgebra(s.id, psl));
    return t;
  }
  if (s.id == "2.3" || s.id == "2.3p") {
    check_size(s, s.id == "2.3" ? 1 : 2, 3);
    ZetaVector k = zeta_for(s, 2 * n - 1);
    if (k.size() != 2 * n - 1) {
      throw InvalidZeta("ζ needs " + std::to_string(2 * n - 1) + " coefficients, got " + std::to_string(k.size()));
    }
    t.params = {{"n", std::to_string(n)}, {"k", k.str()}};
    ZetaPair z = s.id == "2.3" ? zeta_dual(s.n, k) : zeta_dual_psh(s.n, k);
    t.g = z.g;
    t.form = z.form;
    t.a = z.a;
    t.a_star = z.a_star;
    return t;
  }
  if (s.id == "2.4") {
    const std::string path = s.basis_file.empty() ? default_basis_file() : s.basis_file;
    t.params = {{"basis_file", s.basis_file.empty() ? "example_2_4_candidate.json" : s.basis_file}};
    ExampleFourPair p = load_example_2_4(load_example_2_4_file(path));
    t.g = p.po.algebra;
    t.form = p.po.form;
    t.a = p.a;
    t.a_star = p.a_star;
    t.status = p.status;
    return t;
  }
  if (s.id == "2.5.1" || s.id == "2.5.3") {
    const int m = s.window.value_or(2);
    t.params = {{"window", std::to_string(m)}};
    ContactPair c;
    if (s.id == "2.5.1") {
      c = contact_polynomial_pair(m);
    } else {
      ZetaVector k = zeta_for(s, 5);
      if (k.size() != 5) throw InvalidZeta("ζ needs 5 coefficients, got " + std::to_string(k.size()));
      t.params.emplace_back("k", k.str());
      c = contact_zeta_pair(m, k);
    }
    t.g = c.g.algebra;
    t.form = c.g.form;
    t.a = c.a;
    t.a_star = c.a_star;
    return t;
  }
  // 2.6: loop lift of a finite-dimensional example.
  if (s.base == "2.6" || s.base == "2.5.1" || s.base == "2.5.3" || !is_catalog_id(s.base)) {
    throw std::invalid_argument("2.6 lifts one of 2.1, 2.1p, 2.2, 2.2p, 2.3, 2.3p, 2.4; got '" + s.base + "'");
  }
  ExampleSpec base = s;
  base.id = s.base;
  return lift_triple(build_example(base), s.window.value_or(1));
}

namespace {

int parse_size(const std::vector<std::string>& words, size_t at, const std::string& what) {
  if (words.size() <= at) throw std::invalid_argument(words[0] + ": missing " + what);
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(words[at], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != words[at].size() || v < 0) {
    throw std::invalid_argument(words[0] + ": " + what + " must be a nonnegative integer, got '" + words[at] + "'");
  }
  return v;
}

void expect_words(const std::vector<std::string>& words, size_t count) {
  if (words.size() != count) {
    throw std::invalid_argument(words[0] + " takes " + std::to_string(count - 1) + " size argument(s)");
  }
}

}  // namespace

Target resolve_target(const std::vector<std::string>& words, const ExampleSpec& spec) {
  if (words.empty()) throw std::invalid_argument("no target given");
  const std::string& w = words[0];
  if (is_catalog_id(w)) {
    expect_words(words, 1);
    ExampleSpec s = spec;
    s.id = w;
    ManinTriple t = build_example(s);
    std::string desc = "example " + w;
    for (const auto& [k, v] : t.params) desc += " " + k + "=" + v;
    return {desc, t.g, t.form};
  }
  if (w == "gl" || w == "sl") {
    expect_words(words, 3);
    const int m = parse_size(words, 1, "m");
    const int n = parse_size(words, 2, "n");
    if (m + n == 0 || m + n > 8) throw std::invalid_argument(w + ": need 1 <= m + n <= 8");
    Family f = build_family(w, m, n);
    return {w + "(" + words[1] + "|" + words[2] + ")", f.algebra, f.form};
  }
  if (w == "psl" || w == "q" || w == "psq" || w == "pe" || w == "spe") {
    expect_words(words, 2);
    const int n = parse_size(words, 1, "n");
    if (n < 1 || n > 4) throw std::invalid_argument(w + ": n must be in 1..4");
    Family f = build_family(w, n, n);
    return {w + "(" + words[1] + ")", f.algebra, f.form};
  }
  if (w == "po" || w == "h" || w == "sh" || w == "psh") {
    expect_words(words, 2);
    const int n = parse_size(words, 1, "N");
    if (n < 1 || n > 8) throw std::invalid_argument(w + ": N must be in 1..8");
    const std::string desc = w + "(0|" + words[1] + ")";
    if (w == "po") {
      PoissonAlgebra p = build_po(n);
      return {desc, p.algebra, p.form};
    }
    if (n < 2) throw std::invalid_argument(w + ": N must be in 2..8");
    ShTower t = build_sh_tower(n);
    if (w == "h") return {desc, t.h.algebra, t.h_form};
    if (w == "sh") return {desc, t.sh->algebra_ptr(), t.sh_form};
    return {desc, t.psh.algebra, t.psh_form};
  }
  if (w == "k") {
    expect_words(words, 2);
    const int n = parse_size(words, 1, "N");
    if (n < 1 || n > 6) throw std::invalid_argument("k: N must be in 1..6");
    const int m = spec.window.value_or(2);
    if (m < 0) throw std::invalid_argument("k: window must be nonnegative");
    ContactAlgebra k = build_k_truncated(n, m);
    return {"k^L(1|" + words[1] + ") window [-" + std::to_string(m) + ", " + std::to_string(m) + "]", k.algebra,
            k.form};
  }
  throw std::invalid_argument("unknown target '" + w + "'");
}

std::vector<CatalogRow> run_catalog(const std::vector<std::string>& ids, const ExampleSpec& defaults) {
  std::vector<CatalogRow> rows;
  for (const auto& id : catalog_ids()) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    ExampleSpec s = defaults;
    s.id = id;
    if (!s.window) s.window = 2;
    rows.push_back({id, certify(build_example(s))});
  }
  return rows;
}

namespace {

std::string info_value(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.info) {
    if (k == key) return v;
  }
  return {};
}

std::string failed_checks(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.verdict() != Verdict::fail) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

}  // namespace

json catalog_to_json(const std::vector<CatalogRow>& rows) {
  json out;
  json arr = json::array();
  size_t failures = 0;
  for (const auto& row : rows) {
    const auto& r = row.report;
    json j;
    j["id"] = row.id;
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = std::move(p);
    j["dim_g"] = std::stoul(info_value(r, "dim g"));
    j["dim_a"] = std::stoul(info_value(r, "dim a"));
    j["dim_a_star"] = std::stoul(info_value(r, "dim a*"));
    j["verdict"] = r.verdict();
    j["status"] = r.status;
    j["classification"] = info_value(r, "classification");
    j["failed_checks"] = failed_checks(r);
    if (r.failed()) ++failures;
    arr.push_back(std::move(j));
  }
  out["rows"] = std::move(arr);
  out["failures"] = failures;
  return out;
}

std::string catalog_to_text(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  auto pad = [](std::string s, size_t w) {
    if (s.size() < w) s.resize(w, ' ');
    return s;
  };
  os << pad("id", 7) << pad("dim g", 7) << pad("dim a", 7) << pad("dim a*", 8) << "verdict\n";
  size_t failures = 0;
  for (const auto& row : rows) {
    const auto& r = row.report;
    os << pad(row.id, 7) << pad(info_value(r, "dim g"), 7) << pad(info_value(r, "dim a"), 7)
       << pad(info_value(r, "dim a*"), 8) << r.verdict();
    if (!r.status.empty()) os << " [" << r.status << "]";
    os << "\n";
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    os << "       " << params << "\n";
    const std::string cls = info_value(r, "classification");
    if (!cls.empty()) os << "       " << cls << "\n";
    if (r.failed()) {
      ++failures;
      os << "       failed: " << failed_checks(r) << "\n";
    }
  }
  os << rows.size() << " examples, " << failures << " failing\n";
  return os.str();
}

}  // namespace manin
