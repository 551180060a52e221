// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "manin/casimir.hpp"
#include "manin/catalog.hpp"
#include "manin/contact.hpp"
#include "manin/grassmann.hpp"
#include "manin/loop.hpp"
#include "manin/matrix_families.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& what) {
    pass = false;
    details.push_back("FAIL " + what);
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string sz(size_t v) { return std::to_string(v); }

Scalar sign(bool negative) { return negative ? Scalar(-1) : Scalar(1); }

ExampleSpec spec(const std::string& id, int n = 2) {
  ExampleSpec s;
  s.id = id;
  s.n = n;
  return s;
}

// ---- shared catalog -----------------------------------------------------------

struct Built {
  std::string name;
  ManinTriple triple;
};

std::vector<Built> catalog_triples() {
  std::vector<Built> out;
  for (const char* id : {"2.1", "2.1p", "2.2", "2.2p", "2.3", "2.3p", "2.4", "2.5.1", "2.5.3"}) {
    ExampleSpec s = spec(id);
    if (std::string(id).rfind("2.5", 0) == 0) s.window = 2;
    out.push_back({id, build_example(s)});
  }
  for (const char* base : {"2.1", "2.1p", "2.2", "2.2p", "2.3", "2.3p"}) {
    ExampleSpec s = spec("2.6");
    s.base = base;
    s.window = 1;
    out.push_back({std::string("2.6/") + base, build_example(s)});
  }
  return out;
}

struct Named {
  std::string name;
  AlgebraPtr g;
  std::optional<BilinearForm> form;
};

Named family(const std::vector<std::string>& words, std::optional<int> window = std::nullopt) {
  ExampleSpec s;
  s.window = window;
  Target t = resolve_target(words, s);
  return {t.description, t.algebra, t.form};
}

// ---- 1. axiom suite -----------------------------------------------------------

Outcome axiom_suite(const std::vector<Built>& cat) {
  Outcome o;
  std::vector<Named> algs;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      algs.push_back(family({"gl", sz(m), sz(n)}));
      algs.push_back(family({"sl", sz(m), sz(n)}));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const char* f : {"psl", "q", "psq", "pe", "spe"}) {
      if (std::string(f) == "psq" && n == 1) continue;  // psq(1) = 0
      algs.push_back(family({f, sz(n)}));
    }
  }
  for (int big = 1; big <= 6; ++big) {
    algs.push_back(family({"po", sz(big)}));
    if (big >= 2) {
      for (const char* f : {"h", "sh", "psh"}) {
        if (std::string(f) == "psh" && big == 2) continue;  // psh(0|2) = 0
        algs.push_back(family({f, sz(big)}));
      }
    }
    algs.push_back(family({"k", sz(big)}, 2));
  }
  for (const auto& b : cat) {
    algs.push_back({b.name + " g", b.triple.g, std::nullopt});
    algs.push_back({b.name + " a", b.triple.a->algebra_ptr(), std::nullopt});
    algs.push_back({b.name + " a*", b.triple.a_star->algebra_ptr(), std::nullopt});
  }
  ExampleSpec s24 = spec("2.6");
  s24.base = "2.4";
  s24.window = 1;
  algs.push_back({"2.6/2.4 g", build_example(s24).g, std::nullopt});

  uint64_t pairs = 0, triples = 0, skipped = 0;
  for (const auto& a : algs) {
    CheckReport anti = check_super_antisymmetry(*a.g);
    CheckReport jac = check_super_jacobi(*a.g);
    pairs += anti.checked;
    triples += jac.checked;
    skipped += jac.skipped;
    if (!anti.ok()) o.fail(a.name + ": super-antisymmetry, " + sz(anti.violations) + " violations");
    if (!jac.ok()) o.fail(a.name + ": super-Jacobi, " + sz(jac.violations) + " violations");
  }
  o.summary = sz(algs.size()) + " algebras, " + sz(pairs) + " pairs, " + sz(triples) + " triples (" + sz(skipped) +
              " outside windows)";
  return o;
}

// ---- 2. dimension ledger ------------------------------------------------------

Outcome dimension_ledger() {
  Outcome o;
  size_t rows = 0;
  auto expect = [&](const std::string& what, size_t got, size_t want) {
    ++rows;
    if (got != want) o.fail("dim " + what + " = " + sz(got) + ", expected " + sz(want));
  };
  for (size_t n = 1; n <= 3; ++n) {
    expect("gl(" + sz(n) + "|" + sz(n) + ")", build_gl(n, n)->dim(), 4 * n * n);
    expect("q(" + sz(n) + ")", build_q(n)->dim(), 2 * n * n);
    expect("pe(" + sz(n) + ")", build_pe(build_gl(n, n), n).dim(), 2 * n * n);
    expect("psl(" + sz(n) + "|" + sz(n) + ")", build_psl(n).psl.algebra->dim(), 4 * n * n - 2);
  }
  for (int big = 1; big <= 6; ++big) {
    expect("po(0|" + sz(big) + ")", build_po(big).algebra->dim(), size_t(1) << big);
    if (big >= 2) expect("h(0|" + sz(big) + ")", build_sh_tower(big).h.algebra->dim(), (size_t(1) << big) - 1);
  }
  o.summary = sz(rows) + " dimensions";
  return o;
}

// ---- 3. forms -----------------------------------------------------------------

Outcome form_certification() {
  Outcome o;
  size_t forms = 0;
  auto certify_form = [&](const std::string& what, const LieSuperAlgebra& g, const BilinearForm& b) {
    ++forms;
    FormReport r = form_properties(g, b);
    if (!r.supersymmetric.ok()) o.fail(what + " not supersymmetric");
    if (!r.invariant.ok()) o.fail(what + " not invariant");
    if (!r.nondegenerate.ok()) o.fail(what + " degenerate");
    if (!r.parity_consistent.ok()) o.fail(what + " mixes parities");
  };
  for (size_t m = 1; m <= 3; ++m) {
    for (size_t n = 1; n <= 3; ++n) certify_form("str on gl(" + sz(m) + "|" + sz(n) + ")", *build_gl(m, n), str_form(m, n));
  }
  for (size_t n = 1; n <= 3; ++n) certify_form("qtr on q(" + sz(n) + ")", *build_q(n), qtr_form(n));
  for (int big = 2; big <= 6; ++big) {
    PoissonAlgebra po = build_po(big);
    certify_form("berezin on po(0|" + sz(big) + ")", *po.algebra, po.form);
    if (po.form.parity() != big % 2) {
      o.fail("berezin on po(0|" + sz(big) + ") has parity " + sz(po.form.parity()));
    }
  }

  // Killing form on gl(n|n), evaluated literally.
  for (size_t n = 1; n <= 3; ++n) {
    AlgebraPtr gl = build_gl(n, n);
    BilinearForm k = killing_form(*gl);
    if (k.is_zero()) continue;
    const uint32_t e11 = gl_index(n, n, 0, 0);
    o.fail("Killing form on gl(" + sz(n) + "|" + sz(n) + ") is not identically zero: K(E11, E11) = " +
           k.at(e11, e11).str());
    // What it is instead: K(x, y) = -2 str(x) str(y).
    auto str_of = [&](uint32_t idx) {
      const size_t d = 2 * n, i = idx / d, j = idx % d;
      return i != j ? Scalar(0) : sign(i >= n);
    };
    bool matches = true;
    for (uint32_t a = 0; a < gl->dim(); ++a) {
      for (uint32_t b = 0; b < gl->dim(); ++b) matches = matches && k.at(a, b) == Scalar(-2) * str_of(a) * str_of(b);
    }
    auto sl = build_sl(gl, n, n);
    const bool sl_zero = killing_form(sl.algebra()).is_zero();
    const bool psl_zero = n < 2 || killing_form(*build_psl(n).psl.algebra).is_zero();
    o.note("  analysis: K = -2 str(x) str(y) on gl(" + sz(n) + "|" + sz(n) + "): " + (matches ? "yes" : "no") +
           "; K = 0 on sl(" + sz(n) + "|" + sz(n) + "): " + (sl_zero ? "yes" : "no") +
           (n >= 2 ? std::string("; K = 0 on psl(") + sz(n) + "|" + sz(n) + "): " + (psl_zero ? "yes" : "no") : ""));
  }
  o.summary = sz(forms) + " forms certified; Killing form checked on gl(n|n), n = 1..3";
  return o;
}

// ---- 4-6. Manin triples, bialgebras, classification -----------------------------

struct Certified {
  std::string name;
  ManinTriple triple;
  VerificationReport report;
};

const CheckReport* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Outcome manin_certification(const std::vector<Built>& cat, std::vector<Certified>& out) {
  Outcome o;
  static const std::vector<std::string> required{"closure(a)", "closure(a*)", "isotropy(a)", "isotropy(a*)",
                                                 "direct sum", "pairing nondegenerate"};
  size_t windowed = 0;
  for (const auto& b : cat) {
    VerificationReport r = certify(b.triple);
    if (r.failed()) {
      for (const auto& c : r.checks) {
        if (c.verdict() == Verdict::fail) o.fail(b.name + ": " + c.name);
      }
    }
    for (const auto& name : required) {
      if (!find_check(r, name)) o.fail(b.name + ": check '" + name + "' missing");
    }
    if (r.verdict() != "PASS") ++windowed;
    out.push_back({b.name, b.triple, std::move(r)});
  }

  // 2.4 with a broken basis file must name the failing check.
  std::ifstream in(default_basis_file());
  json j = json::parse(in);
  j["a_star_generators"] = json::array({j["a_span"][0]});
  const std::string path = "acceptance_bad_basis.json";
  std::ofstream(path) << j.dump();
  ExampleSpec bad = spec("2.4");
  bad.basis_file = path;
  VerificationReport r = verify_triple(build_example(bad));
  std::remove(path.c_str());
  const CheckReport* ds = find_check(r, "direct sum");
  if (!r.failed() || !ds || ds->ok()) {
    o.fail("2.4 with a* generated by the constant: expected a failing 'direct sum' check");
  } else {
    o.note("2.4 with a* = <1>: " + r.verdict() + " at '" + ds->name + "'");
  }
  o.summary = sz(cat.size()) + " triples certified (" + sz(windowed) + " window-conditional); broken 2.4 file rejected";
  return o;
}

Outcome bialgebra_suite(const std::vector<Certified>& certified) {
  Outcome o;
  static const std::vector<std::string> checks{"co-antisymmetry", "1-cocycle", "co-Jacobi", "co-Jacobi routes agree",
                                               "round-trip a* bracket"};
  std::vector<std::pair<std::string, VerificationReport>> reports;
  for (const auto& c : certified) reports.emplace_back(c.name, c.report);
  reports.emplace_back("sl2 double", certify(fixture::sl2_double()));
  for (const auto& [name, r] : reports) {
    for (const auto& want : checks) {
      const CheckReport* c = find_check(r, want);
      if (!c) {
        o.fail(name + ": '" + want + "' not run");
      } else if (c->verdict() == Verdict::fail) {
        o.fail(name + ": " + want + ", " + sz(c->violations) + " violations");
      }
    }
  }
  o.summary = sz(reports.size()) + " cobrackets, 5 checks each";
  return o;
}

Outcome olshansky_classification(const std::vector<Certified>& certified) {
  Outcome o;
  size_t seen = 0;
  for (const auto& c : certified) {
    if (c.name.rfind("2.5", 0) == 0 || c.name.rfind("2.6", 0) == 0) continue;
    ++seen;
    std::string cls;
    for (const auto& [k, v] : c.report.info) {
      if (k == "classification") cls = v;
    }
    if (cls.rfind("olshansky-type", 0) != 0) o.fail(c.name + ": classified '" + cls + "'");
  }
  Classification ctrl = double_classification(fixture::sl2_double());
  if (ctrl.type != "double-type") o.fail("sl2 control classified '" + ctrl.type + "'");
  o.summary = sz(seen) + " examples olshansky-type; sl2 control " + ctrl.type;
  return o;
}

// ---- 7. Casimir and CYBE ------------------------------------------------------

bool is_abelian(const LieSuperAlgebra& g) {
  for (uint32_t i = 0; i < g.dim(); ++i)
    for (uint32_t j = 0; j < g.dim(); ++j)
      if (!g.structure(i, j).is_zero()) return false;
  return true;
}

size_t residual_terms(const std::vector<ThreeTensor>& r) {
  size_t n = 0;
  for (const auto& t : r) n += t.size();
  return n;
}

Outcome casimir_cybe(const std::vector<Built>& cat) {
  Outcome o;
  std::vector<Named> targets;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      targets.push_back(family({"gl", sz(m), sz(n)}));
      if (m != n) targets.push_back(family({"sl", sz(m), sz(n)}));
    }
  }
  for (int n = 1; n <= 3; ++n) targets.push_back(family({"psl", sz(n)}));
  for (int big : {2, 4, 6}) targets.push_back(family({"po", sz(big)}));
  for (int big : {4, 6}) targets.push_back(family({"psh", sz(big)}));
  for (const auto& b : cat) {
    if (b.triple.g->dim() <= 64 && b.triple.form.parity() == 0) targets.push_back({b.name, b.triple.g, b.triple.form});
  }

  size_t casimirs = 0, cybe = 0, controls = 0;
  std::vector<std::string> abelian;
  const auto samples = default_samples(4);
  for (const auto& t : targets) {
    const LieSuperAlgebra& g = *t.g;
    TwoTensor d = casimir(g, *t.form);
    ++casimirs;
    for (const auto& c : {check_ad_invariance(g, d), check_casimir_supersymmetry(g, d),
                          check_basis_independence(g, *t.form, 1)}) {
      if (!c.ok()) o.fail(t.name + ": " + c.name + ", " + sz(c.violations) + " violations");
    }
    if (g.truncated() || g.dim() > 16) continue;
    ++cybe;
    const size_t res = residual_terms(cybe_residual(g, d, samples));
    if (res != 0) o.fail(t.name + ": CYBE residual has " + sz(res) + " terms");
    // Negative control: double the first coefficient of Δ. On an abelian
    // algebra every tensor is invariant and solves CYBE, so there is no fault.
    if (is_abelian(g)) {
      abelian.push_back(t.name);
      continue;
    }
    const auto& first = d.terms().front();
    TwoTensor bad = d.with_term(first.i, first.j, first.c);
    const bool caught_inv = !check_ad_invariance(g, bad).ok();
    const bool caught_cybe = residual_terms(cybe_residual(g, bad, samples)) != 0;
    if (!caught_inv) o.fail(t.name + ": corrupted Casimir passes ad-invariance");
    if (!caught_cybe) o.fail(t.name + ": corrupted Casimir has zero CYBE residual");
    controls += caught_inv && caught_cybe;
  }
  for (const auto& name : abelian) o.note(name + " is abelian: no corrupted control possible");
  o.summary = sz(casimirs) + " Casimirs invariant and basis-independent; CYBE zero on " + sz(cybe) + " algebras at " +
              sz(samples.size()) + " spectral triples; " + sz(controls) + " corrupted controls nonzero";
  return o;
}

// ---- 8. fault injection -------------------------------------------------------

using Rng = std::mt19937_64;

uint32_t pick(Rng& rng, size_t n) { return static_cast<uint32_t>(std::uniform_int_distribution<size_t>(0, n - 1)(rng)); }

// Index of a basis element with the given parity, or -1.
int64_t pick_parity(Rng& rng, const LieSuperAlgebra& g, Parity p) {
  std::vector<uint32_t> c;
  for (uint32_t m = 0; m < g.dim(); ++m) {
    if (g.parity(m) == p) c.push_back(m);
  }
  return c.empty() ? -1 : c[pick(rng, c.size())];
}

bool any_jacobiator(const LieSuperAlgebra& g) {
  const auto d = static_cast<uint32_t>(g.dim());
  for (uint32_t x = 0; x < d; ++x)
    for (uint32_t y = 0; y < d; ++y)
      for (uint32_t z = 0; z < d; ++z)
        if (!oracle::jacobiator(g, x, y, z).is_zero()) return true;
  return false;
}

Vector bracket_vec(const LieSuperAlgebra& g, uint32_t x, const Vector& v, bool left) {
  VectorAccumulator acc;
  for (const auto& [k, c] : v) acc.add(left ? g.structure(x, k) : g.structure(k, x), c);
  return acc.take();
}

// B([x,y],z) - B(x,[y,z]) from the Gram matrix and structure table.
Scalar invariance_defect(const LieSuperAlgebra& g, const BilinearForm& b, uint32_t x, uint32_t y, uint32_t z) {
  Scalar s;
  for (const auto& [m, c] : g.structure(x, y)) s += c * b.at(m, z);
  for (const auto& [m, c] : g.structure(y, z)) s -= c * b.at(x, m);
  return s;
}

bool any_invariance_defect(const LieSuperAlgebra& g, const BilinearForm& b) {
  const auto d = static_cast<uint32_t>(g.dim());
  for (uint32_t x = 0; x < d; ++x)
    for (uint32_t y = 0; y < d; ++y)
      for (uint32_t z = 0; z < d; ++z)
        if (!invariance_defect(g, b, x, y, z).is_zero()) return true;
  return false;
}

using Dense2 = std::map<std::pair<uint32_t, uint32_t>, Scalar>;

// δ([x,y]) - x·δ(y) + (-1)^{p(x)p(y)} y·δ(x) with x·(u⊗v) = [x,u]⊗v + (-1)^{p(x)p(u)} u⊗[x,v].
Dense2 cocycle_defect(const LieSuperAlgebra& a, const std::vector<std::vector<TensorTerm>>& delta, uint32_t x,
                      uint32_t y) {
  Dense2 out;
  auto add = [&](uint32_t i, uint32_t j, const Scalar& c) {
    if (!c.is_zero()) out[{i, j}] += c;
  };
  for (const auto& [z, c] : a.structure(x, y))
    for (const auto& t : delta[z]) add(t.i, t.j, c * t.c);
  auto act = [&](uint32_t w, const std::vector<TensorTerm>& ten, const Scalar& s) {
    for (const auto& t : ten) {
      for (const auto& [k, e] : a.structure(w, t.i)) add(k, t.j, s * t.c * e);
      const Scalar sg = s * t.c * sign(a.parity(w) && a.parity(t.i));
      for (const auto& [k, e] : a.structure(w, t.j)) add(t.i, k, sg * e);
    }
  };
  act(x, delta[y], Scalar(-1));
  act(y, delta[x], sign(a.parity(x) && a.parity(y)));
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool any_cocycle_defect(const LieSuperAlgebra& a, const std::vector<std::vector<TensorTerm>>& delta) {
  for (uint32_t x = 0; x < a.dim(); ++x)
    for (uint32_t y = 0; y < a.dim(); ++y)
      if (!cocycle_defect(a, delta, x, y).empty()) return true;
  return false;
}

struct FaultTally {
  size_t cases = 0, detected = 0, witnessed = 0;
};

Outcome fault_injection() {
  Outcome o;
  Rng rng(0x5eed);
  std::vector<Named> pool{{"sl(2)", fixture::sl2(), std::nullopt}};
  for (const auto& w : std::vector<std::vector<std::string>>{
           {"gl", "1", "1"}, {"gl", "2", "1"}, {"sl", "2", "1"}, {"q", "2"}, {"pe", "2"}, {"po", "3"}, {"po", "4"}, {"psl", "2"}}) {
    pool.push_back(family(w));
  }
  std::map<std::string, FaultTally> tally;
  auto record = [&](const std::string& kind, const std::string& what, bool detected, bool witness_ok) {
    auto& t = tally[kind];
    ++t.cases;
    t.detected += detected;
    t.witnessed += detected && witness_ok;
    if (!detected) o.fail(kind + " fault not detected: " + what);
    else if (!witness_ok) o.fail(kind + " fault detected with a wrong witness: " + what);
  };

  // Antisymmetry: one structure constant [e_i, e_j] gains a term.
  for (int c = 0; tally["antisymmetry"].cases < 15; ++c) {
    const Named& a = pool[c % pool.size()];
    const LieSuperAlgebra& g = *a.g;
    uint32_t i = pick(rng, g.dim()), j = pick(rng, g.dim());
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    const int64_t m = pick_parity(rng, g, (g.parity(i) + g.parity(j)) % 2);
    if (m < 0) continue;
    LieSuperAlgebra bad = g.with_structure(i, j, g.structure(i, j) + Vector::unit(uint32_t(m)));
    CheckReport r = check_super_antisymmetry(bad);
    bool witness_ok = !r.witnesses.empty();
    for (const auto& w : r.witnesses) {
      witness_ok = witness_ok && w.indices == std::vector<uint32_t>{i, j};
      if (w.indices.size() == 2) {
        Vector sym = bad.structure(w.indices[0], w.indices[1]);
        sym.axpy(sign(bad.parity(i) && bad.parity(j)), bad.structure(w.indices[1], w.indices[0]));
        witness_ok = witness_ok && !sym.is_zero();
      }
    }
    record("antisymmetry", a.name + " [" + g.space().label(i) + ", " + g.space().label(j) + "]", !r.ok(), witness_ok);
  }

  // Jacobi: both orders of one pair corrupted consistently, so antisymmetry
  // still holds; cases the independent Jacobiator finds harmless are redrawn.
  for (int c = 0; tally["jacobi"].cases < 15; ++c) {
    const Named& a = pool[c % pool.size()];
    const LieSuperAlgebra& g = *a.g;
    const uint32_t i = pick(rng, g.dim()), j = pick(rng, g.dim());
    if (i == j) continue;
    const int64_t m = pick_parity(rng, g, (g.parity(i) + g.parity(j)) % 2);
    if (m < 0) continue;
    const Vector e = Vector::unit(uint32_t(m));
    Vector back = g.structure(j, i);
    back.axpy(-sign(g.parity(i) && g.parity(j)), e);
    LieSuperAlgebra bad = g.with_structure(i, j, g.structure(i, j) + e).with_structure(j, i, back);
    if (!check_super_antisymmetry(bad).ok() || !any_jacobiator(bad)) continue;
    CheckReport r = check_super_jacobi(bad);
    bool witness_ok = !r.witnesses.empty();
    for (const auto& w : r.witnesses) {
      witness_ok = witness_ok && w.indices.size() == 3 &&
                   !oracle::jacobiator(bad, w.indices[0], w.indices[1], w.indices[2]).is_zero();
    }
    record("jacobi", a.name + " [" + g.space().label(i) + ", " + g.space().label(j) + "] += " + g.space().label(m),
           !r.ok(), witness_ok);
  }

  // Invariance: one Gram entry and its supersymmetric partner shifted.
  std::vector<Named> formed;
  formed.push_back({"sl(2)", fixture::sl2(), fixture::sl2_pair_form()});
  formed.back().form = BilinearForm::from_matrix("tr", 0, [] {
    Matrix m(3, 3);
    m(0, 2) = Scalar(1);
    m(2, 0) = Scalar(1);
    m(1, 1) = Scalar(2);
    return m;
  }());
  for (const auto& w : std::vector<std::vector<std::string>>{{"gl", "1", "1"}, {"gl", "2", "1"}, {"q", "2"}, {"po", "3"}, {"po", "4"}, {"psl", "2"}}) {
    formed.push_back(family(w));
  }
  for (int c = 0; tally["invariance"].cases < 10; ++c) {
    const Named& a = formed[c % formed.size()];
    const LieSuperAlgebra& g = *a.g;
    const BilinearForm& b = *a.form;
    const uint32_t i = pick(rng, g.dim()), j = pick(rng, g.dim());
    if ((g.parity(i) + g.parity(j)) % 2 != b.parity()) continue;
    if (i == j && g.parity(i) == 1) continue;
    std::vector<Vector> rows = b.rows();
    rows[i] = rows[i] + Vector::unit(j);
    if (i != j) rows[j] = rows[j] + Vector::unit(i, sign(g.parity(i) && g.parity(j)));
    BilinearForm bad(b.name() + "'", b.parity(), rows);
    if (!any_invariance_defect(g, bad)) continue;
    FormReport r = form_properties(g, bad);
    bool witness_ok = !r.invariant.witnesses.empty() && r.supersymmetric.ok() && r.parity_consistent.ok();
    for (const auto& w : r.invariant.witnesses) {
      witness_ok = witness_ok && w.indices.size() == 3 &&
                   !invariance_defect(g, bad, w.indices[0], w.indices[1], w.indices[2]).is_zero();
    }
    record("invariance", a.name + " B(" + g.space().label(i) + ", " + g.space().label(j) + ")", !r.invariant.ok(),
           witness_ok);
  }

  // Cocycle: one δ coefficient and its co-antisymmetric partner change sign.
  std::vector<std::pair<std::string, ManinTriple>> triples{{"sl2 double", fixture::sl2_double()},
                                                           {"2.1", build_example(spec("2.1"))},
                                                           {"2.3", build_example(spec("2.3"))}};
  std::set<std::tuple<size_t, uint32_t, uint32_t, uint32_t>> used;
  for (int c = 0; tally["cocycle"].cases < 10 && c < 10000; ++c) {
    const size_t which = c % triples.size();
    const auto& [name, t] = triples[which];
    const Cobracket d = derive_cobracket(t);
    const LieSuperAlgebra& a = t.a->algebra();
    const uint32_t k = pick(rng, a.dim());
    if (d.delta[k].empty()) continue;
    const TensorTerm term = d.delta[k][pick(rng, d.delta[k].size())];
    const uint32_t i = std::min(term.i, term.j), j = std::max(term.i, term.j);
    if (!used.insert({which, k, i, j}).second) continue;
    Cobracket bad = d;
    for (auto& x : bad.delta[k]) {
      if ((x.i == i && x.j == j) || (x.i == j && x.j == i)) x.c = -x.c;
    }
    if (!check_coantisymmetry(bad).ok() || !any_cocycle_defect(a, bad.delta)) continue;
    CheckReport r = check_cocycle(a, bad);
    bool witness_ok = !r.witnesses.empty();
    for (const auto& w : r.witnesses) {
      if (w.indices.size() != 4) {
        witness_ok = false;
        continue;
      }
      Dense2 defect = cocycle_defect(a, bad.delta, w.indices[0], w.indices[1]);
      witness_ok = witness_ok && defect.count({w.indices[2], w.indices[3]}) > 0;
    }
    record("cocycle",
           name + " δ(" + a.space().label(k) + ") at " + a.space().label(i) + "⊗" + a.space().label(j), !r.ok(),
           witness_ok);
  }

  size_t cases = 0, witnessed = 0;
  std::string parts;
  for (const auto& [kind, t] : tally) {
    cases += t.cases;
    witnessed += t.witnessed;
    parts += (parts.empty() ? "" : ", ") + kind + " " + sz(t.witnessed) + "/" + sz(t.cases);
  }
  if (cases != 50) o.fail("corpus has " + sz(cases) + " cases, expected 50");
  o.summary = sz(witnessed) + "/" + sz(cases) + " faults detected with verified witnesses (" + parts + ")";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Built> cat = catalog_triples();
  std::vector<Certified> certified;

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"axiom suite", [&] { return axiom_suite(cat); }},
      {"dimension ledger", [] { return dimension_ledger(); }},
      {"form certification", [] { return form_certification(); }},
      {"Manin certification", [&] { return manin_certification(cat, certified); }},
      {"bialgebra suite", [&] { return bialgebra_suite(certified); }},
      {"Olshansky classification", [&] { return olshansky_classification(certified); }},
      {"Casimir / CYBE", [&] { return casimir_cybe(cat); }},
      {"fault injection", [] { return fault_injection(); }},
  };

  int passed = 0;
  for (size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    passed += o.pass;
    std::cout << "[" << (o.pass ? "PASS" : "FAIL") << "] " << c + 1 << ". " << criteria[c].title << ": " << o.summary
              << "\n";
    for (const auto& d : o.details) std::cout << "       " << d << "\n";
    std::cout.flush();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << secs;
  std::cout << passed << "/" << criteria.size() << " criteria pass (" << t.str() << " s)\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
