// manin: command-line front end for the example catalog.
//
// Exit codes: 0 when every verdict passes, 1 on any FAIL, 2 on usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manin/casimir.hpp"
#include "manin/catalog.hpp"
#include "manin/json_io.hpp"

namespace {

using namespace manin;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  int big_n = 0;  // --N, 0 when unset
  int window = -1;
  std::string k;
  std::string basis_file;
  std::string base = "2.1";
  std::string format = "text";
  std::string out;
  std::string config;
  std::string only;
  size_t samples = 4;
  uint64_t seed = 1;
  std::vector<std::string> words;
};

struct Bound {
  CLI::Option* n = nullptr;
  CLI::Option* big_n = nullptr;
  CLI::Option* window = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* basis_file = nullptr;
  CLI::Option* base = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* only = nullptr;
};

Bound add_common(CLI::App* cmd, Options& o) {
  Bound b;
  b.n = cmd->add_option("--n", o.n, "matrix size n (N = 2n odd variables for 2.3 / 2.3p)");
  b.big_n = cmd->add_option("--N", o.big_n, "number of odd variables");
  b.window = cmd->add_option("-M,--window", o.window, "truncation window M");
  b.k = cmd->add_option("--k", o.k, "zeta coefficients, e.g. \"i,0,0\"");
  b.basis_file = cmd->add_option("--basis-file", o.basis_file, "basis file for 2.4");
  b.base = cmd->add_option("--base", o.base, "base example lifted by 2.6");
  b.format = cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  b.out = cmd->add_option("--out", o.out, "write output to this file");
  cmd->add_option("--config", o.config, "JSON file with default values for these flags");
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Config values fill in every flag the command line left unset.
void apply_config(const Options& given, Options& o, const Bound& b) {
  if (given.config.empty()) return;
  json c;
  try {
    c = json::parse(read_file(given.config));
  } catch (const json::exception& e) {
    throw UsageError("config " + given.config + ": " + e.what());
  }
  if (!c.is_object()) throw UsageError("config " + given.config + ": expected a JSON object");
  static const std::vector<std::string> known{"n",    "N",      "window", "k",       "basis_file", "base",
                                              "format", "out", "samples", "seed", "only"};
  for (const auto& [key, _] : c.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw UsageError("config " + given.config + ": unknown key '" + key + "'");
    }
  }
  try {
    auto fill = [&](const char* key, CLI::Option* opt, auto& field) {
      if (c.contains(key) && (opt == nullptr || opt->count() == 0)) {
        field = c.at(key).get<std::remove_reference_t<decltype(field)>>();
      }
    };
    fill("n", b.n, o.n);
    fill("N", b.big_n, o.big_n);
    fill("window", b.window, o.window);
    fill("k", b.k, o.k);
    fill("basis_file", b.basis_file, o.basis_file);
    fill("base", b.base, o.base);
    fill("format", b.format, o.format);
    fill("out", b.out, o.out);
    if (b.samples) fill("samples", b.samples, o.samples);
    if (b.seed) fill("seed", b.seed, o.seed);
    if (b.only) fill("only", b.only, o.only);
  } catch (const json::exception& e) {
    throw UsageError("config " + given.config + ": " + e.what());
  }
  if (o.format != "text" && o.format != "json") throw UsageError("format must be text or json");
}

ExampleSpec spec_from(const Options& o, const std::string& id) {
  ExampleSpec s;
  s.id = id;
  s.n = o.n;
  if (o.big_n != 0) {
    if (id == "2.3" || id == "2.3p") {
      if (o.big_n % 2 != 0) throw UsageError("example " + id + " needs an even N = 2n, got N = " + std::to_string(o.big_n));
      s.n = o.big_n / 2;
    } else if (id == "2.5.1" || id == "2.5.3") {
      if (o.big_n != 6) throw UsageError("example " + id + " lives in k^L(1|6); N must be 6");
    } else if (!id.empty()) {
      throw UsageError("--N does not apply to example " + id);
    }
  }
  if (o.window >= 0) s.window = o.window;
  if (!o.k.empty()) s.k = o.k;
  s.basis_file = o.basis_file;
  s.base = o.base;
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
  if (!f) throw UsageError("write to " + o.out + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Families that take a single size fall back to --N or --n when it is omitted.
std::vector<std::string> target_words(const Options& o) {
  std::vector<std::string> w = o.words;
  if (w.size() == 1) {
    const std::string& f = w[0];
    if ((f == "po" || f == "h" || f == "sh" || f == "psh" || f == "k") && o.big_n != 0) {
      w.push_back(std::to_string(o.big_n));
    } else if (f == "psl" || f == "q" || f == "psq" || f == "pe" || f == "spe") {
      w.push_back(std::to_string(o.n));
    } else if (f == "gl" || f == "sl") {
      w.push_back(std::to_string(o.n));
      w.push_back(std::to_string(o.n));
    }
  }
  return w;
}

Target target_of(const Options& o) {
  std::vector<std::string> w = target_words(o);
  if (w.empty()) throw UsageError("missing target");
  return resolve_target(w, spec_from(o, is_catalog_id(w[0]) ? w[0] : std::string()));
}

int cmd_verify(const Options& o) {
  if (o.words.size() != 1) throw UsageError("verify takes exactly one example id");
  const std::string& id = o.words[0];
  if (!is_catalog_id(id)) throw UsageError("unknown example id '" + id + "'");
  ManinTriple t = build_example(spec_from(o, id));
  VerificationReport r = certify(t);
  emit(o, o.format == "json" ? dump(r.to_json()) : r.to_text());
  return r.failed() ? kFail : kPass;
}

int cmd_export(const Options& o) {
  Target t = target_of(o);
  std::vector<BilinearForm> forms;
  if (t.form) forms.push_back(*t.form);
  const json out = algebra_to_json(*t.algebra, forms);
  // The written file must import back to the same canonical JSON.
  ImportedAlgebra back = algebra_from_json(out);
  if (algebra_to_json(*back.algebra, back.forms).dump() != out.dump()) {
    std::cerr << "export of " << t.description << " does not round-trip\n";
    return kFail;
  }
  emit(o, dump(out));
  return kPass;
}

int cmd_import(const Options& o) {
  if (o.words.size() != 1) throw UsageError("import takes one JSON file");
  json in;
  try {
    in = json::parse(read_file(o.words[0]));
  } catch (const json::exception& e) {
    throw UsageError(o.words[0] + ": " + e.what());
  }
  ImportedAlgebra a = algebra_from_json(in);
  emit(o, dump(algebra_to_json(*a.algebra, a.forms)));
  return kPass;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return ids;
}

int cmd_report_all(const Options& o, bool filtered) {
  std::vector<std::string> ids = catalog_ids();
  if (filtered) {
    ids = split_ids(o.only);
    if (ids.empty()) throw UsageError("empty catalog filter");
    for (const auto& id : ids) {
      if (!is_catalog_id(id)) throw UsageError("unknown example id '" + id + "'");
    }
  }
  ExampleSpec defaults = spec_from(o, {});
  std::vector<CatalogRow> rows = run_catalog(ids, defaults);
  emit(o, o.format == "json" ? dump(catalog_to_json(rows)) : catalog_to_text(rows));
  for (const auto& r : rows) {
    if (r.report.failed()) return kFail;
  }
  return kPass;
}

std::string term_text(const TwoTensor& t, const SuperSpace& s) {
  std::ostringstream os;
  for (const auto& x : t.terms()) os << "  " << x.c.str() << "  " << s.label(x.i) << " ⊗ " << s.label(x.j) << "\n";
  return os.str();
}

std::string check_line(const CheckReport& c) {
  std::ostringstream os;
  os << c.name << ": " << to_string(c.verdict()) << " (checked " << c.checked;
  if (c.skipped) os << ", skipped " << c.skipped;
  if (c.violations) os << ", violations " << c.violations;
  os << ")\n";
  for (const auto& w : c.witnesses) os << "  witness: " << w.detail << "\n";
  return os.str();
}

int cmd_casimir(const Options& o) {
  Target t = target_of(o);
  if (!t.form) throw UsageError(t.description + " carries no invariant form");
  const LieSuperAlgebra& g = *t.algebra;
  TwoTensor delta = casimir(g, *t.form);
  std::vector<CheckReport> checks{check_ad_invariance(g, delta), check_casimir_supersymmetry(g, delta),
                                  check_basis_independence(g, *t.form, o.seed)};
  bool failed = false;
  for (const auto& c : checks) failed = failed || c.verdict() == Verdict::fail;
  if (o.format == "json") {
    json j;
    j["target"] = t.description;
    j["form"] = t.form->name();
    j["casimir"] = tensor_to_json(delta, g.space());
    json cs = json::array();
    for (const auto& c : checks) cs.push_back(check_to_json(c));
    j["checks"] = std::move(cs);
    emit(o, dump(j));
  } else {
    std::string text = "Casimir of " + t.description + " for " + t.form->name() + ": " +
                       std::to_string(delta.size()) + " terms\n" + term_text(delta, g.space());
    for (const auto& c : checks) text += check_line(c);
    emit(o, text);
  }
  return failed ? kFail : kPass;
}

int cmd_cybe(const Options& o) {
  if (o.samples == 0) throw UsageError("--samples must be positive");
  Target t = target_of(o);
  if (!t.form) throw UsageError(t.description + " carries no invariant form");
  const LieSuperAlgebra& g = *t.algebra;
  if (g.truncated()) throw UsageError("cybe needs an untruncated algebra; " + t.description + " is truncated");
  TwoTensor delta = casimir(g, *t.form);
  const auto samples = default_samples(o.samples);
  std::vector<ThreeTensor> res = cybe_residual(g, delta, samples);
  bool failed = false;
  for (const auto& r : res) failed = failed || !r.is_zero();
  if (o.format == "json") {
    json j;
    j["target"] = t.description;
    json arr = json::array();
    for (size_t s = 0; s < samples.size(); ++s) {
      json e;
      e["u"] = scalar_to_json(samples[s].u);
      e["v"] = scalar_to_json(samples[s].v);
      e["w"] = scalar_to_json(samples[s].w);
      e["residual"] = tensor_to_json(res[s], g.space());
      arr.push_back(std::move(e));
    }
    j["samples"] = std::move(arr);
    j["verdict"] = failed ? "FAIL" : "PASS";
    emit(o, dump(j));
  } else {
    std::ostringstream os;
    os << "CYBE for r = Casimir/(u - v) on " << t.description << "\n";
    for (size_t s = 0; s < samples.size(); ++s) {
      os << "  (u, v, w) = (" << samples[s].u << ", " << samples[s].v << ", " << samples[s].w << "): ";
      os << (res[s].is_zero() ? "residual 0" : std::to_string(res[s].size()) + " nonzero residual terms") << "\n";
    }
    os << "verdict: " << (failed ? "FAIL" : "PASS") << "\n";
    emit(o, os.str());
  }
  return failed ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manin triples of Lie superalgebras: verification, export and reports"};
  app.require_subcommand(1);

  Options o;
  std::vector<std::pair<CLI::App*, Bound>> cmds;

  auto* verify = app.add_subcommand("verify", "certify one catalog example");
  verify->add_option("id", o.words, "example id")->required();
  cmds.emplace_back(verify, add_common(verify, o));

  auto* exp = app.add_subcommand("export", "write an algebra and its form as JSON");
  exp->add_option("target", o.words, "catalog id or family with sizes, e.g. gl 2 2")->required();
  cmds.emplace_back(exp, add_common(exp, o));

  auto* imp = app.add_subcommand("import", "read algebra JSON and write it back in canonical form");
  imp->add_option("file", o.words, "JSON file")->required();
  cmds.emplace_back(imp, add_common(imp, o));

  auto* all = app.add_subcommand("report-all", "certify the catalog and print a summary table");
  Bound all_bound = add_common(all, o);
  all_bound.only = all->add_option("--only", o.only, "comma-separated example ids");
  cmds.emplace_back(all, all_bound);

  auto* cas = app.add_subcommand("casimir", "Casimir element and its checks");
  cas->add_option("target", o.words, "catalog id or family")->required();
  Bound cas_bound = add_common(cas, o);
  cas_bound.seed = cas->add_option("--seed", o.seed, "seed for the basis-change check");
  cmds.emplace_back(cas, cas_bound);

  auto* cybe = app.add_subcommand("cybe", "classical Yang-Baxter residual of Casimir/(u - v)");
  cybe->add_option("target", o.words, "catalog id or family")->required();
  Bound cybe_bound = add_common(cybe, o);
  cybe_bound.samples = cybe->add_option("--samples", o.samples, "number of spectral samples");
  cmds.emplace_back(cybe, cybe_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (const auto& [cmd, bound] : cmds) {
      if (!cmd->parsed()) continue;
      const Options given = o;
      apply_config(given, o, bound);
      if (cmd == verify) return cmd_verify(o);
      if (cmd == exp) return cmd_export(o);
      if (cmd == imp) return cmd_import(o);
      if (cmd == all) return cmd_report_all(o, bound.only->count() > 0 || !o.only.empty());
      if (cmd == cas) return cmd_casimir(o);
      if (cmd == cybe) return cmd_cybe(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
