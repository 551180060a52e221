#include "manin/grassmann.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "manin/json_io.hpp"

namespace manin {

int popcount(Mask s) { return std::popcount(s); }

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each factor of b has to pass the factors of a with larger index.
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    Mask bit = rest & -rest;
    swaps += std::popcount(a & ~(bit | (bit - 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

std::string monomial_label(Mask s) {
  if (s == 0) return "1";
  std::string out;
  for (int j = 0; j < 32; ++j) {
    if (s >> j & 1) out += "θ" + std::to_string(j + 1);
  }
  return out;
}

namespace {

void check_vars(int n) {
  if (n < 0 || n > kMaxOddVars) throw std::invalid_argument("number of odd variables out of range");
}

/// ∂_j θ_S = sign θ_{S \ j} with sign = (-1)^{#factors before θ_j}.
int derivative_sign(Mask s, int j) { return (std::popcount(s & ((Mask(1) << j) - 1)) & 1) ? -1 : 1; }

}  // namespace

// ---------------------------------------------------------------- GrassmannElement

GrassmannElement::GrassmannElement(int n_vars, Vector coeffs) : n_(n_vars), coeffs_(std::move(coeffs)) {
  check_vars(n_vars);
  if (!coeffs_.is_zero() && coeffs_.max_index() >= (Mask(1) << n_)) {
    throw DimensionMismatch("GrassmannElement: monomial uses a variable beyond θ_N");
  }
}

GrassmannElement GrassmannElement::constant(int n_vars, const Scalar& c) {
  return {n_vars, Vector::unit(0, c)};
}

GrassmannElement GrassmannElement::theta(int n_vars, int i) {
  if (i < 1 || i > n_vars) throw std::out_of_range("theta: index must be in 1..N");
  return {n_vars, Vector::unit(Mask(1) << (i - 1))};
}

GrassmannElement GrassmannElement::monomial(int n_vars, Mask s, const Scalar& c) {
  return {n_vars, Vector::unit(s, c)};
}

std::optional<Parity> GrassmannElement::parity() const {
  std::optional<Parity> p;
  for (const auto& [s, c] : coeffs_) {
    Parity q = std::popcount(s) & 1;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(0);
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Grassmann: different numbers of variables");
  return {n_, coeffs_ + o.coeffs_};
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Grassmann: different numbers of variables");
  return {n_, coeffs_ - o.coeffs_};
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const { return {n_, coeffs_.scaled(c)}; }

std::string GrassmannElement::str() const {
  if (coeffs_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (s == 0) {
      os << c.str();
    } else if (c.is_one()) {
      os << monomial_label(s);
    } else {
      os << "(" << c.str() << ")" << monomial_label(s);
    }
  }
  return os.str();
}

GrassmannElement wedge(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n_vars() != g.n_vars()) throw DimensionMismatch("wedge: different numbers of variables");
  VectorAccumulator acc;
  for (const auto& [s, a] : f.coeffs()) {
    for (const auto& [t, b] : g.coeffs()) {
      int sg = merge_sign(s, t);
      if (sg) acc.add(s | t, Scalar(sg) * a * b);
    }
  }
  return {f.n_vars(), acc.take()};
}

GrassmannElement partial(const GrassmannElement& f, int i) {
  if (i < 1 || i > f.n_vars()) throw std::out_of_range("partial: index must be in 1..N");
  const int j = i - 1;
  VectorAccumulator acc;
  for (const auto& [s, c] : f.coeffs()) {
    if (s >> j & 1) acc.add(s & ~(Mask(1) << j), Scalar(derivative_sign(s, j)) * c);
  }
  return {f.n_vars(), acc.take()};
}

Scalar berezin(const GrassmannElement& f) {
  return f.coeffs().at((Mask(1) << f.n_vars()) - 1);
}

Vector poisson_monomials(Mask s, Mask t) {
  VectorAccumulator acc;
  const int ps = std::popcount(s) & 1;
  for (Mask both = s & t; both; both &= both - 1) {
    Mask bit = both & -both;
    int j = std::countr_zero(bit);
    Mask a = s & ~bit, b = t & ~bit;
    int sg = merge_sign(a, b);
    if (sg) acc.add(a | b, Scalar((ps ? -1 : 1) * derivative_sign(s, j) * derivative_sign(t, j) * sg));
  }
  return acc.take();
}

GrassmannElement poisson_bracket(const GrassmannElement& f, const GrassmannElement& g) {
  if (f.n_vars() != g.n_vars()) throw DimensionMismatch("poisson_bracket: different numbers of variables");
  VectorAccumulator acc;
  for (const auto& [s, a] : f.coeffs())
    for (const auto& [t, b] : g.coeffs()) acc.add(poisson_monomials(s, t), a * b);
  return {f.n_vars(), acc.take()};
}

// ---------------------------------------------------------------- po(0|N)

BilinearForm berezin_form(int n_vars) {
  check_vars(n_vars);
  const Mask top = (Mask(1) << n_vars) - 1;
  std::vector<Vector> rows(size_t(top) + 1);
  for (Mask s = 0; s <= top; ++s) rows[s] = Vector::unit(top ^ s, Scalar(merge_sign(s, top ^ s)));
  return {"berezin", static_cast<Parity>(n_vars & 1), std::move(rows)};
}

PoissonAlgebra build_po(int n_vars) {
  check_vars(n_vars);
  if (n_vars < 1) throw std::invalid_argument("po(0|N) needs N >= 1");
  const Mask count = Mask(1) << n_vars;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (Mask s = 0; s < count; ++s) {
    labels.push_back(monomial_label(s));
    par.push_back(std::popcount(s) & 1);
  }
  auto alg = LieSuperAlgebra::from_basis_bracket("po(0|" + std::to_string(n_vars) + ")",
                                                 SuperSpace(std::move(labels), std::move(par)),
                                                 [](uint32_t s, uint32_t t) { return poisson_monomials(s, t); });
  return {n_vars, share(std::move(alg)), berezin_form(n_vars)};
}

Vector ShTower::to_psh(const Vector& v) const {
  auto c = sh->from_parent(h.project(v));
  if (!c) throw std::invalid_argument("to_psh: function has a top-degree component");
  return psh.project(*c);
}

ShTower build_sh_tower(int n_vars) {
  if (n_vars < 2) throw std::invalid_argument("the sh tower needs N >= 2");
  ShTower t;
  t.po = build_po(n_vars);
  const std::string nn = "(0|" + std::to_string(n_vars) + ")";
  t.h = quotient(t.po.algebra, center(*t.po.algebra), "h" + nn);
  t.h_form = representative_form(t.po.form, t.h, "berezin");
  t.sh = std::make_shared<SubalgebraHandle>(derived_subalgebra(t.h.algebra, "sh" + nn));
  t.sh_form = restrict_form(t.h_form, *t.sh, "berezin");
  t.psh = quotient(t.sh->algebra_ptr(), center(t.sh->algebra()), "psh" + nn);
  // sh(0|2) is abelian, so psh(0|2) = 0 and carries only the empty form.
  t.psh_form = t.psh.algebra->dim() == 0 ? BilinearForm("berezin", t.sh_form.parity(), {})
                                          : pushdown_form(t.sh_form, t.psh, "berezin");
  return t;
}

// ---------------------------------------------------------------- ζ

Scalar sum_of_squares(const std::vector<Scalar>& k) {
  Scalar s;
  for (const auto& x : k) s += x * x;
  return s;
}

ZetaVector::ZetaVector(std::vector<Scalar> k) : k_(std::move(k)) {
  if (k_.empty()) throw InvalidZeta("ζ needs at least one coefficient");
  Scalar s = sum_of_squares(k_);
  if (s != Scalar(-1)) throw InvalidZeta("Σk² = " + s.str() + " ≠ −1");
}

ZetaVector ZetaVector::standard(size_t components) {
  std::vector<Scalar> k(components);
  if (components == 0) throw InvalidZeta("ζ needs at least one coefficient");
  k[0] = Scalar::i();
  return ZetaVector(std::move(k));
}

ZetaVector ZetaVector::parse(const std::string& text) {
  std::vector<Scalar> k;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    k.push_back(Scalar::parse(item));
  }
  return ZetaVector(std::move(k));
}

GrassmannElement zeta_unchecked(const std::vector<Scalar>& k) {
  const int n = static_cast<int>(k.size()) + 1;
  GrassmannElement z = GrassmannElement::theta(n, n);
  for (int i = 0; i + 1 < n; ++i) z = z + GrassmannElement::theta(n, i + 1).scaled(k[i]);
  return z;
}

GrassmannElement ZetaVector::zeta() const { return zeta_unchecked(k_); }

std::string ZetaVector::str() const {
  std::string out;
  for (size_t i = 0; i < k_.size(); ++i) out += (i ? "," : "") + k_[i].str();
  return out;
}

ZetaPair zeta_dual(int n, const ZetaVector& k) {
  const int big = 2 * n;
  if (n < 1) throw std::invalid_argument("zeta_dual: n >= 1");
  if (static_cast<int>(k.size()) != big - 1) {
    throw InvalidZeta("ζ for po(0|" + std::to_string(big) + ") needs " + std::to_string(big - 1) +
                      " coefficients");
  }
  PoissonAlgebra po = build_po(big);
  const GrassmannElement z = k.zeta();
  const Mask last = Mask(1) << (big - 1);
  std::vector<Vector> a, b;
  for (Mask s = 0; s < last; ++s) {
    a.push_back(Vector::unit(s));
    b.push_back(wedge(GrassmannElement::monomial(big, s), z).coeffs());
  }
  ZetaPair out{po.algebra, po.form, nullptr, nullptr};
  const std::string sub = "po(0|" + std::to_string(big - 1) + ")";
  out.a = std::make_shared<SubalgebraHandle>(subalgebra_from_span(po.algebra, a, sub));
  out.a_star = std::make_shared<SubalgebraHandle>(subalgebra_from_span(po.algebra, b, sub + "·ζ"));
  return out;
}

ZetaPair zeta_dual_psh(int n, const ZetaVector& k) {
  const int big = 2 * n;
  if (n < 2) throw std::invalid_argument("zeta_dual_psh: n >= 2");
  if (static_cast<int>(k.size()) != big - 1) {
    throw InvalidZeta("ζ for psh(0|" + std::to_string(big) + ") needs " + std::to_string(big - 1) +
                      " coefficients");
  }
  ShTower t = build_sh_tower(big);
  const GrassmannElement z = k.zeta();
  const Mask last = Mask(1) << (big - 1);
  std::vector<Vector> a, b;
  for (Mask s = 0; s < last; ++s) {
    if (s != 0) a.push_back(t.to_psh(Vector::unit(s)));
    if (std::popcount(s) <= big - 2) {
      b.push_back(t.to_psh(wedge(GrassmannElement::monomial(big, s), z).coeffs()));
    }
  }
  ZetaPair out{t.psh.algebra, t.psh_form, nullptr, nullptr};
  const std::string sub = "h(0|" + std::to_string(big - 1) + ")";
  out.a = std::make_shared<SubalgebraHandle>(subalgebra_from_span(t.psh.algebra, a, sub));
  out.a_star = std::make_shared<SubalgebraHandle>(subalgebra_from_span(t.psh.algebra, b, sub + "·ζ"));
  return out;
}

// ---------------------------------------------------------------- ξ/η

GrassmannElement xi(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("xi: index must be 1..3");
  return GrassmannElement::theta(6, j) + GrassmannElement::theta(6, j + 3).scaled(Scalar::i());
}

GrassmannElement eta(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("eta: index must be 1..3");
  const Scalar half(Rational(1, 2));
  return GrassmannElement::theta(6, j).scaled(Scalar(Rational(0), Rational(1, 2))) +
         GrassmannElement::theta(6, j + 3).scaled(half);
}

GrassmannElement xi_eta_generator(const std::string& label) {
  auto index = [&](size_t from) {
    if (label.size() != from + 1 || label[from] < '1' || label[from] > '3') {
      throw std::invalid_argument("unknown ξ/η label '" + label + "'");
    }
    return label[from] - '0';
  };
  if (label.rfind("xi", 0) == 0) return xi(index(2));
  if (label.rfind("eta", 0) == 0) return eta(index(3));
  if (label.rfind("ξ", 0) == 0) return xi(index(std::string("ξ").size()));
  if (label.rfind("η", 0) == 0) return eta(index(std::string("η").size()));
  throw std::invalid_argument("unknown ξ/η label '" + label + "'");
}

GrassmannElement xi_eta_monomial(const std::vector<std::string>& labels, const Scalar& c) {
  GrassmannElement f = GrassmannElement::constant(6, c);
  for (const auto& l : labels) f = wedge(f, xi_eta_generator(l));
  return f;
}

namespace {

GrassmannElement function_from_json(const json& fn) {
  if (!fn.is_array()) throw std::invalid_argument("basis file: a function must be a list of monomials");
  GrassmannElement f(6, Vector{});
  for (const auto& mono : fn) {
    std::vector<std::string> labels;
    for (const auto& l : mono.at("indices")) labels.push_back(l.get<std::string>());
    f = f + xi_eta_monomial(labels, scalar_from_json(mono.at("coeff")));
  }
  return f;
}

}  // namespace

ExampleFourData parse_example_2_4(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("basis file is not valid JSON: ") + e.what());
  }
  ExampleFourData d;
  d.status = j.value("status", "");
  try {
    for (const auto& fn : j.at("a_span")) d.a_span.push_back(function_from_json(fn));
    for (const auto& fn : j.at("a_star_generators")) d.a_star_generators.push_back(function_from_json(fn));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("basis file: ") + e.what());
  }
  return d;
}

ExampleFourData load_example_2_4_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read basis file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_example_2_4(ss.str());
}

ExampleFourPair load_example_2_4(const ExampleFourData& data) {
  ExampleFourPair out;
  out.po = build_po(6);
  out.status = data.status;
  std::vector<Vector> a, gens;
  for (const auto& f : data.a_span) a.push_back(f.coeffs());
  for (const auto& f : data.a_star_generators) gens.push_back(f.coeffs());
  out.a = std::make_shared<SubalgebraHandle>(subalgebra_from_span(out.po.algebra, a, "as"));
  const size_t room = out.po.algebra->dim() - out.a->dim();
  try {
    out.a_star = std::make_shared<SubalgebraHandle>(generated_subalgebra(out.po.algebra, gens, "a*", room));
  } catch (const std::length_error&) {
    throw std::length_error("closure of the a* generators exceeds the complement dimension " +
                            std::to_string(room));
  }
  return out;
}

}  // namespace manin
