#include "manin/contact.hpp"

#include <bit>
#include <functional>
#include <sstream>

namespace manin {

ContactFunction ContactFunction::monomial(int n_vars, int t_degree, Mask s, const Scalar& c) {
  ContactFunction f(n_vars);
  f.add(t_degree, s, c);
  return f;
}

ContactFunction ContactFunction::from_grassmann(const GrassmannElement& g, int t_degree) {
  ContactFunction f(g.n_vars());
  for (const auto& [s, c] : g.coeffs()) f.add(t_degree, s, c);
  return f;
}

Scalar ContactFunction::coeff(int d, Mask s) const {
  auto it = terms_.find({d, s});
  return it == terms_.end() ? Scalar() : it->second;
}

void ContactFunction::add(int d, Mask s, const Scalar& c) {
  if (c.is_zero()) return;
  if (s >> n_) throw DimensionMismatch("ContactFunction: monomial uses a variable beyond θ_N");
  auto [it, fresh] = terms_.try_emplace({d, s}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ContactFunction ContactFunction::operator+(const ContactFunction& o) const {
  if (n_ != o.n_) throw DimensionMismatch("ContactFunction: different numbers of variables");
  ContactFunction out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k.first, k.second, c);
  return out;
}

ContactFunction ContactFunction::scaled(const Scalar& c) const {
  ContactFunction out(n_);
  for (const auto& [k, x] : terms_) out.add(k.first, k.second, c * x);
  return out;
}

std::string contact_label(int d, Mask s) {
  std::string t = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
  if (s == 0) return t.empty() ? "1" : t;
  return t + monomial_label(s);
}

std::string ContactFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << contact_label(k.first, k.second);
    } else {
      os << "(" << c.str() << ")" << contact_label(k.first, k.second);
    }
  }
  return os.str();
}

ContactFunction multiply(const ContactFunction& f, const ContactFunction& g) {
  if (f.n_vars() != g.n_vars()) throw DimensionMismatch("multiply: different numbers of variables");
  ContactFunction out(f.n_vars());
  for (const auto& [a, x] : f.terms()) {
    for (const auto& [b, y] : g.terms()) {
      int sg = merge_sign(a.second, b.second);
      if (sg) out.add(a.first + b.first, a.second | b.second, Scalar(sg) * x * y);
    }
  }
  return out;
}

namespace {

/// Bracket of t^a θ_S with t^b θ_T:
/// [(2-|S|) b - a (2-|T|)] t^{a+b-1} θ_S θ_T - t^{a+b} {θ_S, θ_T}_P.
void bracket_monomials(int a, Mask s, int b, Mask t, const Scalar& c,
                       const std::function<void(int, Mask, const Scalar&)>& emit) {
  const int w = (2 - std::popcount(s)) * b - a * (2 - std::popcount(t));
  if (w != 0) {
    int sg = merge_sign(s, t);
    if (sg) emit(a + b - 1, s | t, Scalar(w * sg) * c);
  }
  for (const auto& [m, x] : poisson_monomials(s, t)) emit(a + b, m, -(x * c));
}

}  // namespace

ContactFunction contact_bracket(const ContactFunction& f, const ContactFunction& g) {
  if (f.n_vars() != g.n_vars()) throw DimensionMismatch("contact_bracket: different numbers of variables");
  ContactFunction out(f.n_vars());
  for (const auto& [p, x] : f.terms())
    for (const auto& [q, y] : g.terms())
      bracket_monomials(p.first, p.second, q.first, q.second, x * y,
                        [&](int d, Mask m, const Scalar& c) { out.add(d, m, c); });
  return out;
}

Scalar residue(const ContactFunction& f) { return f.coeff(-1, (Mask(1) << f.n_vars()) - 1); }

Scalar residue_form(const ContactFunction& f, const ContactFunction& g) { return residue(multiply(f, g)); }

// ---------------------------------------------------------------- truncated algebra

uint32_t ContactAlgebra::index(int d, Mask s) const {
  if (d < -window || d > window) throw std::out_of_range("t-degree outside the truncation window");
  if (s >> n_vars) throw DimensionMismatch("monomial uses a variable beyond θ_N");
  return static_cast<uint32_t>((d + window) << n_vars) | s;
}

Vector ContactAlgebra::to_vector(const ContactFunction& f) const {
  VectorAccumulator acc;
  for (const auto& [k, c] : f.terms()) acc.add(index(k.first, k.second), c);
  return acc.take();
}

ContactFunction ContactAlgebra::to_function(const Vector& v) const {
  ContactFunction f(n_vars);
  const Mask low = (Mask(1) << n_vars) - 1;
  for (const auto& [i, c] : v) f.add(static_cast<int>(i >> n_vars) - window, i & low, c);
  return f;
}

ContactAlgebra build_k_truncated(int n_vars, int window) {
  if (n_vars < 0 || n_vars > 8) throw std::invalid_argument("k(1|N): N must be in 0..8");
  if (window < 1) throw std::invalid_argument("truncation window M must be >= 1");
  ContactAlgebra out;
  out.n_vars = n_vars;
  out.window = window;
  const Mask count = Mask(1) << n_vars;
  const size_t d = size_t(2 * window + 1) * count;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  Grading gr;
  gr.lo = -window;
  gr.hi = window;
  gr.shifts = {-1, 0};
  gr.pair_sum = -1;
  for (int deg = -window; deg <= window; ++deg) {
    for (Mask s = 0; s < count; ++s) {
      labels.push_back(contact_label(deg, s));
      par.push_back(std::popcount(s) & 1);
      gr.degree.push_back(deg);
    }
  }
  std::vector<Vector> table(d * d);
  std::vector<DegreeSet> escapes(d * d);
  for (uint32_t x = 0; x < d; ++x) {
    const int a = static_cast<int>(x >> n_vars) - window;
    const Mask s = x & (count - 1);
    for (uint32_t y = 0; y < d; ++y) {
      const int b = static_cast<int>(y >> n_vars) - window;
      const Mask t = y & (count - 1);
      VectorAccumulator acc;
      DegreeSet esc;
      bracket_monomials(a, s, b, t, Scalar(1), [&](int deg, Mask m, const Scalar& c) {
        if (deg < -window || deg > window) {
          if (!contains_degree(esc, deg)) esc = merge_degrees(esc, {deg});
        } else {
          acc.add(static_cast<uint32_t>((deg + window) << n_vars) | m, c);
        }
      });
      table[size_t(x) * d + y] = acc.take();
      escapes[size_t(x) * d + y] = std::move(esc);
    }
  }
  const std::string name = "k^L(1|" + std::to_string(n_vars) + ")[" + std::to_string(-window) + "," +
                           std::to_string(window) + "]";
  out.algebra = share(LieSuperAlgebra(name, SuperSpace(std::move(labels), std::move(par)), std::move(table),
                                      std::move(gr), std::move(escapes)));
  // Res(t^a θ_S · t^b θ_T) is nonzero only for a + b = -1 and T = S^c.
  std::vector<Vector> rows(d);
  const Mask top = count - 1;
  for (uint32_t x = 0; x < d; ++x) {
    const int a = static_cast<int>(x >> n_vars) - window;
    const Mask s = x & top;
    const int b = -1 - a;
    if (b < -window || b > window) continue;
    rows[x] = Vector::unit(out.index(b, top ^ s), Scalar(merge_sign(s, top ^ s)));
  }
  out.form = BilinearForm("Res", static_cast<Parity>(n_vars & 1), std::move(rows));
  return out;
}

ContactPair contact_polynomial_pair(int window) {
  if (window < 2) throw std::invalid_argument("the polynomial contact pair needs M >= 2");
  ContactPair out;
  out.g = build_k_truncated(6, window);
  std::vector<Vector> a, b;
  for (int deg = -window; deg <= window; ++deg)
    for (Mask s = 0; s < 64; ++s) (deg >= 0 ? a : b).push_back(Vector::unit(out.g.index(deg, s)));
  out.a = std::make_shared<SubalgebraHandle>(subalgebra_from_span(out.g.algebra, a, "k(1|6)"));
  out.a->with_degree_support(0, kUnbounded);
  out.a_star = std::make_shared<SubalgebraHandle>(subalgebra_from_span(out.g.algebra, b, "t^-1 k(1|6)[t^-1]"));
  out.a_star->with_degree_support(-kUnbounded, -1);
  return out;
}

ContactPair contact_zeta_pair(int window, const ZetaVector& k) {
  if (k.size() != 5) throw InvalidZeta("ζ for k^L(1|6) needs 5 coefficients");
  ContactPair out;
  out.g = build_k_truncated(6, window);
  const GrassmannElement z = k.zeta();
  std::vector<Vector> a, b;
  for (int deg = -window; deg <= window; ++deg) {
    for (Mask s = 0; s < 32; ++s) {
      a.push_back(Vector::unit(out.g.index(deg, s)));
      b.push_back(out.g.to_vector(ContactFunction::from_grassmann(wedge(GrassmannElement::monomial(6, s), z), deg)));
    }
  }
  out.a = std::make_shared<SubalgebraHandle>(subalgebra_from_span(out.g.algebra, a, "k^L(1|5)"));
  out.a_star = std::make_shared<SubalgebraHandle>(subalgebra_from_span(out.g.algebra, b, "k^L(1|5)·ζ"));
  return out;
}

}  // namespace manin
