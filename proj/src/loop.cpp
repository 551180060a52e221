#include "manin/loop.hpp"

namespace manin {

uint32_t LoopAlgebra::index(int p, uint32_t i) const {
  if (p < -window || p > window) throw std::out_of_range("x-degree outside the truncation window");
  if (i >= base->dim()) throw DimensionMismatch("loop index beyond the base algebra");
  return static_cast<uint32_t>((p + window) * base->dim() + i);
}

Vector LoopAlgebra::lift(const Vector& v, int p) const {
  VectorAccumulator acc;
  for (const auto& [i, c] : v) acc.add(index(p, i), c);
  return acc.take();
}

Vector LoopAlgebra::to_vector(const LoopElement& f) const {
  VectorAccumulator acc;
  for (const auto& [k, c] : f.coeffs) acc.add(index(k.first, k.second), c);
  return acc.take();
}

LoopElement LoopAlgebra::to_element(const Vector& v) const {
  LoopElement f;
  const auto d = static_cast<uint32_t>(base->dim());
  for (const auto& [k, c] : v) f.coeffs[{static_cast<int>(k / d) - window, k % d}] = c;
  return f;
}

LoopAlgebra loopify(const AlgebraPtr& g, const BilinearForm& b, int window) {
  if (g->truncated()) throw std::invalid_argument("loopify: base algebra is already truncated");
  if (window < 1) throw std::invalid_argument("truncation window M must be >= 1");
  if (b.dim() != g->dim()) throw DimensionMismatch("loopify: form and algebra differ in size");
  LoopAlgebra out;
  out.base = g;
  out.window = window;
  const auto d = static_cast<uint32_t>(g->dim());
  const int width = 2 * window + 1;
  const size_t total = size_t(width) * d;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  Grading gr;
  gr.lo = -window;
  gr.hi = window;
  gr.shifts = {0};
  gr.pair_sum = -1;
  for (int p = -window; p <= window; ++p) {
    for (uint32_t i = 0; i < d; ++i) {
      labels.push_back(g->space().label(i) + (p == 0 ? "" : "·x^" + std::to_string(p)));
      par.push_back(g->parity(i));
      gr.degree.push_back(p);
    }
  }
  std::vector<Vector> table(total * total);
  std::vector<DegreeSet> escapes(total * total);
  for (int p = -window; p <= window; ++p) {
    for (int q = -window; q <= window; ++q) {
      const int r = p + q;
      for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < d; ++j) {
          const Vector& v = g->structure(i, j);
          if (v.is_zero()) continue;
          const size_t x = size_t(p + window) * d + i, y = size_t(q + window) * d + j;
          if (r < -window || r > window) {
            escapes[x * total + y] = {r};
          } else {
            table[x * total + y] = out.lift(v, r);
          }
        }
      }
    }
  }
  out.algebra = share(LieSuperAlgebra(g->name() + "^(1)[" + std::to_string(-window) + "," + std::to_string(window) + "]",
                                      SuperSpace(std::move(labels), std::move(par)), std::move(table), std::move(gr),
                                      std::move(escapes)));
  // Res_x B(a x^p, b x^q) = B(a, b) when p + q = -1.
  std::vector<Vector> rows(total);
  for (int p = -window; p <= window; ++p) {
    const int q = -1 - p;
    if (q < -window || q > window) continue;
    for (uint32_t i = 0; i < d; ++i) rows[out.index(p, i)] = out.lift(b.rows()[i], q);
  }
  out.form = BilinearForm("Res_x " + b.name(), b.parity(), std::move(rows));
  return out;
}

ManinTriple lift_triple(const ManinTriple& t, int window) {
  LoopAlgebra loop = loopify(t.g, t.form, window);
  auto lift_all = [&](const SubalgebraHandle& h, const std::string& name) {
    std::vector<Vector> vs;
    for (int p = -window; p <= window; ++p)
      for (size_t k = 0; k < h.dim(); ++k) vs.push_back(loop.lift(h.basis_vector(k), p));
    return std::make_shared<const SubalgebraHandle>(subalgebra_from_span(loop.algebra, vs, name));
  };
  ManinTriple out;
  out.example = "2.6";
  out.params = {{"base", t.example}};
  for (const auto& kv : t.params) out.params.push_back(kv);
  out.params.emplace_back("window", std::to_string(window));
  out.g = loop.algebra;
  out.form = loop.form;
  out.a = lift_all(*t.a, t.a->algebra().name() + "^(1)");
  out.a_star = lift_all(*t.a_star, t.a_star->algebra().name() + "^(1)");
  out.status = t.status;
  return out;
}

}  // namespace manin
