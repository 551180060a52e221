#include "manin/casimir.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace manin {

TwoTensor TwoTensor::from_terms(std::vector<TensorTerm> terms) {
  std::map<std::pair<uint32_t, uint32_t>, Scalar> acc;
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    auto [it, fresh] = acc.try_emplace({t.i, t.j}, t.c);
    if (!fresh) it->second += t.c;
  }
  TwoTensor out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({k.first, k.second, c});
  return out;
}

Scalar TwoTensor::at(uint32_t i, uint32_t j) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{i, j}, [](const TensorTerm& t, auto key) {
    return std::pair{t.i, t.j} < key;
  });
  return (it != terms_.end() && it->i == i && it->j == j) ? it->c : Scalar();
}

TwoTensor TwoTensor::swapped(const SuperSpace& space) const {
  std::vector<TensorTerm> t;
  for (const auto& x : terms_) {
    const int s = space.parity(x.i) * space.parity(x.j);
    t.push_back({x.j, x.i, s ? -x.c : x.c});
  }
  return from_terms(std::move(t));
}

TwoTensor TwoTensor::with_term(uint32_t i, uint32_t j, const Scalar& c) const {
  auto t = terms_;
  t.push_back({i, j, c});
  return from_terms(std::move(t));
}

ThreeTensor ThreeTensor::from_terms(std::vector<Term3> terms) {
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, Scalar> acc;
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    auto [it, fresh] = acc.try_emplace({t.i, t.j, t.k}, t.c);
    if (!fresh) it->second += t.c;
  }
  ThreeTensor out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  return out;
}

namespace {

struct Layout {
  bool graded = false;
  int pair_sum = 0;
  std::vector<int> degree;
  std::function<bool(int)> paired;

  int deg(uint32_t i) const { return graded ? degree[i] : 0; }
};

Layout layout_of(const LieSuperAlgebra& g) {
  Layout l;
  l.degree.assign(g.dim(), 0);
  l.paired = [](int) { return true; };
  if (g.truncated()) {
    const Grading& gr = g.grading();
    l.graded = true;
    l.pair_sum = gr.pair_sum;
    l.degree = gr.degree;
    l.paired = [gr](int d) { return gr.paired(d); };
  }
  return l;
}

/// Δ = Σ e^i ⊗ e_i with B(e_j, e^i) = δ_ij, i.e. Δ^{ki} = (G^{-1})_{ki}, block
/// by block: rows of degree d pair only with columns of degree P - d.
std::vector<TensorTerm> dual_terms(const Layout& l, size_t dim,
                                   const std::function<Scalar(uint32_t, uint32_t)>& gram) {
  std::map<int, std::vector<uint32_t>> by_degree;
  for (uint32_t i = 0; i < dim; ++i) by_degree[l.deg(i)].push_back(i);
  std::vector<TensorTerm> out;
  for (const auto& [d, rows] : by_degree) {
    if (!l.paired(d)) continue;
    auto it = by_degree.find(l.pair_sum - d);
    const std::vector<uint32_t> empty;
    const auto& cols = it == by_degree.end() ? empty : it->second;
    if (cols.size() != rows.size())
      throw std::invalid_argument("Casimir: form is degenerate in degree " + std::to_string(d));
    Matrix a(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) a(r, c) = gram(rows[r], cols[c]);
    auto inv = inverse(a);
    if (!inv) throw std::invalid_argument("Casimir: form is degenerate in degree " + std::to_string(d));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c)
        if (!(*inv)(c, r).is_zero()) out.push_back({cols[c], rows[r], (*inv)(c, r)});
  }
  return out;
}

std::string term_label(const SuperSpace& s, uint32_t i, uint32_t j) { return s.label(i) + "⊗" + s.label(j); }

}  // namespace

TwoTensor casimir(const LieSuperAlgebra& g, const BilinearForm& b) {
  if (b.dim() != g.dim()) throw DimensionMismatch("Casimir: form and algebra dimensions differ");
  if (b.parity() != 0) throw std::invalid_argument("Casimir: the form '" + b.name() + "' is odd");
  const Layout l = layout_of(g);
  return TwoTensor::from_terms(dual_terms(l, g.dim(), [&](uint32_t i, uint32_t j) { return b.at(i, j); }));
}

CheckReport check_ad_invariance(const LieSuperAlgebra& g, const TwoTensor& delta) {
  CheckReport r;
  r.name = "Casimir ad-invariance";
  const auto d = static_cast<uint32_t>(g.dim());
  const Layout l = layout_of(g);
  std::vector<int> shifts{0};
  int lo = 0, hi = 0;
  if (l.graded) {
    shifts = g.grading().shifts;
    lo = g.grading().lo;
    hi = g.grading().hi;
  }
  for (uint32_t x = 0; x < d; ++x) {
    std::map<std::pair<uint32_t, uint32_t>, Scalar> acc;
    auto add = [&](uint32_t a, uint32_t b, const Scalar& c) {
      if (c.is_zero()) return;
      auto [it, fresh] = acc.try_emplace({a, b}, c);
      if (!fresh) it->second += c;
    };
    const Parity px = g.parity(x);
    for (const auto& t : delta.terms()) {
      for (const auto& [a, c] : g.structure(x, t.i)) add(a, t.j, c * t.c);
      const Scalar s = (px & g.parity(t.i)) ? -t.c : t.c;
      for (const auto& [b, c] : g.structure(x, t.j)) add(t.i, b, c * s);
    }
    // Degree blocks (d1, d2) that can receive contributions.
    const int dx = l.deg(x);
    std::map<std::pair<int, int>, bool> blocks;  // -> known
    for (int d1 = lo; d1 <= hi; ++d1) {
      for (int d2 = lo; d2 <= hi; ++d2) {
        bool reachable = false;
        for (int s : shifts) reachable |= (d1 + d2 == l.pair_sum + dx + s);
        if (reachable) blocks[{d1, d2}] = l.paired(d1) && l.paired(d2);
      }
    }
    std::map<std::pair<int, int>, uint32_t> bad;  // block -> first nonzero (a*d + b)
    for (const auto& [k, c] : acc) {
      if (c.is_zero()) continue;
      const std::pair blk{l.deg(k.first), l.deg(k.second)};
      auto it = blocks.find(blk);
      if (it != blocks.end() && !it->second) continue;
      // Off-band blocks receive nothing from a banded Δ, so anything there is exact.
      if (it == blocks.end()) blocks[blk] = true;
      if (!bad.count(blk)) bad[blk] = k.first * d + k.second;
    }
    for (const auto& [blk, known] : blocks) {
      if (!known) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      auto it = bad.find(blk);
      if (it == bad.end()) continue;
      const uint32_t a = it->second / d, b = it->second % d;
      r.record_violation({x, a, b}, "x = " + g.space().label(x) + ": coefficient " +
                                        acc[{a, b}].str() + " on " + term_label(g.space(), a, b));
    }
  }
  return r;
}

CheckReport check_casimir_supersymmetry(const LieSuperAlgebra& g, const TwoTensor& delta) {
  CheckReport r;
  r.name = "Casimir even and supersymmetric";
  const SuperSpace& s = g.space();
  const TwoTensor sw = delta.swapped(s);
  for (const auto& t : delta.terms()) {
    ++r.checked;
    if (s.parity(t.i) != s.parity(t.j)) {
      r.record_violation({t.i, t.j}, "odd term on " + term_label(s, t.i, t.j));
    } else if (sw.at(t.i, t.j) != t.c) {
      r.record_violation({t.i, t.j}, "τΔ differs on " + term_label(s, t.i, t.j) + ": " + t.c.str() + " vs " +
                                         sw.at(t.i, t.j).str());
    }
  }
  // Terms present only in τΔ.
  for (const auto& t : sw.terms()) {
    if (!delta.at(t.i, t.j).is_zero()) continue;
    ++r.checked;
    r.record_violation({t.i, t.j}, "τΔ has an extra term on " + term_label(s, t.i, t.j));
  }
  return r;
}

CheckReport check_basis_independence(const LieSuperAlgebra& g, const BilinearForm& b, uint64_t seed) {
  CheckReport r;
  r.name = "Casimir basis independence";
  const auto d = static_cast<uint32_t>(g.dim());
  const Layout l = layout_of(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);

  // f_i = (1 + L)(1 + U) e_i inside each (parity, degree) group; unipotent
  // factors keep the change of basis invertible.
  std::map<std::pair<int, int>, std::vector<uint32_t>> groups;
  for (uint32_t i = 0; i < d; ++i) groups[{g.parity(i), l.deg(i)}].push_back(i);
  std::vector<Vector> f(d);
  for (const auto& [key, idx] : groups) {
    const size_t n = idx.size();
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = 0; q < p; ++q) {
        lower(p, q) = Scalar(coef(rng));
        upper(q, p) = Scalar(coef(rng));
      }
    }
    const Matrix s = lower * upper;
    for (size_t c = 0; c < n; ++c) {
      VectorAccumulator acc;
      for (size_t p = 0; p < n; ++p) acc.add(idx[p], s(p, c));
      f[idx[c]] = acc.take();
    }
  }
  const TwoTensor direct = casimir(g, b);
  const auto primed =
      dual_terms(l, d, [&](uint32_t i, uint32_t j) { return b(f[i], f[j]); });
  std::vector<TensorTerm> back;
  for (const auto& t : primed)
    for (const auto& [a, x] : f[t.i])
      for (const auto& [c, y] : f[t.j]) back.push_back({a, c, t.c * x * y});
  const TwoTensor mapped = TwoTensor::from_terms(std::move(back));
  r.checked = direct.size();
  if (!(mapped == direct)) {
    std::map<std::pair<uint32_t, uint32_t>, bool> keys;
    for (const auto& t : direct.terms()) keys[{t.i, t.j}] = true;
    for (const auto& t : mapped.terms()) keys[{t.i, t.j}] = true;
    for (const auto& [k, _] : keys) {
      const Scalar x = direct.at(k.first, k.second), y = mapped.at(k.first, k.second);
      if (x != y)
        r.record_violation({k.first, k.second},
                           term_label(g.space(), k.first, k.second) + ": " + x.str() + " vs " + y.str());
    }
  }
  return r;
}

std::vector<SpectralSample> default_samples(size_t count) {
  std::vector<SpectralSample> out;
  for (size_t k = 0; k < count; ++k) {
    const auto n = static_cast<int64_t>(k);
    out.push_back({Scalar(n + 1), Scalar(-2 * n - 1), Scalar(Rational(n + 2, n + 3))});
  }
  return out;
}

std::vector<ThreeTensor> cybe_residual(const LieSuperAlgebra& g, const TwoTensor& delta,
                                       const std::vector<SpectralSample>& samples) {
  if (g.truncated()) throw std::invalid_argument("CYBE residual needs an untruncated algebra");
  for (const auto& s : samples)
    if (s.u == s.v || s.u == s.w || s.v == s.w)
      throw std::invalid_argument("CYBE residual: spectral parameters must be pairwise distinct");
  const auto d = static_cast<uint64_t>(g.dim());
  auto key = [d](uint64_t a, uint64_t b, uint64_t c) { return (a * d + b) * d + c; };
  std::unordered_map<uint64_t, Scalar> t1, t2, t3;
  auto add = [](std::unordered_map<uint64_t, Scalar>& m, uint64_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) it->second += c;
  };
  for (const auto& x : delta.terms()) {      // a = x.i, b = x.j
    for (const auto& y : delta.terms()) {    // c = y.i, d = y.j
      const Scalar c = x.c * y.c;
      const Scalar sc = (g.parity(x.j) & g.parity(y.i)) ? -c : c;
      for (const auto& [e, z] : g.structure(x.i, y.i)) add(t1, key(e, x.j, y.j), sc * z);
      for (const auto& [e, z] : g.structure(x.j, y.i)) add(t2, key(x.i, e, y.j), c * z);
      for (const auto& [e, z] : g.structure(x.j, y.j)) add(t3, key(x.i, y.i, e), sc * z);
    }
  }
  std::vector<ThreeTensor> out;
  for (const auto& s : samples) {
    const Scalar f1 = ((s.u - s.v) * (s.u - s.w)).inverse();
    const Scalar f2 = ((s.u - s.v) * (s.v - s.w)).inverse();
    const Scalar f3 = ((s.u - s.w) * (s.v - s.w)).inverse();
    std::vector<Term3> terms;
    auto emit = [&](const std::unordered_map<uint64_t, Scalar>& m, const Scalar& f) {
      for (const auto& [k, c] : m) {
        if (c.is_zero()) continue;
        terms.push_back({static_cast<uint32_t>(k / (d * d)), static_cast<uint32_t>((k / d) % d),
                         static_cast<uint32_t>(k % d), c * f});
      }
    };
    emit(t1, f1);
    emit(t2, f2);
    emit(t3, f3);
    out.push_back(ThreeTensor::from_terms(std::move(terms)));
  }
  return out;
}

json tensor_to_json(const TwoTensor& t, const SuperSpace& space) {
  json out = json::array();
  for (const auto& x : t.terms())
    out.push_back({{"i", x.i}, {"j", x.j}, {"label", term_label(space, x.i, x.j)}, {"coeff", scalar_to_json(x.c)}});
  return out;
}

json tensor_to_json(const ThreeTensor& t, const SuperSpace& space) {
  json out = json::array();
  for (const auto& x : t.terms())
    out.push_back({{"i", x.i},
                   {"j", x.j},
                   {"k", x.k},
                   {"label", space.label(x.i) + "⊗" + space.label(x.j) + "⊗" + space.label(x.k)},
                   {"coeff", scalar_to_json(x.c)}});
  return out;
}

}  // namespace manin
