#include "manin/matrix_families.hpp"

#include <stdexcept>

namespace manin {

namespace {

std::string unit_label(char prefix, size_t i, size_t j, size_t bound) {
  if (bound <= 9) return std::string(1, prefix) + std::to_string(i + 1) + std::to_string(j + 1);
  return std::string(1, prefix) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Vector unit(size_t i) { return Vector::unit(static_cast<uint32_t>(i)); }

}  // namespace

// ---------------------------------------------------------------- SuperMatrix

SuperMatrix::SuperMatrix(size_t m, size_t n, Matrix data, Parity parity)
    : m(m), n(n), data(std::move(data)), parity(parity) {
  if (this->data.rows() != m + n || this->data.cols() != m + n) {
    throw DimensionMismatch("SuperMatrix: data is not (m+n) x (m+n)");
  }
  for (size_t i = 0; i < m + n; ++i) {
    for (size_t j = 0; j < m + n; ++j) {
      Parity p = (i >= m) != (j >= m);
      if (p != parity && !this->data(i, j).is_zero()) {
        throw std::invalid_argument("SuperMatrix: entry violates declared parity");
      }
    }
  }
}

SuperMatrix SuperMatrix::from_vector(size_t m, size_t n, const Vector& v) {
  const size_t d = m + n;
  Matrix x(d, d);
  std::optional<Parity> par;
  for (const auto& [k, c] : v) {
    if (k >= d * d) throw DimensionMismatch("SuperMatrix::from_vector: index out of range");
    size_t i = k / d, j = k % d;
    Parity p = (i >= m) != (j >= m);
    if (par && *par != p) throw std::invalid_argument("SuperMatrix::from_vector: mixed parity");
    par = p;
    x(i, j) = c;
  }
  return {m, n, std::move(x), par.value_or(0)};
}

Matrix SuperMatrix::block_a() const {
  Matrix a(m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) a(i, j) = data(i, j);
  return a;
}

Matrix SuperMatrix::block_d() const {
  Matrix d(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d(i, j) = data(m + i, m + j);
  return d;
}

Vector SuperMatrix::to_vector() const {
  const size_t d = m + n;
  VectorAccumulator acc;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) acc.add(static_cast<uint32_t>(i * d + j), data(i, j));
  return acc.take();
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (m != o.m || n != o.n) throw DimensionMismatch("SuperMatrix product: format mismatch");
  return {m, n, data * o.data, static_cast<Parity>(parity ^ o.parity)};
}

Scalar supertrace(const SuperMatrix& x) {
  return x.block_a().trace() - sign_of(x.parity) * x.block_d().trace();
}

// ---------------------------------------------------------------- QueerMatrix

QueerMatrix::QueerMatrix(Matrix a, Matrix b, Parity parity)
    : a(std::move(a)), b(std::move(b)), parity(parity) {
  if (this->a.rows() != this->a.cols() || this->b.rows() != this->a.rows() ||
      this->b.cols() != this->a.rows()) {
    throw DimensionMismatch("QueerMatrix: blocks must be n x n");
  }
  if ((parity == 0 && !this->b.is_zero()) || (parity == 1 && !this->a.is_zero())) {
    throw std::invalid_argument("QueerMatrix: blocks violate declared parity");
  }
}

QueerMatrix QueerMatrix::operator*(const QueerMatrix& o) const {
  return {a * o.a + b * o.b, a * o.b + b * o.a, static_cast<Parity>(parity ^ o.parity)};
}

SuperMatrix QueerMatrix::embed() const {
  const size_t k = n();
  Matrix x(2 * k, 2 * k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      x(i, j) = a(i, j);
      x(k + i, k + j) = a(i, j);
      x(i, k + j) = b(i, j);
      x(k + i, j) = b(i, j);
    }
  }
  return {k, k, std::move(x), parity};
}

Scalar queertrace(const QueerMatrix& y) { return y.b.trace(); }

// ---------------------------------------------------------------- gl(m|n)

size_t gl_index(size_t m, size_t n, size_t i, size_t j) { return i * (m + n) + j; }

AlgebraPtr build_gl(size_t m, size_t n) {
  const size_t d = m + n;
  if (d == 0) throw std::invalid_argument("gl(m|n) needs m + n >= 1");
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      labels.push_back(unit_label('E', i, j, d));
      par.push_back((i >= m) != (j >= m));
    }
  }
  SuperSpace space(std::move(labels), std::move(par));
  auto p = [&](size_t i, size_t j) { return static_cast<int>((i >= m) != (j >= m)); };
  // [E_ij, E_kl] = δ_jk E_il - (-1)^{p(E_ij) p(E_kl)} δ_li E_kj
  auto f = [&](uint32_t x, uint32_t y) {
    size_t i = x / d, j = x % d, k = y / d, l = y % d;
    VectorAccumulator acc;
    if (j == k) acc.add(static_cast<uint32_t>(i * d + l), Scalar(1));
    if (l == i) acc.add(static_cast<uint32_t>(k * d + j), -sign_of(p(i, j) * p(k, l)));
    return acc.take();
  };
  std::string name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return share(LieSuperAlgebra::from_basis_bracket(name, std::move(space), f));
}

BilinearForm str_form(size_t m, size_t n) {
  const size_t d = m + n;
  // str(E_ij E_kl) = δ_jk δ_il s(i), s(i) = +1 on the even block, -1 on the odd one.
  std::vector<Vector> rows(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      rows[i * d + j] = Vector::unit(static_cast<uint32_t>(j * d + i), Scalar(i < m ? 1 : -1));
  return {"str", 0, std::move(rows)};
}

SubalgebraHandle build_sl(const AlgebraPtr& gl, size_t m, size_t n) {
  const size_t d = m + n;
  std::vector<Vector> vs;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (i != j) vs.push_back(unit(i * d + j));
  for (size_t i = 0; i + 1 < d; ++i) {
    Scalar s = (i + 1 == m) ? Scalar(1) : Scalar(-1);
    vs.push_back(unit(i * d + i) + unit((i + 1) * d + i + 1).scaled(s));
  }
  return subalgebra_from_span(gl, vs, "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- q(n)

QueerMatrix q_element(size_t n, const Vector& coords) {
  Matrix a(n, n), b(n, n);
  std::optional<Parity> par;
  for (const auto& [k, c] : coords) {
    if (k >= 2 * n * n) throw DimensionMismatch("q_element: index out of range");
    Parity p = k >= n * n;
    if (par && *par != p) throw std::invalid_argument("q_element: mixed parity");
    par = p;
    size_t r = k % (n * n);
    (p ? b : a)(r / n, r % n) = c;
  }
  return {std::move(a), std::move(b), par.value_or(0)};
}

namespace {

Vector q_coords(const QueerMatrix& y) {
  const size_t n = y.n();
  VectorAccumulator acc;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      acc.add(static_cast<uint32_t>(i * n + j), y.a(i, j));
      acc.add(static_cast<uint32_t>(n * n + i * n + j), y.b(i, j));
    }
  }
  return acc.take();
}

}  // namespace

AlgebraPtr build_q(size_t n) {
  if (n == 0) throw std::invalid_argument("q(n) needs n >= 1");
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (char c : {'a', 'b'}) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        labels.push_back(unit_label(c, i, j, n));
        par.push_back(c == 'b');
      }
    }
  }
  SuperSpace space(std::move(labels), std::move(par));
  auto f = [&](uint32_t x, uint32_t y) {
    QueerMatrix u = q_element(n, Vector::unit(x)), v = q_element(n, Vector::unit(y));
    Vector uv = q_coords(u * v), vu = q_coords(v * u);
    uv.axpy(-sign_of(u.parity * v.parity), vu);
    return uv;
  };
  return share(LieSuperAlgebra::from_basis_bracket("q(" + std::to_string(n) + ")", std::move(space), f));
}

BilinearForm qtr_form(size_t n) {
  const size_t d = 2 * n * n;
  std::vector<Vector> rows(d);
  for (uint32_t x = 0; x < d; ++x) {
    VectorAccumulator acc;
    QueerMatrix u = q_element(n, Vector::unit(x));
    for (uint32_t y = 0; y < d; ++y) acc.add(y, queertrace(u * q_element(n, Vector::unit(y))));
    rows[x] = acc.take();
  }
  return {"qtr", 1, std::move(rows)};
}

SubalgebraHandle q_in_gl(const AlgebraPtr& gl, size_t n) {
  std::vector<Vector> vs;
  for (uint32_t x = 0; x < 2 * n * n; ++x) vs.push_back(q_element(n, Vector::unit(x)).embed().to_vector());
  return subalgebra_from_span(gl, vs, "q(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- pe(n), spe(n)

namespace {

std::vector<Vector> pe_constraints(size_t n) {
  const size_t d = 2 * n;
  auto idx = [&](size_t i, size_t j) { return static_cast<uint32_t>(i * d + j); };
  std::vector<Vector> eqs;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      // D = -A^T
      eqs.push_back(Vector::from_terms({{idx(i, j), Scalar(1)}, {idx(n + j, n + i), Scalar(1)}}));
      // B = B^T
      if (i < j) eqs.push_back(Vector::from_terms({{idx(i, n + j), Scalar(1)}, {idx(j, n + i), Scalar(-1)}}));
      // C = -C^T
      if (i <= j) eqs.push_back(Vector::from_terms({{idx(n + i, j), Scalar(1)}, {idx(n + j, i), Scalar(1)}}));
    }
  }
  return eqs;
}

Vector str_equation(size_t n) {
  const size_t d = 2 * n;
  VectorAccumulator acc;
  for (size_t i = 0; i < n; ++i) {
    acc.add(static_cast<uint32_t>(i * d + i), Scalar(1));
    acc.add(static_cast<uint32_t>((n + i) * d + n + i), Scalar(-1));
  }
  return acc.take();
}

}  // namespace

SubalgebraHandle build_pe(const AlgebraPtr& gl, size_t n) {
  if (gl->dim() != 4 * n * n) throw DimensionMismatch("build_pe: expects gl(n|n)");
  return subalgebra_from_subspace(gl, kernel(pe_constraints(n), 4 * n * n), "pe(" + std::to_string(n) + ")");
}

SubalgebraHandle build_spe(const AlgebraPtr& gl, size_t n) {
  if (gl->dim() != 4 * n * n) throw DimensionMismatch("build_spe: expects gl(n|n)");
  auto eqs = pe_constraints(n);
  eqs.push_back(str_equation(n));
  return subalgebra_from_subspace(gl, kernel(eqs, 4 * n * n), "spe(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- psl(n|n), psq(n)

Vector PslModel::to_psl(const Vector& v) const {
  auto c = sl->from_parent(v);
  if (!c) throw std::invalid_argument("to_psl: vector is not supertraceless");
  return psl.project(*c);
}

SubalgebraHandle PslModel::image(const std::vector<Vector>& gl_vectors, const std::string& name) const {
  std::vector<Vector> vs;
  vs.reserve(gl_vectors.size());
  for (const auto& v : gl_vectors) vs.push_back(to_psl(v));
  return subalgebra_from_span(psl.algebra, vs, name);
}

PslModel build_psl(size_t n) {
  if (n == 0) throw std::invalid_argument("psl(n|n) needs n >= 1");
  PslModel out;
  out.n = n;
  out.gl = build_gl(n, n);
  out.sl = std::make_shared<SubalgebraHandle>(build_sl(out.gl, n, n));
  Subspace z = center(out.sl->algebra());
  std::string name = "psl(" + std::to_string(n) + "|" + std::to_string(n) + ")";
  out.psl = quotient(out.sl->algebra_ptr(), z, name);
  BilinearForm on_sl = restrict_form(str_form(n, n), *out.sl, "str");
  out.form = pushdown_form(on_sl, out.psl, "str");
  return out;
}

PsqModel build_psq(size_t n) {
  PsqModel out;
  out.q = build_q(n);
  out.sq = std::make_shared<SubalgebraHandle>(derived_subalgebra(out.q, "sq(" + std::to_string(n) + ")"));
  Subspace z = center(out.sq->algebra());
  out.psq = quotient(out.sq->algebra_ptr(), z, "psq(" + std::to_string(n) + ")");
  out.form = pushdown_form(restrict_form(qtr_form(n), *out.sq, "qtr"), out.psq, "qtr");
  return out;
}

Family build_family(const std::string& name, size_t m, size_t n) {
  const bool square = name != "gl" && name != "sl";
  if (square && m != n && m != 0) throw std::invalid_argument(name + " requires m = n");
  if (n == 0 || (!square && m + n == 0)) throw std::invalid_argument("family dimensions must be positive");
  if (name == "gl") return {build_gl(m, n), str_form(m, n)};
  if (name == "sl") {
    auto gl = build_gl(m, n);
    auto sl = build_sl(gl, m, n);
    return {sl.algebra_ptr(), restrict_form(str_form(m, n), sl, "str")};
  }
  if (name == "psl") {
    auto p = build_psl(n);
    return {p.psl.algebra, p.form};
  }
  if (name == "q") return {build_q(n), qtr_form(n)};
  if (name == "psq") {
    auto p = build_psq(n);
    return {p.psq.algebra, p.form};
  }
  if (name == "pe") return {build_pe(build_gl(n, n), n).algebra_ptr(), std::nullopt};
  if (name == "spe") return {build_spe(build_gl(n, n), n).algebra_ptr(), std::nullopt};
  throw std::invalid_argument("unknown matrix family '" + name + "'");
}

// ---------------------------------------------------------------- complement patterns

std::vector<Vector> dual_pattern(const std::string& example, size_t n) {
  const size_t d = 2 * n;
  auto e = [&](size_t i, size_t j) { return unit(i * d + j); };
  const bool primed = example == "2.1p" || example == "2.2p";
  const bool first = example == "2.1" || example == "2.1p";
  if (!first && example != "2.2" && example != "2.2p") {
    throw std::invalid_argument("no complement pattern for example '" + example + "'");
  }
  std::vector<Vector> vs, diag;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i < j) vs.push_back(e(i, j));                      // X strictly upper
      if (first ? i > j : i < j) vs.push_back(e(n + i, n + j));  // Z lower / T upper
      if (first) {
        vs.push_back(e(i, n + j));  // Y arbitrary
      } else {
        if (i < j) vs.push_back(e(i, n + j));   // Y strictly upper
        if (i <= j) vs.push_back(e(n + i, j));  // Z upper
      }
    }
    diag.push_back(e(i, i) + e(n + i, n + i).scaled(Scalar(first ? -1 : 1)));
  }
  if (primed) {
    for (size_t i = 0; i + 1 < n; ++i) vs.push_back(diag[i] - diag[i + 1]);
  } else {
    vs.insert(vs.end(), diag.begin(), diag.end());
  }
  return vs;
}

SubalgebraHandle dual_subalgebra(const std::string& example, size_t n, const AlgebraPtr& gl) {
  if (example != "2.1" && example != "2.2") {
    throw std::invalid_argument("dual_subalgebra: '" + example + "' is not a gl(n|n) pattern");
  }
  if (gl->dim() != 4 * n * n) throw DimensionMismatch("dual_subalgebra: expects gl(n|n)");
  return subalgebra_from_span(gl, dual_pattern(example, n), "a*[" + example + "]");
}

SubalgebraHandle dual_subalgebra(const std::string& example, const PslModel& psl) {
  if (example != "2.1p" && example != "2.2p") {
    throw std::invalid_argument("dual_subalgebra: '" + example + "' is not a psl(n|n) pattern");
  }
  return psl.image(dual_pattern(example, psl.n), "a*[" + example + "]");
}

}  // namespace manin
