#include "manin/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace manin {

SuperSpace::SuperSpace(std::vector<std::string> labels, std::vector<Parity> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size()) {
    throw DimensionMismatch("SuperSpace: label and parity lists differ in length");
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("SuperSpace: duplicate basis label");
  }
  for (Parity p : parities_) {
    if (p > 1) throw std::invalid_argument("SuperSpace: parity must be 0 or 1");
  }
}

size_t SuperSpace::even_dim() const {
  return static_cast<size_t>(std::count(parities_.begin(), parities_.end(), Parity{0}));
}

// ---------------------------------------------------------------- Vector

Vector Vector::unit(uint32_t i, Scalar c) {
  Vector v;
  if (!c.is_zero()) v.terms_.emplace_back(i, std::move(c));
  return v;
}

Vector Vector::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Vector v;
  v.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
    } else {
      if (!v.terms_.empty() && v.terms_.back().second.is_zero()) v.terms_.pop_back();
      v.terms_.push_back(std::move(t));
    }
  }
  if (!v.terms_.empty() && v.terms_.back().second.is_zero()) v.terms_.pop_back();
  return v;
}

Vector Vector::from_dense(const std::vector<Scalar>& coords) {
  Vector v;
  for (uint32_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) v.terms_.emplace_back(i, coords[i]);
  }
  return v;
}

Scalar Vector::at(uint32_t i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, uint32_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return Scalar();
}

std::vector<Scalar> Vector::dense(size_t dim) const {
  std::vector<Scalar> out(dim);
  for (const auto& [i, c] : terms_) {
    if (i >= dim) throw DimensionMismatch("Vector::dense: index out of range");
    out[i] = c;
  }
  return out;
}

void Vector::axpy(const Scalar& c, const Vector& other) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Vector Vector::scaled(const Scalar& c) const {
  Vector v;
  if (c.is_zero()) return v;
  v.terms_.reserve(terms_.size());
  for (const auto& [i, x] : terms_) v.terms_.emplace_back(i, x * c);
  return v;
}

bool operator<(const Vector& a, const Vector& b) {
  // Lexicographic on (index, re, im); only used for deterministic ordering.
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t k = 0; k < n; ++k) {
    const auto& [ia, ca] = a.terms_[k];
    const auto& [ib, cb] = b.terms_[k];
    if (ia != ib) return ia < ib;
    if (!(ca.re() == cb.re())) return ca.re() < cb.re();
    if (!(ca.im() == cb.im())) return ca.im() < cb.im();
  }
  return a.terms_.size() < b.terms_.size();
}

std::optional<Parity> Vector::parity(const SuperSpace& space) const {
  if (terms_.empty()) return Parity{0};
  Parity p = space.parity(terms_.front().first);
  for (const auto& t : terms_) {
    if (space.parity(t.first) != p) return std::nullopt;
  }
  return p;
}

std::string Vector::str(const SuperSpace& space) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    std::string coeff = c.str();
    const std::string& label = i < space.dim() ? space.label(i) : "e" + std::to_string(i);
    if (!c.is_real() && !c.re().is_zero()) coeff = "(" + coeff + ")";
    if (c.is_one()) {
      os << (first ? "" : "+") << label;
    } else if (c == Scalar(-1)) {
      os << "-" << label;
    } else {
      if (!first && coeff[0] != '-') os << "+";
      os << coeff << "*" << label;
    }
    first = false;
  }
  return os.str();
}

void VectorAccumulator::add(const Vector& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) terms_.emplace_back(i, x * c);
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionMismatch("Matrix::from_rows: ragged rows");
    for (size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("Matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix sum shape mismatch");
  Matrix out = *this;
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = x * c;
  return out;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (size_t k = 0; k < std::min(rows_, cols_); ++k) s += (*this)(k, k);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<Vector> Matrix::sparse_rows() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    std::vector<Scalar> row(data_.begin() + static_cast<long>(r * cols_),
                            data_.begin() + static_cast<long>((r + 1) * cols_));
    out.push_back(Vector::from_dense(row));
  }
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  VectorAccumulator acc;
  for (const auto& [c, v] : x) {
    if (c >= cols_) throw DimensionMismatch("Matrix::apply: index out of range");
    for (size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) acc.add(static_cast<uint32_t>(r), a * v);
    }
  }
  return acc.take();
}

// ---------------------------------------------------------------- Subspace

Vector Subspace::reduce(Vector v) const {
  if (rows_.empty() || v.is_zero()) return v;
  // Pivot columns are zero in every other row, so the pivot coefficients of
  // the input fix the whole projection.
  std::vector<std::pair<size_t, Scalar>> hits;
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i) hits.emplace_back(size_t(it - pivots_.begin()), c);
  }
  if (hits.empty()) return v;
  VectorAccumulator acc;
  acc.add(v, Scalar(1));
  for (const auto& [k, c] : hits) acc.add(rows_[k], -c);
  return acc.take();
}

bool Subspace::insert(Vector v) {
  if (!v.is_zero() && v.max_index() >= ambient_dim_) {
    throw DimensionMismatch("Subspace::insert: vector outside ambient space");
  }
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  v = v.scaled(v.leading_coeff().inverse());
  const uint32_t pivot = v.leading_index();
  for (auto& row : rows_) {
    Scalar c = row.at(pivot);
    if (!c.is_zero()) row.axpy(-c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto k = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + k, std::move(v));
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!reduce(v).is_zero()) return std::nullopt;
  VectorAccumulator acc;
  for (const auto& [i, c] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i) acc.add(static_cast<uint32_t>(it - pivots_.begin()), c);
  }
  return acc.take();
}

Vector Subspace::combine(const Vector& coords) const {
  VectorAccumulator acc;
  for (const auto& [k, c] : coords) {
    if (k >= rows_.size()) throw DimensionMismatch("Subspace::combine: coordinate out of range");
    acc.add(rows_[k], c);
  }
  return acc.take();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const Vector& r) { return other.contains(r); });
}

Subspace span(const std::vector<Vector>& vectors, size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace span(const std::vector<Vector>& vectors, const SuperSpace& ambient) {
  return span(vectors, ambient.dim());
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("intersect: ambient mismatch");
  // Unknowns: alpha_0..alpha_{du-1}, beta_0..beta_{dw-1}; sum alpha u - sum beta w = 0.
  const size_t du = u.dim(), dw = w.dim();
  std::vector<VectorAccumulator> eqs(u.ambient_dim());
  for (size_t k = 0; k < du; ++k)
    for (const auto& [i, c] : u.basis()[k]) eqs[i].add(static_cast<uint32_t>(k), c);
  for (size_t k = 0; k < dw; ++k)
    for (const auto& [i, c] : w.basis()[k]) eqs[i].add(static_cast<uint32_t>(du + k), -c);
  std::vector<Vector> rows;
  for (auto& e : eqs) {
    if (!e.empty()) rows.push_back(e.take());
  }
  Subspace ker = kernel(rows, du + dw);
  Subspace out(u.ambient_dim());
  for (const auto& kv : ker.basis()) {
    VectorAccumulator alpha;
    for (const auto& [k, c] : kv) {
      if (k < du) alpha.add(static_cast<uint32_t>(k), c);
    }
    out.insert(u.combine(alpha.take()));
  }
  return out;
}

DirectSumResult direct_sum_check(const Subspace& u, const Subspace& w, const SuperSpace& ambient) {
  if (u.ambient_dim() != ambient.dim() || w.ambient_dim() != ambient.dim()) {
    throw DimensionMismatch("direct_sum_check: subspaces live in a different ambient space");
  }
  DirectSumResult r;
  r.dimension_deficit = static_cast<long>(ambient.dim()) - static_cast<long>(u.dim() + w.dim());
  Subspace both = intersect(u, w);
  if (both.dim() > 0) r.intersection_witness = both.basis().front();
  r.holds = r.dimension_deficit == 0 && !r.intersection_witness;
  return r;
}

Subspace kernel(const std::vector<Vector>& equations, size_t num_unknowns) {
  Subspace rref = span(equations, num_unknowns);
  const auto& piv = rref.pivots();
  Subspace out(num_unknowns);
  size_t p = 0;
  for (uint32_t f = 0; f < num_unknowns; ++f) {
    if (p < piv.size() && piv[p] == f) {
      ++p;
      continue;
    }
    VectorAccumulator acc;
    acc.add(f, Scalar(1));
    for (size_t k = 0; k < rref.dim(); ++k) {
      Scalar c = rref.basis()[k].at(f);
      if (!c.is_zero()) acc.add(piv[k], -c);
    }
    out.insert(acc.take());
  }
  return out;
}

size_t rank(const std::vector<Vector>& rows, size_t num_cols) { return span(rows, num_cols).dim(); }

size_t rank(const Matrix& m) { return rank(m.sparse_rows(), m.cols()); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (!b.is_zero() && b.max_index() >= a.rows()) throw DimensionMismatch("solve_linear: rhs shape");
  const size_t n = a.cols();
  std::vector<Vector> rows = a.sparse_rows();
  for (size_t r = 0; r < rows.size(); ++r) {
    Scalar c = b.at(static_cast<uint32_t>(r));
    if (!c.is_zero()) rows[r].axpy(Scalar(1), Vector::unit(static_cast<uint32_t>(n), c));
  }
  Subspace rref = span(rows, n + 1);
  VectorAccumulator x;
  for (size_t k = 0; k < rref.dim(); ++k) {
    uint32_t p = rref.pivots()[k];
    if (p == n) return std::nullopt;
    x.add(p, rref.basis()[k].at(static_cast<uint32_t>(n)));
  }
  return x.take();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  const size_t n = m.rows();
  std::vector<Vector> rows = m.sparse_rows();
  for (size_t r = 0; r < n; ++r) rows[r].axpy(Scalar(1), Vector::unit(static_cast<uint32_t>(n + r)));
  Subspace rref = span(rows, 2 * n);
  if (rref.dim() != n || rref.pivots().back() >= n) return std::nullopt;
  Matrix out(n, n);
  for (size_t k = 0; k < n; ++k) {
    for (const auto& [c, v] : rref.basis()[k]) {
      if (c >= n) out(k, c - n) = v;
    }
  }
  return out;
}

}  // namespace manin
