#pragma once

// Parity-graded exact linear algebra: sparse vectors, reduced row-echelon
// subspaces, kernels and solves over Q(i).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "manin/scalar.hpp"

namespace manin {

using Parity = uint8_t;  // 0 even, 1 odd

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered basis labels with a parity per label.
class SuperSpace {
 public:
  SuperSpace() = default;
  SuperSpace(std::vector<std::string> labels, std::vector<Parity> parities);

  size_t dim() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  Parity parity(size_t i) const { return parities_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Parity>& parities() const { return parities_; }
  size_t even_dim() const;
  size_t odd_dim() const { return dim() - even_dim(); }

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
};

/// Sparse coordinate vector. Terms are sorted by index and never hold zeros,
/// so structural equality is mathematical equality.
class Vector {
 public:
  using Term = std::pair<uint32_t, Scalar>;

  Vector() = default;
  static Vector unit(uint32_t i, Scalar c = Scalar(1));
  /// Builds from unsorted, possibly repeated terms.
  static Vector from_terms(std::vector<Term> terms);
  static Vector from_dense(const std::vector<Scalar>& coords);

  bool is_zero() const { return terms_.empty(); }
  size_t nnz() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  uint32_t leading_index() const { return terms_.front().first; }
  const Scalar& leading_coeff() const { return terms_.front().second; }
  uint32_t max_index() const { return terms_.back().first; }

  Scalar at(uint32_t i) const;
  std::vector<Scalar> dense(size_t dim) const;

  /// this += c * other
  void axpy(const Scalar& c, const Vector& other);
  Vector scaled(const Scalar& c) const;
  Vector operator-() const { return scaled(Scalar(-1)); }
  friend Vector operator+(Vector a, const Vector& b) {
    a.axpy(Scalar(1), b);
    return a;
  }
  friend Vector operator-(Vector a, const Vector& b) {
    a.axpy(Scalar(-1), b);
    return a;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Vector& a, const Vector& b);

  /// Parity of the support, or nullopt if the vector mixes parities. Zero is even.
  std::optional<Parity> parity(const SuperSpace& space) const;
  std::string str(const SuperSpace& space) const;

 private:
  std::vector<Term> terms_;
};

inline bool operator==(const Vector::Term& a, const Vector::Term& b) {
  return a.first == b.first && a.second == b.second;
}

/// Accumulates terms cheaply; call take() to get a canonical Vector.
class VectorAccumulator {
 public:
  void add(uint32_t i, const Scalar& c) {
    if (!c.is_zero()) terms_.emplace_back(i, c);
  }
  void add(const Vector& v, const Scalar& c);
  bool empty() const { return terms_.empty(); }
  Vector take() { return Vector::from_terms(std::move(terms_)); }

 private:
  std::vector<Vector::Term> terms_;
};

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Scalar trace() const;
  bool is_zero() const;
  std::vector<Vector> sparse_rows() const;
  Vector apply(const Vector& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Subspace of an ambient coordinate space held in reduced row-echelon form:
/// rows are nonzero, pivots strictly increase, each pivot entry is 1 and is
/// the only nonzero in its column.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  size_t ambient_dim() const { return ambient_dim_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

  /// Inserts v; returns false if v was already in the span.
  bool insert(Vector v);
  /// v minus its projection along the pivots (zero iff v is in the subspace).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  /// Coordinates of v in basis(), or nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector combine(const Vector& coords) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  size_t ambient_dim_ = 0;
  std::vector<Vector> rows_;
  std::vector<uint32_t> pivots_;
};

/// Reduced basis of span(vectors); throws DimensionMismatch if a vector has
/// coordinates outside the ambient space.
Subspace span(const std::vector<Vector>& vectors, const SuperSpace& ambient);
Subspace span(const std::vector<Vector>& vectors, size_t ambient_dim);

struct DirectSumResult {
  bool holds = false;
  std::optional<Vector> intersection_witness;
  /// dim ambient - (dim U + dim W); zero when the dimensions add up.
  long dimension_deficit = 0;
};

DirectSumResult direct_sum_check(const Subspace& u, const Subspace& w, const SuperSpace& ambient);

Subspace intersect(const Subspace& u, const Subspace& w);

/// Null space of the linear map whose rows (equations) are given, over
/// unknowns 0..num_unknowns-1. The returned subspace lives in unknown space.
Subspace kernel(const std::vector<Vector>& equations, size_t num_unknowns);

size_t rank(const std::vector<Vector>& rows, size_t num_cols);
size_t rank(const Matrix& m);

/// Some x with A x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace manin
