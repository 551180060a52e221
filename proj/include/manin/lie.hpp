#pragma once

// Finite-dimensional Lie superalgebras given by structure constants, plus the
// band-limited variant used for truncated Laurent-type algebras.

#include <climits>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "manin/linalg.hpp"
#include "manin/report.hpp"

namespace manin {

/// Sorted list of integer degrees.
using DegreeSet = std::vector<int>;

DegreeSet merge_degrees(const DegreeSet& a, const DegreeSet& b);
bool contains_degree(const DegreeSet& s, int d);

constexpr int kUnbounded = INT_MAX / 4;

/// Integer grading of a truncated algebra.
///
/// Basis elements carry a degree in [lo, hi]. Brackets satisfy
/// deg[x,y] - deg x - deg y ∈ shifts, and invariant forms pair degree d
/// only with degree pair_sum - d.
struct Grading {
  std::vector<int> degree;
  int lo = 0;
  int hi = 0;
  std::vector<int> shifts{0};
  int pair_sum = -1;

  bool in_window(int d) const { return d >= lo && d <= hi; }
  /// In the window together with its pairing partner.
  bool paired(int d) const { return in_window(d) && in_window(pair_sum - d); }
  int paired_lo() const { return std::max(lo, pair_sum - hi); }
  int paired_hi() const { return std::min(hi, pair_sum - lo); }
  std::string window_str() const;
};

/// Result of bracketing in a possibly truncated algebra: the in-window part
/// and the degrees of any nonzero terms that fell outside the window.
struct Bracket {
  Vector value;
  DegreeSet escaped;
  bool exact() const { return escaped.empty(); }
};

class LieSuperAlgebra {
 public:
  LieSuperAlgebra() = default;
  LieSuperAlgebra(std::string name, SuperSpace space, std::vector<Vector> table);
  LieSuperAlgebra(std::string name, SuperSpace space, std::vector<Vector> table, Grading grading,
                  std::vector<DegreeSet> escapes);

  /// Tabulates [e_i, e_j] for all ordered basis pairs.
  static LieSuperAlgebra from_basis_bracket(std::string name, SuperSpace space,
                                            const std::function<Vector(uint32_t, uint32_t)>& f);

  const std::string& name() const { return name_; }
  const SuperSpace& space() const { return space_; }
  size_t dim() const { return space_.dim(); }
  Parity parity(size_t i) const { return space_.parity(i); }

  const Vector& structure(uint32_t i, uint32_t j) const { return table_[i * dim() + j]; }
  const DegreeSet& escapes(uint32_t i, uint32_t j) const;
  bool escaped(uint32_t i, uint32_t j) const { return !escapes(i, j).empty(); }

  bool truncated() const { return grading_.has_value(); }
  const Grading& grading() const;
  /// Degree shared by all terms of v; throws for non-homogeneous vectors.
  int degree_of(const Vector& v) const;

  Bracket bracket(const Vector& x, const Vector& y) const;
  /// Exact bracket; throws if the result would leave the truncation window.
  Vector exact_bracket(const Vector& x, const Vector& y) const;

  /// Copy with one structure constant replaced (used for fault injection).
  LieSuperAlgebra with_structure(uint32_t i, uint32_t j, Vector value) const;
  LieSuperAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  SuperSpace space_;
  std::vector<Vector> table_;
  std::optional<Grading> grading_;
  std::vector<DegreeSet> escapes_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

inline AlgebraPtr share(LieSuperAlgebra g) {
  return std::make_shared<const LieSuperAlgebra>(std::move(g));
}

/// Gram matrix of a bilinear form on an algebra basis, stored as sparse rows.
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(std::string name, Parity parity, std::vector<Vector> rows);
  static BilinearForm from_matrix(std::string name, Parity parity, const Matrix& gram);

  const std::string& name() const { return name_; }
  Parity parity() const { return parity_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  Scalar at(uint32_t i, uint32_t j) const { return rows_[i].at(j); }
  Scalar operator()(const Vector& x, const Vector& y) const;
  /// Row vector x^T G.
  Vector left(const Vector& x) const;
  Matrix matrix() const;
  bool is_zero() const;
  BilinearForm scaled(const Scalar& c) const;

 private:
  std::string name_;
  Parity parity_ = 0;
  std::vector<Vector> rows_;
};

class NotClosed : public std::runtime_error {
 public:
  NotClosed(uint32_t i, uint32_t j, Vector escaping, const std::string& what)
      : std::runtime_error(what), i(i), j(j), escaping(std::move(escaping)) {}
  uint32_t i, j;  // indices into the spanning basis
  Vector escaping;
};

class NotAnIdeal : public std::runtime_error {
 public:
  NotAnIdeal(uint32_t row, uint32_t basis, Vector escaping, const std::string& what)
      : std::runtime_error(what), row(row), basis(basis), escaping(std::move(escaping)) {}
  uint32_t row, basis;
  Vector escaping;
};

/// A bracket-closed subspace of a parent algebra with its induced structure.
///
/// The induced basis is the reduced row-echelon basis of the subspace; each
/// element is homogeneous in parity (and in degree, for truncated parents).
class SubalgebraHandle {
 public:
  SubalgebraHandle(AlgebraPtr parent, Subspace subspace, LieSuperAlgebra induced,
                   uint64_t skipped_pairs);

  const AlgebraPtr& parent() const { return parent_; }
  const Subspace& subspace() const { return subspace_; }
  const LieSuperAlgebra& algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  size_t dim() const { return subspace_.dim(); }
  const Vector& basis_vector(size_t k) const { return subspace_.basis()[k]; }

  Vector to_parent(const Vector& coords) const { return subspace_.combine(coords); }
  std::optional<Vector> from_parent(const Vector& v) const { return subspace_.coordinates(v); }

  /// Closure pairs that could not be evaluated inside the truncation window.
  uint64_t skipped_pairs() const { return skipped_pairs_; }

  /// Degrees the untruncated subalgebra occupies (truncated parents only).
  std::pair<int, int> degree_support() const { return support_; }
  SubalgebraHandle& with_degree_support(int lo, int hi) {
    support_ = {lo, hi};
    return *this;
  }

 private:
  AlgebraPtr parent_;
  Subspace subspace_;
  AlgebraPtr algebra_;
  uint64_t skipped_pairs_ = 0;
  std::pair<int, int> support_{-kUnbounded, kUnbounded};
};

/// Projection data for g / I with an explicit complement basis (the standard
/// basis vectors at non-pivot positions of I).
struct Quotient {
  AlgebraPtr parent;
  Subspace ideal;
  std::vector<uint32_t> complement;  // parent indices forming the quotient basis
  AlgebraPtr algebra;

  Vector project(const Vector& v) const;
  Vector lift(const Vector& coords) const;
};

CheckReport check_super_antisymmetry(const LieSuperAlgebra& g);
/// Super-Jacobi over basis triples. When antisymmetry holds the Jacobiator is
/// graded-alternating, so sorted triples i <= j <= k cover every ordered one;
/// otherwise all ordered triples are visited.
CheckReport check_super_jacobi(const LieSuperAlgebra& g);

/// Gram entry (i, j) = str(ad e_i ∘ ad e_j).
BilinearForm killing_form(const LieSuperAlgebra& g);

Subspace center(const LieSuperAlgebra& g);

SubalgebraHandle subalgebra_from_span(const AlgebraPtr& g, const std::vector<Vector>& vectors,
                                      const std::string& name = {});
SubalgebraHandle subalgebra_from_subspace(const AlgebraPtr& g, Subspace subspace,
                                          const std::string& name = {});
SubalgebraHandle derived_subalgebra(const AlgebraPtr& g, const std::string& name = {});

/// Lie subalgebra generated by the given vectors (bracket closure).
SubalgebraHandle generated_subalgebra(const AlgebraPtr& g, const std::vector<Vector>& generators,
                                      const std::string& name = {}, size_t max_dim = SIZE_MAX);

Quotient quotient(const AlgebraPtr& g, const Subspace& ideal, const std::string& name = {});

struct FormReport {
  Parity parity = 0;
  CheckReport parity_consistent;
  CheckReport supersymmetric;
  CheckReport invariant;
  CheckReport nondegenerate;
  size_t rank = 0;
  size_t paired_dim = 0;  // size of the block whose rank was examined

  bool all_ok() const {
    return parity_consistent.ok() && supersymmetric.ok() && invariant.ok() && nondegenerate.ok();
  }
};

FormReport form_properties(const LieSuperAlgebra& g, const BilinearForm& b);

/// Radical {x : B(x, y) = 0 for all y}.
Subspace radical(const BilinearForm& b);

/// Restriction of B to a subalgebra's basis.
BilinearForm restrict_form(const BilinearForm& b, const SubalgebraHandle& h,
                           const std::string& name = {});
/// B evaluated on the complement lifts of a quotient. Throws unless the ideal
/// lies in the radical, so the result is the honest induced form.
BilinearForm pushdown_form(const BilinearForm& b, const Quotient& q, const std::string& name = {});
/// Same Gram construction without the radical requirement; only meaningful
/// after restricting to a subalgebra on which representatives do not matter.
BilinearForm representative_form(const BilinearForm& b, const Quotient& q,
                                 const std::string& name = {});

/// Basis of the space of invariant bilinear forms of the given parity that are
/// supersymmetric, as Gram matrices.
std::vector<BilinearForm> invariant_forms(const LieSuperAlgebra& g, Parity parity);

/// Readable label for a vector in terms of a space's basis labels.
std::string vector_label(const Vector& v, const SuperSpace& space);

}  // namespace manin
