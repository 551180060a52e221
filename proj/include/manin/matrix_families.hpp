#pragma once

// Matrix Lie superalgebras gl, sl, psl, q, psq, pe, spe and the
// triangular-pattern subalgebras that complement q(n) and pe(n).

#include <optional>
#include <string>

#include "manin/lie.hpp"

namespace manin {

/// Homogeneous supermatrix (A B; C D) of format (m|n).
struct SuperMatrix {
  size_t m = 0, n = 0;
  Matrix data;  // (m+n) x (m+n)
  Parity parity = 0;

  SuperMatrix() = default;
  SuperMatrix(size_t m, size_t n, Matrix data, Parity parity);
  /// Builds from a gl(m|n) coordinate vector (index i*(m+n)+j holds entry (i,j)).
  static SuperMatrix from_vector(size_t m, size_t n, const Vector& v);

  Matrix block_a() const;
  Matrix block_d() const;
  Vector to_vector() const;
  SuperMatrix operator*(const SuperMatrix& o) const;
};

/// str X = tr A - (-1)^{p(X)} tr D.
Scalar supertrace(const SuperMatrix& x);

/// Element of q(n) stored by its blocks: (A B; B A).
struct QueerMatrix {
  Matrix a, b;
  Parity parity = 0;

  QueerMatrix() = default;
  QueerMatrix(Matrix a, Matrix b, Parity parity);
  size_t n() const { return a.rows(); }
  /// (A, B)(A', B') = (AA' + BB', AB' + BA').
  QueerMatrix operator*(const QueerMatrix& o) const;
  SuperMatrix embed() const;
};

/// qtr Y = tr B.
Scalar queertrace(const QueerMatrix& y);

// ---- gl(m|n) ----------------------------------------------------------------

/// Basis E_ij in row-major order; E_ij is odd iff exactly one of i, j >= m.
AlgebraPtr build_gl(size_t m, size_t n);
size_t gl_index(size_t m, size_t n, size_t i, size_t j);
/// B(x, y) = str(xy).
BilinearForm str_form(size_t m, size_t n);

SubalgebraHandle build_sl(const AlgebraPtr& gl, size_t m, size_t n);

// ---- q(n) -------------------------------------------------------------------

/// Basis a_ij (even, A-block units) then b_ij (odd, B-block units).
AlgebraPtr build_q(size_t n);
/// B(x, y) = qtr(xy); an odd form.
BilinearForm qtr_form(size_t n);
/// Image of q(n) in gl(n|n): a_ij -> E_ij + E_{n+i,n+j}, b_ij -> E_{i,n+j} + E_{n+i,j}.
SubalgebraHandle q_in_gl(const AlgebraPtr& gl, size_t n);
QueerMatrix q_element(size_t n, const Vector& coords);

// ---- pe(n), spe(n) ----------------------------------------------------------

/// pe(n) = {(A B; C -A^T) : B = B^T, C = -C^T}, as the solution space of its
/// defining linear constraints inside gl(n|n).
SubalgebraHandle build_pe(const AlgebraPtr& gl, size_t n);
/// spe(n) = pe(n) ∩ sl(n|n).
SubalgebraHandle build_spe(const AlgebraPtr& gl, size_t n);

// ---- psl(n|n) ---------------------------------------------------------------

/// sl(n|n) inside gl(n|n) and its quotient by the identity.
struct PslModel {
  size_t n = 0;
  AlgebraPtr gl;
  std::shared_ptr<SubalgebraHandle> sl;
  Quotient psl;
  BilinearForm form;  // str-form pushed down to psl

  /// Image in psl of a supertraceless gl(n|n) vector.
  Vector to_psl(const Vector& gl_vector) const;
  /// Subalgebra of psl spanned by the images of gl(n|n) vectors.
  SubalgebraHandle image(const std::vector<Vector>& gl_vectors, const std::string& name) const;
};

PslModel build_psl(size_t n);

/// psq(n) = [q(n), q(n)] / <1>, with the pushed-down qtr-form.
struct PsqModel {
  AlgebraPtr q;
  std::shared_ptr<SubalgebraHandle> sq;
  Quotient psq;
  BilinearForm form;
};
PsqModel build_psq(size_t n);

// ---- catalog helpers ----------------------------------------------------------

struct Family {
  AlgebraPtr algebra;
  std::optional<BilinearForm> form;
};

/// name ∈ {gl, sl, psl, q, psq, pe, spe}; m is ignored for the n|n families.
Family build_family(const std::string& name, size_t m, size_t n);

/// Spanning vectors (in gl(n|n) coordinates) of the complement patterns:
/// "2.1": (X Y; 0 Z), X upper, Z lower triangular, X_ii = -Z_ii.
/// "2.2": (X Y; Z T), X, Z, T upper triangular, X_ii = T_ii, Y strictly upper.
/// The primed variants add tr X = 0.
std::vector<Vector> dual_pattern(const std::string& example, size_t n);

/// The pattern subalgebra inside the given gl(n|n) ("2.1", "2.2").
SubalgebraHandle dual_subalgebra(const std::string& example, size_t n, const AlgebraPtr& gl);
/// The primed pattern subalgebra inside psl(n|n) ("2.1p", "2.2p").
SubalgebraHandle dual_subalgebra(const std::string& example, const PslModel& psl);

}  // namespace manin
