#pragma once

// Grassmann calculus on Λ[θ_1..θ_N], the Poisson superalgebra po(0|N), its
// h / sh / psh tower, and the ζ-construction of complementary subalgebras.
//
// Monomials are bitmasks: bit j-1 set means θ_j is a factor, and the factors
// are written in ascending order. In po(0|N) the basis index of θ_S is the
// mask itself, so 1 has index 0 and θ_1⋯θ_N has index 2^N - 1.

#include <cstdint>
#include <string>
#include <vector>

#include "manin/lie.hpp"

namespace manin {

using Mask = uint32_t;

constexpr int kMaxOddVars = 16;

/// Element of Λ[θ_1..θ_N]; the coefficient vector is indexed by masks.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  GrassmannElement(int n_vars, Vector coeffs);
  static GrassmannElement constant(int n_vars, const Scalar& c);
  /// θ_i, 1-based.
  static GrassmannElement theta(int n_vars, int i);
  static GrassmannElement monomial(int n_vars, Mask s, const Scalar& c = Scalar(1));

  int n_vars() const { return n_; }
  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }
  Scalar coeff(Mask s) const { return coeffs_.at(s); }
  /// nullopt when even and odd monomials are mixed.
  std::optional<Parity> parity() const;

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement scaled(const Scalar& c) const;
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  std::string str() const;

 private:
  int n_ = 0;
  Vector coeffs_;
};

int popcount(Mask s);
/// Sign of θ_a θ_b relative to θ_{a ∪ b} in ascending order; 0 if a ∩ b ≠ ∅.
int merge_sign(Mask a, Mask b);
std::string monomial_label(Mask s);

GrassmannElement wedge(const GrassmannElement& f, const GrassmannElement& g);
/// Left derivative ∂/∂θ_i, 1-based.
GrassmannElement partial(const GrassmannElement& f, int i);
/// Coefficient of θ_1⋯θ_N.
Scalar berezin(const GrassmannElement& f);
/// {f, g} = (-1)^{p(f)} Σ_j ∂_j f ∂_j g, extended linearly over the homogeneous parts of f.
GrassmannElement poisson_bracket(const GrassmannElement& f, const GrassmannElement& g);

/// Bracket of two monomials as a mask-indexed vector.
Vector poisson_monomials(Mask s, Mask t);

struct PoissonAlgebra {
  int n_vars = 0;
  AlgebraPtr algebra;
  BilinearForm form;  // B(x, y) = berezin(xy), parity N mod 2
};

PoissonAlgebra build_po(int n_vars);
/// B(θ_S, θ_T) = berezin(θ_S θ_T) as a Gram matrix over masks.
BilinearForm berezin_form(int n_vars);

/// h = po / <1>, sh = [h, h], psh = sh / center(sh), with induced forms.
///
/// The Berezin form does not descend to h (1 pairs with the top monomial),
/// so h_form is the Gram matrix on the nonconstant monomial representatives;
/// on sh, which avoids the top monomial, this is the honest induced form.
struct ShTower {
  PoissonAlgebra po;
  Quotient h;
  BilinearForm h_form;
  std::shared_ptr<SubalgebraHandle> sh;
  BilinearForm sh_form;
  Quotient psh;
  BilinearForm psh_form;

  /// po(0|N) vector (no constant or top term needed) to psh coordinates.
  Vector to_psh(const Vector& po_vector) const;
};

ShTower build_sh_tower(int n_vars);

class InvalidZeta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k = (k_1..k_{N-1}) with Σ k_i² = -1, defining ζ = θ_N + Σ k_i θ_i.
class ZetaVector {
 public:
  explicit ZetaVector(std::vector<Scalar> k);
  /// (i, 0, ..., 0) with the given number of components.
  static ZetaVector standard(size_t components);
  static ZetaVector parse(const std::string& text);

  const std::vector<Scalar>& k() const { return k_; }
  size_t size() const { return k_.size(); }
  GrassmannElement zeta() const;
  std::string str() const;

 private:
  std::vector<Scalar> k_;
};

/// Σ k_i² for an arbitrary (possibly invalid) vector.
Scalar sum_of_squares(const std::vector<Scalar>& k);
/// ζ without validating Σ k_i² = -1 (used by negative controls).
GrassmannElement zeta_unchecked(const std::vector<Scalar>& k);

struct ZetaPair {
  AlgebraPtr g;
  BilinearForm form;
  std::shared_ptr<SubalgebraHandle> a;
  std::shared_ptr<SubalgebraHandle> a_star;
};

/// Inside po(0|2n): a = Λ[θ_1..θ_{2n-1}], a* = a·ζ.
ZetaPair zeta_dual(int n, const ZetaVector& k);

/// Inside psh(0|2n) = sh(0|2n): a = nonconstant functions of θ_1..θ_{2n-1}
/// (a copy of h(0|2n-1)), a* = {fζ : deg f <= 2n-2}.
ZetaPair zeta_dual_psh(int n, const ZetaVector& k);

// ---- ξ/η coordinates on Λ[θ_1..θ_6] ----------------------------------------

/// ξ_j = θ_j + iθ_{j+3}, η_j = (i/2)(θ_j - iθ_{j+3}), j = 1..3. Then
/// {ξ_j, η_k} = -i δ_jk, {ξ_j, ξ_k} = {η_j, η_k} = 0 and
/// ξ_1ξ_2ξ_3η_1η_2η_3 = θ_1⋯θ_6 (unit Jacobian).
GrassmannElement xi(int j);
GrassmannElement eta(int j);
/// Resolves a label "xi1".."xi3", "eta1".."eta3", or the same with ξ / η.
GrassmannElement xi_eta_generator(const std::string& label);

/// Product of ξ/η generators in the listed order, times c.
GrassmannElement xi_eta_monomial(const std::vector<std::string>& labels, const Scalar& c);

struct ExampleFourData {
  std::string status;  // e.g. "UNVERIFIED-SOURCE"
  std::vector<GrassmannElement> a_span;
  std::vector<GrassmannElement> a_star_generators;
};

/// Parses the basis-file JSON text.
ExampleFourData parse_example_2_4(const std::string& json_text);
ExampleFourData load_example_2_4_file(const std::string& path);

struct ExampleFourPair {
  PoissonAlgebra po;
  std::shared_ptr<SubalgebraHandle> a;
  std::shared_ptr<SubalgebraHandle> a_star;
  std::string status;
};

/// a = span of the given functions (closure verified), a* = bracket closure of
/// the generators, capped at 64 - dim a.
ExampleFourPair load_example_2_4(const ExampleFourData& data);

}  // namespace manin
