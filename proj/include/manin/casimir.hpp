#pragma once

// Quadratic Casimir elements, ad-invariance and the classical Yang–Baxter
// residual of the rational r-matrix Δ/(u − v).

#include <cstdint>
#include <vector>

#include "manin/manin.hpp"

namespace manin {

/// Element of g⊗g as canonical sorted terms without zeros.
class TwoTensor {
 public:
  TwoTensor() = default;
  static TwoTensor from_terms(std::vector<TensorTerm> terms);

  const std::vector<TensorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar at(uint32_t i, uint32_t j) const;
  /// τ(x⊗y) = (−1)^{p(x)p(y)} y⊗x.
  TwoTensor swapped(const SuperSpace& space) const;
  /// Adds c to the (i, j) coefficient.
  TwoTensor with_term(uint32_t i, uint32_t j, const Scalar& c) const;
  friend bool operator==(const TwoTensor&, const TwoTensor&) = default;

 private:
  std::vector<TensorTerm> terms_;
};

struct Term3 {
  uint32_t i, j, k;
  Scalar c;
  friend bool operator==(const Term3&, const Term3&) = default;
};

class ThreeTensor {
 public:
  ThreeTensor() = default;
  static ThreeTensor from_terms(std::vector<Term3> terms);
  const std::vector<Term3>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

 private:
  std::vector<Term3> terms_;
};

/// Δ = Σ e^i ⊗ e_i with B(e_j, e^i) = δ_ij; even and supersymmetric when B is.
/// (The other ordering differs by a sign on odd terms and is not ad-invariant.)
/// For truncated algebras this is the banded Δ_M over elements whose pairing
/// partner lies in the window. Throws for odd or degenerate forms.
TwoTensor casimir(const LieSuperAlgebra& g, const BilinearForm& b);

/// (ad_x ⊗ 1 + 1 ⊗ ad_x)Δ = 0 for every basis x, with
/// x·(u⊗v) = [x,u]⊗v + (−1)^{p(x)p(u)} u⊗[x,v]. On truncated algebras a
/// degree block of the result is checked only when every Δ term feeding it is
/// inside the window (the untruncated algebra is assumed to fill all degrees).
CheckReport check_ad_invariance(const LieSuperAlgebra& g, const TwoTensor& delta);
CheckReport check_casimir_supersymmetry(const LieSuperAlgebra& g, const TwoTensor& delta);

/// Recomputes Δ in a random parity-preserving basis and maps it back.
CheckReport check_basis_independence(const LieSuperAlgebra& g, const BilinearForm& b, uint64_t seed);

struct SpectralSample {
  Scalar u, v, w;
};

/// Pairwise distinct rational triples, deterministic.
///
/// After clearing denominators the residual is
/// T1 (v−w) + T2 (u−w) + T3 (u−v), a linear form in (u, v, w) whose
/// coefficients sum to zero. It vanishes identically once it vanishes at two
/// samples independent modulo (1, 1, 1); we default to four.
std::vector<SpectralSample> default_samples(size_t count = 4);

/// [r12(u,v), r13(u,w)] + [r12(u,v), r23(v,w)] + [r13(u,w), r23(v,w)] with
/// r(a,b) = Δ/(a − b), evaluated exactly over g⊗g⊗g. Untruncated g only;
/// throws std::invalid_argument on coincident spectral points.
std::vector<ThreeTensor> cybe_residual(const LieSuperAlgebra& g, const TwoTensor& delta,
                                       const std::vector<SpectralSample>& samples);

json tensor_to_json(const TwoTensor& t, const SuperSpace& space);
json tensor_to_json(const ThreeTensor& t, const SuperSpace& space);

}  // namespace manin
