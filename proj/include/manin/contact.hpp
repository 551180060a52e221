#pragma once

// Contact superalgebras k(1|N) / k^L(1|N) through generating functions
// f(t, θ), truncated to t-degrees in a window [-M, M].

#include <map>
#include <memory>
#include <string>

#include "manin/grassmann.hpp"

namespace manin {

/// Laurent polynomial in t with coefficients in Λ[θ_1..θ_N]; keys are
/// (t-degree, θ-mask).
class ContactFunction {
 public:
  using Key = std::pair<int, Mask>;

  ContactFunction() = default;
  explicit ContactFunction(int n_vars) : n_(n_vars) {}
  static ContactFunction monomial(int n_vars, int t_degree, Mask s, const Scalar& c = Scalar(1));
  /// t^d · f for a Grassmann element f.
  static ContactFunction from_grassmann(const GrassmannElement& f, int t_degree = 0);

  int n_vars() const { return n_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int d, Mask s) const;
  void add(int d, Mask s, const Scalar& c);

  ContactFunction operator+(const ContactFunction& o) const;
  ContactFunction scaled(const Scalar& c) const;
  friend bool operator==(const ContactFunction& a, const ContactFunction& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Key, Scalar> terms_;  // no zeros
};

ContactFunction multiply(const ContactFunction& f, const ContactFunction& g);

/// {f, g}_k = Δf·∂_t g − ∂_t f·Δg − {f, g}_P with Δ = 2 − Σ θ_j ∂_j.
ContactFunction contact_bracket(const ContactFunction& f, const ContactFunction& g);

/// Coefficient of t^{-1} θ_1⋯θ_N.
Scalar residue(const ContactFunction& f);
Scalar residue_form(const ContactFunction& f, const ContactFunction& g);

std::string contact_label(int t_degree, Mask s);

/// Band-limited k^L(1|N): basis t^d θ_S, d ∈ [-M, M], index (d + M)·2^N + S.
/// Bracket terms leaving the window go to the escape ledger.
struct ContactAlgebra {
  int n_vars = 0;
  int window = 0;
  AlgebraPtr algebra;
  BilinearForm form;  // residue form, pairs degree d with -1 - d

  uint32_t index(int t_degree, Mask s) const;
  Vector to_vector(const ContactFunction& f) const;
  ContactFunction to_function(const Vector& v) const;
};

ContactAlgebra build_k_truncated(int n_vars, int window);

struct ContactPair {
  ContactAlgebra g;
  std::shared_ptr<SubalgebraHandle> a;
  std::shared_ptr<SubalgebraHandle> a_star;
};

/// a = span of t-degrees >= 0, a* = span of t-degrees <= -1, in k^L(1|6).
ContactPair contact_polynomial_pair(int window);
/// a = functions free of θ_6 (a copy of k^L(1|5)), a* = a·ζ, in k^L(1|6).
ContactPair contact_zeta_pair(int window, const ZetaVector& k);

}  // namespace manin
