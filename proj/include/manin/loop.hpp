#pragma once

// Loop algebras g ⊗ C[x, x^-1], band-limited to x-degrees in [-M, M], with the
// residue form Res_x B(f(x), g(x)).

#include <map>

#include "manin/manin.hpp"

namespace manin {

/// Finitely supported element Σ c · e_i ⊗ x^p, keyed by (p, i).
struct LoopElement {
  std::map<std::pair<int, uint32_t>, Scalar> coeffs;
};

struct LoopAlgebra {
  AlgebraPtr base;
  int window = 0;
  AlgebraPtr algebra;
  BilinearForm form;  // pairs x^p with x^{-1-p}

  /// Index of e_i ⊗ x^p: (p + M)·dim g + i.
  uint32_t index(int p, uint32_t i) const;
  /// v ⊗ x^p for a base-algebra vector v.
  Vector lift(const Vector& v, int p) const;
  Vector to_vector(const LoopElement& f) const;
  LoopElement to_element(const Vector& v) const;
};

/// [a x^p, b x^q] = [a, b] x^{p+q}; terms beyond the window are escapes.
LoopAlgebra loopify(const AlgebraPtr& g, const BilinearForm& b, int window);

/// (g^(1), a^(1), a*^(1)) in the window [-M, M].
ManinTriple lift_triple(const ManinTriple& t, int window);

}  // namespace manin
