#pragma once

// Small hand-built algebras and triples used by several test files.

#include <memory>

#include "manin/manin.hpp"

namespace fixture {

using namespace manin;

/// sl(2) with basis e, h, f.
inline AlgebraPtr sl2() {
  SuperSpace s({"e", "h", "f"}, {0, 0, 0});
  return share(LieSuperAlgebra::from_basis_bracket("sl(2)", s, [](uint32_t i, uint32_t j) {
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    if (i == 1 && j == 0) return Vector::unit(0, Scalar(2));
    if (i == 0 && j == 1) return Vector::unit(0, Scalar(-2));
    if (i == 1 && j == 2) return Vector::unit(2, Scalar(-2));
    if (i == 2 && j == 1) return Vector::unit(2, Scalar(2));
    if (i == 0 && j == 2) return Vector::unit(1);
    if (i == 2 && j == 0) return Vector::unit(1, Scalar(-1));
    return Vector();
  }));
}

/// sl(2) ⊕ sl(2) with B = tr ⊕ (-tr); basis e1 h1 f1 e2 h2 f2.
inline AlgebraPtr sl2_pair() {
  auto one = sl2();
  SuperSpace s({"e1", "h1", "f1", "e2", "h2", "f2"}, {0, 0, 0, 0, 0, 0});
  return share(LieSuperAlgebra::from_basis_bracket("sl(2)+sl(2)", s, [one](uint32_t i, uint32_t j) {
    if (i / 3 != j / 3) return Vector();
    const uint32_t off = i / 3 * 3;
    std::vector<Vector::Term> t;
    for (const auto& [k, c] : one->structure(i - off, j - off)) t.emplace_back(k + off, c);
    return Vector::from_terms(t);
  }));
}

inline BilinearForm sl2_pair_form() {
  Matrix m(6, 6);
  for (int blk = 0; blk < 2; ++blk) {
    const Scalar s = blk ? Scalar(-1) : Scalar(1);
    const size_t o = blk * 3;
    m(o + 0, o + 2) = s;
    m(o + 2, o + 0) = s;
    m(o + 1, o + 1) = s * Scalar(2);
  }
  return BilinearForm::from_matrix("tr-tr", 0, m);
}

inline std::shared_ptr<const SubalgebraHandle> handle(const AlgebraPtr& g, const std::vector<Vector>& v,
                                                      const std::string& name) {
  return std::make_shared<const SubalgebraHandle>(subalgebra_from_span(g, v, name));
}

/// The double of sl(2): a = diagonal sl(2), a* = {(x, y) ∈ b+ ⊕ b- : h-parts opposite}.
inline ManinTriple sl2_double() {
  ManinTriple t;
  t.example = "sl2-double";
  t.g = sl2_pair();
  t.form = sl2_pair_form();
  auto u = [](uint32_t i) { return Vector::unit(i); };
  t.a = handle(t.g, {u(0) + u(3), u(1) + u(4), u(2) + u(5)}, "sl(2)");
  t.a_star = handle(t.g, {u(0), u(5), u(1) - u(4)}, "b+ x b-");
  return t;
}

/// a = a* = the same Borel: isotropic but not complementary.
inline ManinTriple sl2_borel_control() {
  ManinTriple t = sl2_double();
  t.example = "borel-control";
  auto u = [](uint32_t i) { return Vector::unit(i); };
  t.a = handle(t.g, {u(0), u(5), u(1) - u(4)}, "b");
  t.a_star = t.a;
  return t;
}

}  // namespace fixture
