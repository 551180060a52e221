#include <optional>
#include <random>

#include "doctest.h"
#include "manin/contact.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

ContactFunction mono(int n, int d, Mask s, const Scalar& c = Scalar(1)) { return ContactFunction::monomial(n, d, s, c); }

/// Jacobiator of a basis triple, or nullopt if some intermediate bracket leaves the window.
std::optional<Vector> jacobi_in_window(const LieSuperAlgebra& g, uint32_t x, uint32_t y, uint32_t z) {
  auto inner_ok = [&](uint32_t a, uint32_t b, uint32_t outer, bool outer_left) {
    if (g.escaped(a, b)) return false;
    for (const auto& [k, c] : g.structure(a, b))
      if (outer_left ? g.escaped(outer, k) : g.escaped(k, outer)) return false;
    return true;
  };
  if (!inner_ok(y, z, x, true) || !inner_ok(x, y, z, false) || !inner_ok(x, z, y, true)) return std::nullopt;
  return oracle::jacobiator(g, x, y, z);
}

}  // namespace

TEST_CASE("contact bracket examples") {
  CHECK(contact_bracket(mono(2, 1, 0), mono(2, 1, 0)).is_zero());
  CHECK(contact_bracket(mono(2, 0, 0), mono(2, 1, 0)) == mono(2, 0, 0, Scalar(2)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(contact_bracket(mono(3, 0, Mask(1) << i), mono(3, 0, Mask(1) << j)) ==
            (i == j ? mono(3, 0, 0) : ContactFunction(3)));
}

TEST_CASE("bracket degrees land in {a+b-1, a+b}") {
  const int n = 3;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (Mask s = 0; s < 8; ++s)
        for (Mask t = 0; t < 8; ++t) {
          const auto f = contact_bracket(mono(n, a, s), mono(n, b, t));
          for (const auto& [k, c] : f.terms()) CHECK((k.first == a + b - 1 || k.first == a + b));
        }
}

TEST_CASE("residue form") {
  CHECK(residue_form(mono(6, -1, 63), mono(6, 0, 0)) == Scalar(1));
  CHECK(residue_form(mono(6, 2, 7), mono(6, 0, 56)) == Scalar(0));
  CHECK(residue_form(mono(6, 1, 0), mono(6, 3, 63)).is_zero());
  // Res kills t-derivatives of t^d θ_1⋯θ_6
  for (int d = -3; d <= 3; ++d) {
    auto dh = d == 0 ? ContactFunction(6) : mono(6, d - 1, 63, Scalar(d));
    CHECK(residue(dh).is_zero());
  }
}

TEST_CASE("truncated k^L(1|N)") {
  CHECK(build_k_truncated(6, 2).algebra->dim() == 320);
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto k = build_k_truncated(n, m);
      CHECK(check_super_antisymmetry(*k.algebra).ok());
      auto j = check_super_jacobi(*k.algebra);
      CHECK(j.ok());
      CHECK(j.skipped > 0);
    }
  CHECK_THROWS(build_k_truncated(1, 0));
  CHECK_THROWS(build_k_truncated(9, 1));
}

TEST_CASE("sampled in-window Jacobi for k^L(1|6)") {
  auto k = build_k_truncated(6, 2);
  const auto& g = *k.algebra;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<uint32_t> pick(0, uint32_t(g.dim() - 1));
  int checked = 0, attempts = 0;
  while (checked < 10000 && attempts < 200000) {
    ++attempts;
    auto r = jacobi_in_window(g, pick(rng), pick(rng), pick(rng));
    if (!r) continue;
    ++checked;
    CHECK(r->is_zero());
  }
  CHECK(checked == 10000);
}

TEST_CASE("residue form on the window") {
  auto k = build_k_truncated(6, 2);
  const auto& g = *k.algebra;
  auto f = form_properties(g, k.form);
  CHECK(f.parity_consistent.ok());
  CHECK(f.supersymmetric.ok());
  CHECK(f.invariant.ok());
  CHECK(f.parity == 0);
  // t^a θ_S pairs only with t^{-1-a} θ_{S^c}
  for (uint32_t x = 0; x < g.dim(); ++x)
    for (const auto& [y, c] : k.form.rows()[x]) {
      CHECK(g.grading().degree[x] + g.grading().degree[y] == -1);
      CHECK(((x & 63) ^ (y & 63)) == 63);
    }
  // matches the Res of the product of generating functions
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint32_t> pick(0, uint32_t(g.dim() - 1));
  for (int t = 0; t < 500; ++t) {
    uint32_t x = pick(rng), y = pick(rng);
    CHECK(k.form.at(x, y) == residue_form(k.to_function(Vector::unit(x)), k.to_function(Vector::unit(y))));
  }
}

TEST_CASE("Res is odd and not invariant for N = 5") {
  auto k = build_k_truncated(5, 2);
  CHECK(k.form.parity() == 1);
  CHECK(!form_properties(*k.algebra, k.form).invariant.ok());
}

TEST_CASE("contact triples") {
  auto p = contact_polynomial_pair(2);
  CHECK(p.a->dim() == 3 * 64);
  CHECK(p.a_star->dim() == 2 * 64);
  CHECK(direct_sum_check(p.a->subspace(), p.a_star->subspace(), p.g.algebra->space()).holds);
  CHECK_THROWS(contact_polynomial_pair(1));

  auto z = contact_zeta_pair(2, ZetaVector::standard(5));
  CHECK(z.a->dim() == 5 * 32);
  CHECK(z.a_star->dim() == 5 * 32);
  auto zeta = ZetaVector::standard(5).zeta();
  CHECK(poisson_bracket(zeta, zeta).is_zero());
  CHECK_THROWS_AS(contact_zeta_pair(2, ZetaVector::standard(3)), InvalidZeta);
}

TEST_CASE("vector round trip") {
  auto k = build_k_truncated(4, 1);
  auto f = mono(4, -1, 5) + mono(4, 1, 0, Scalar(3));
  CHECK(k.to_function(k.to_vector(f)) == f);
  CHECK_THROWS(k.to_vector(mono(4, 2, 0)));
}
