#include "doctest.h"
#include "manin/matrix_families.hpp"

using namespace manin;

TEST_CASE("supertrace and queertrace") {
  auto x = Matrix::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1)}});
  CHECK(supertrace(SuperMatrix(1, 1, x, 0)) == Scalar(1));
  CHECK(supertrace(SuperMatrix(2, 2, Matrix::identity(4), 0)) == Scalar(0));
  auto odd = Matrix(2, 2);
  odd(0, 1) = Scalar(5);
  CHECK(supertrace(SuperMatrix(1, 1, odd, 1)) == Scalar(0));
  CHECK(queertrace(QueerMatrix(Matrix(2, 2), Matrix::identity(2), 1)) == Scalar(2));
  CHECK(queertrace(QueerMatrix(Matrix::identity(2), Matrix(2, 2), 0)) == Scalar(0));
  // str vanishes on all of q(n)
  auto q = build_q(2);
  for (uint32_t k = 0; k < q->dim(); ++k) CHECK(supertrace(q_element(2, Vector::unit(k)).embed()) == Scalar(0));
}

TEST_CASE("family dimensions") {
  for (size_t n = 1; n <= 3; ++n) {
    CHECK(build_family("gl", n, n).algebra->dim() == 4 * n * n);
    CHECK(build_family("q", n, n).algebra->dim() == 2 * n * n);
    CHECK(build_family("pe", n, n).algebra->dim() == 2 * n * n);
    CHECK(build_family("spe", n, n).algebra->dim() == 2 * n * n - 1);
    CHECK(build_family("sl", n, n).algebra->dim() == 4 * n * n - 1);
    if (n >= 2) CHECK(build_family("psl", n, n).algebra->dim() == 4 * n * n - 2);
  }
  CHECK(build_family("gl", 2, 1).algebra->dim() == 9);
  CHECK(build_family("psq", 2, 2).algebra->dim() == 6);
  CHECK_THROWS(build_family("pe", 2, 3));
  CHECK_THROWS(build_family("osp", 2, 2));
}

TEST_CASE("str of commutators vanishes") {
  const size_t m = 2, n = 1;
  auto g = build_gl(m, n);
  for (uint32_t i = 0; i < g->dim(); ++i)
    for (uint32_t j = 0; j < g->dim(); ++j) {
      auto v = g->structure(i, j);
      if (v.is_zero()) continue;
      CHECK(supertrace(SuperMatrix::from_vector(m, n, v)) == Scalar(0));
    }
}

TEST_CASE("forms on matrix families") {
  for (size_t n = 1; n <= 3; ++n) {
    auto gl = build_gl(n, n);
    CHECK(form_properties(*gl, str_form(n, n)).all_ok());
    auto q = build_q(n);
    auto f = form_properties(*q, qtr_form(n));
    CHECK(f.all_ok());
    CHECK(f.parity == 1);
  }
  CHECK(form_properties(*build_gl(2, 1), str_form(2, 1)).all_ok());
  auto psq = build_psq(3);
  CHECK(form_properties(*psq.psq.algebra, psq.form).all_ok());
}

TEST_CASE("pe(n) is the full solution space of its constraints") {
  auto gl = build_gl(2, 2);
  auto pe = build_pe(gl, 2);
  CHECK(pe.dim() == 8);
  // (A B; C -A^T): B symmetric, C antisymmetric
  for (size_t k = 0; k < pe.dim(); ++k) {
    auto x = SuperMatrix::from_vector(2, 2, pe.basis_vector(k)).data;
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) {
        CHECK(x(i, 2 + j) == x(j, 2 + i));
        CHECK(x(2 + i, j) == -x(2 + j, i));
        CHECK(x(2 + i, 2 + j) == -x(j, i));
      }
  }
  auto spe = build_spe(gl, 2);
  CHECK(spe.dim() == 7);
}

TEST_CASE("complement patterns") {
  auto gl = build_gl(2, 2);
  CHECK(dual_pattern("2.1", 2).size() == 8);
  CHECK(dual_subalgebra("2.2", 2, gl).dim() == 8);
  auto gl1 = build_gl(1, 1);
  CHECK(dual_subalgebra("2.1", 1, gl1).dim() == 2);

  for (size_t n = 1; n <= 3; ++n) {
    auto g = build_gl(n, n);
    auto d = dual_subalgebra("2.1", n, g);
    auto q = q_in_gl(g, n);
    auto ds = direct_sum_check(d.subspace(), q.subspace(), g->space());
    CHECK(ds.holds);
    CHECK(intersect(d.subspace(), q.subspace()).dim() == 0);
  }
  auto psl = build_psl(2);
  CHECK(dual_subalgebra("2.1p", psl).dim() == 7);
}
