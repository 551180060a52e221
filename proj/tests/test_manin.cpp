#include <algorithm>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "manin/catalog.hpp"
#include "manin/grassmann.hpp"

using namespace manin;

namespace {

const CheckReport& find(const VerificationReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckReport& c) { return c.name == name; });
  REQUIRE_MESSAGE(it != r.checks.end(), "missing check " << name);
  return *it;
}

ExampleSpec spec(const std::string& id, int n = 2) {
  ExampleSpec s;
  s.id = id;
  s.n = n;
  return s;
}

/// sl(2) ⋉ sl(2)* with the coadjoint action: a* abelian, so δ = 0.
ManinTriple sl2_cotangent() {
  auto a = fixture::sl2();
  SuperSpace s({"e", "h", "f", "e*", "h*", "f*"}, {0, 0, 0, 0, 0, 0});
  auto g = share(LieSuperAlgebra::from_basis_bracket("T*sl(2)", s, [a](uint32_t i, uint32_t j) {
    if (i < 3 && j < 3) return a->structure(i, j);
    if (i >= 3 && j >= 3) return Vector();
    // [x_i, ξ^j] = -Σ_k c_ik^j ξ^k
    const bool swap = i >= 3;
    const uint32_t x = swap ? j : i, xi = (swap ? i : j) - 3;
    std::vector<Vector::Term> t;
    for (uint32_t k = 0; k < 3; ++k) {
      Scalar c = a->structure(x, k).at(xi);
      if (!c.is_zero()) t.emplace_back(k + 3, swap ? c : -c);
    }
    return Vector::from_terms(t);
  }));
  Matrix m(6, 6);
  for (int i = 0; i < 3; ++i) m(i, i + 3) = m(i + 3, i) = Scalar(1);
  ManinTriple t;
  t.example = "cotangent";
  t.g = g;
  t.form = BilinearForm::from_matrix("pairing", 0, m);
  t.a = fixture::handle(g, {Vector::unit(0), Vector::unit(1), Vector::unit(2)}, "sl(2)");
  t.a_star = fixture::handle(g, {Vector::unit(3), Vector::unit(4), Vector::unit(5)}, "sl(2)*");
  return t;
}

}  // namespace

TEST_CASE("verify_triple on catalog examples") {
  auto r = verify_triple(build_example(spec("2.1")));
  CHECK(!r.failed());
  CHECK(r.verdict() == "PASS");
  CHECK(r.checks.size() == 11);
  auto r3 = verify_triple(build_example(spec("2.3")));
  CHECK(r3.verdict() == "PASS");
}

TEST_CASE("Borel control: isotropic but not complementary") {
  auto r = verify_triple(fixture::sl2_borel_control());
  CHECK(find(r, "isotropy(a)").ok());
  CHECK(find(r, "isotropy(a*)").ok());
  const auto& ds = find(r, "direct sum");
  CHECK(!ds.ok());
  REQUIRE(!ds.witnesses.empty());
  CHECK(ds.witnesses[0].detail.find("common vector") != std::string::npos);
  CHECK(r.verdict() == "FAIL");
}

TEST_CASE("odd forms are rejected up front") {
  auto po = build_po(3);
  ManinTriple t;
  t.example = "po3";
  t.g = po.algebra;
  t.form = po.form;
  t.a = fixture::handle(po.algebra, {Vector::unit(0)}, "1");
  t.a_star = fixture::handle(po.algebra, {Vector::unit(7)}, "top");
  auto r = verify_triple(t);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "form even");
  CHECK(!r.checks[0].ok());
  CHECK(r.failed());
}

TEST_CASE("cobracket of the sl(2) double") {
  auto t = fixture::sl2_double();
  REQUIRE(!verify_triple(t).failed());
  auto d = derive_cobracket(t);
  const Scalar half(Rational(1, 2));
  using V = std::vector<TensorTerm>;
  CHECK(d.delta[0] == V{{0, 1, -half}, {1, 0, half}});
  CHECK(d.delta[1].empty());
  CHECK(d.delta[2] == V{{1, 2, half}, {2, 1, -half}});
  CHECK(check_coantisymmetry(d).ok());
  CHECK(check_cocycle(t.a->algebra(), d).ok());
  auto cj = check_cojacobi(t, d);
  CHECK(cj.direct.ok());
  CHECK(cj.routes.ok());
  CHECK(check_round_trip(t, d).ok());
}

TEST_CASE("cobracket vanishes when a* is abelian") {
  auto t = sl2_cotangent();
  CHECK(check_super_jacobi(*t.g).ok());
  REQUIRE(!verify_triple(t).failed());
  auto d = derive_cobracket(t);
  for (const auto& x : d.delta) CHECK(x.empty());
  CHECK(check_cocycle(t.a->algebra(), d).ok());
  CHECK(check_cojacobi(t, d).direct.ok());
  CHECK(double_classification(t).type == "double-type");
}

TEST_CASE("rescaling B rescales δ inversely") {
  auto t = build_example(spec("2.1", 1));
  auto d1 = derive_cobracket(t);
  auto t3 = t;
  t3.form = t.form.scaled(Scalar(3));
  auto d3 = derive_cobracket(t3);
  bool nonzero = false;
  for (size_t k = 0; k < d1.delta.size(); ++k) {
    REQUIRE(d1.delta[k].size() == d3.delta[k].size());
    for (size_t q = 0; q < d1.delta[k].size(); ++q) {
      nonzero = true;
      CHECK(d3.delta[k][q].c * Scalar(3) == d1.delta[k][q].c);
    }
  }
  CHECK(nonzero);
  CHECK(check_coantisymmetry(d1).ok());
}

TEST_CASE("bialgebra checks on examples") {
  for (const char* id : {"2.1", "2.1p", "2.2", "2.2p", "2.3", "2.3p"}) {
    CAPTURE(id);
    auto t = build_example(spec(id));
    auto d = derive_cobracket(t);
    CHECK(check_coantisymmetry(d).ok());
    CHECK(check_cocycle(t.a->algebra(), d).ok());
    auto cj = check_cojacobi(t, d);
    CHECK(cj.direct.ok());
    CHECK(cj.routes.ok());
    CHECK(check_round_trip(t, d).ok());
  }
}

TEST_CASE("corrupted cobracket fails the cocycle check") {
  auto t = fixture::sl2_double();
  auto d = derive_cobracket(t);
  d.delta[0][0].c = -d.delta[0][0].c;
  auto r = check_cocycle(t.a->algebra(), d);
  CHECK(!r.ok());
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses[0].indices.size() == 4);
  CHECK(!check_coantisymmetry(d).ok());
}

TEST_CASE("double classification") {
  CHECK(double_classification(build_example(spec("2.1"))).type == "olshansky-type");
  auto c2 = double_classification(build_example(spec("2.2")));
  CHECK(c2.type == "olshansky-type");
  CHECK(c2.best_rank < c2.dim);
  auto c = double_classification(fixture::sl2_double());
  CHECK(c.type == "double-type");
  CHECK(c.best_rank == 3);
}

TEST_CASE("truncated reports are window-conditional") {
  auto r = certify(build_example(spec("2.5.1")));
  CHECK(!r.failed());
  CHECK(r.verdict() == "certified within window [-2, 2]");
  CHECK(find(r, "closure(a)").skipped > 0);
  auto j = r.to_json();
  CHECK(j["verdict"] == "certified within window [-2, 2]");
  CHECK(j["checks"].size() == r.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("checked"));
    CHECK(c.contains("skipped"));
  }
}

TEST_CASE("Example 2.4 with a broken basis file names the failing check") {
  auto data = load_example_2_4_file(default_basis_file());
  std::ifstream in(default_basis_file());
  json j = json::parse(in);
  // a* generated by the constant function: overlaps a
  j["a_star_generators"] = json::array({j["a_span"][0]});
  const std::string path = "manin_bad_basis.json";
  std::ofstream(path) << j.dump();
  ExampleSpec s = spec("2.4");
  s.basis_file = path;
  auto r = verify_triple(build_example(s));
  std::remove(path.c_str());
  CHECK(r.failed());
  CHECK(!find(r, "direct sum").ok());
}

TEST_CASE("simplicity info") {
  auto info = simplicity_scan(*fixture::sl2());
  CHECK(info.scanned);
  CHECK(info.center_dim == 0);
  CHECK(info.derived_dim == 3);
  CHECK(info.smallest_basis_ideal == 3);
}
