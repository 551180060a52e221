#include "doctest.h"
#include "manin/catalog.hpp"
#include "manin/grassmann.hpp"
#include "manin/json_io.hpp"
#include "manin/matrix_families.hpp"

using namespace manin;

TEST_CASE("catalog ids") {
  CHECK(catalog_ids().size() == 10);
  CHECK(is_catalog_id("2.5.3"));
  CHECK(!is_catalog_id("2.5.2"));
}

TEST_CASE("parameter validation") {
  ExampleSpec s;
  s.id = "2.9";
  CHECK_THROWS_AS(build_example(s), std::invalid_argument);
  s.id = "2.3";
  s.k = "1,0,0";
  CHECK_THROWS_AS(build_example(s), InvalidZeta);
  s.k = "i,0";
  CHECK_THROWS_AS(build_example(s), InvalidZeta);
  s.k.reset();
  s.n = 9;
  CHECK_THROWS_AS(build_example(s), std::invalid_argument);
  s.id = "2.1p";
  s.n = 1;
  CHECK_THROWS_AS(build_example(s), std::invalid_argument);
  s.id = "2.6";
  s.n = 2;
  s.base = "2.5.1";
  CHECK_THROWS_AS(build_example(s), std::invalid_argument);
  s.id = "2.4";
  s.basis_file = "/nonexistent.json";
  CHECK_THROWS(build_example(s));
}

TEST_CASE("catalog dimensions") {
  auto dim = [](const std::string& id, int n = 2) {
    ExampleSpec s;
    s.id = id;
    s.n = n;
    auto t = build_example(s);
    return std::tuple{t.g->dim(), t.a->dim(), t.a_star->dim()};
  };
  CHECK(dim("2.1") == std::tuple{size_t(16), size_t(8), size_t(8)});
  CHECK(dim("2.1", 3) == std::tuple{size_t(36), size_t(18), size_t(18)});
  CHECK(dim("2.2") == std::tuple{size_t(16), size_t(8), size_t(8)});
  CHECK(dim("2.1p") == std::tuple{size_t(14), size_t(7), size_t(7)});
  CHECK(dim("2.3") == std::tuple{size_t(16), size_t(8), size_t(8)});
  CHECK(dim("2.4") == std::tuple{size_t(64), size_t(32), size_t(32)});
  CHECK(dim("2.5.1") == std::tuple{size_t(320), size_t(192), size_t(128)});
  CHECK(dim("2.5.3") == std::tuple{size_t(320), size_t(160), size_t(160)});
}

TEST_CASE("algebra json round trip") {
  std::vector<std::pair<AlgebraPtr, std::vector<BilinearForm>>> cases{
      {build_gl(2, 2), {str_form(2, 2)}},
      {build_po(4).algebra, {build_po(4).form}},
      {build_q(2), {qtr_form(2)}},
  };
  for (const auto& id : catalog_ids()) {
    ExampleSpec s;
    s.id = id;
    auto t = build_example(s);
    cases.push_back({t.g, {t.form}});
  }
  for (const auto& [g, forms] : cases) {
    CAPTURE(g->name());
    auto j = algebra_to_json(*g, forms);
    auto back = algebra_from_json(json::parse(j.dump()));
    CHECK(algebra_to_json(*back.algebra, back.forms).dump() == j.dump());
    CHECK(back.algebra->truncated() == g->truncated());
  }
  auto po = algebra_to_json(*build_po(4).algebra, {build_po(4).form});
  CHECK(po["basis"].size() == 16);
  CHECK(po["forms"][0]["parity"] == 0);
}

TEST_CASE("report determinism") {
  ExampleSpec s;
  s.id = "2.2p";
  auto a = certify(build_example(s)).to_json().dump();
  auto b = certify(build_example(s)).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("targets") {
  ExampleSpec s;
  CHECK(resolve_target({"gl", "2", "1"}, s).algebra->dim() == 9);
  CHECK(resolve_target({"po", "4"}, s).form->parity() == 0);
  CHECK(resolve_target({"po", "3"}, s).form->parity() == 1);
  CHECK(!resolve_target({"pe", "2"}, s).form);
  s.window = 1;
  CHECK(resolve_target({"k", "2"}, s).algebra->dim() == 12);
  s.id = "2.3";
  CHECK(resolve_target({"2.3"}, s).algebra->dim() == 16);
  CHECK_THROWS_AS(resolve_target({"gl", "2"}, s), std::invalid_argument);
  CHECK_THROWS_AS(resolve_target({"gl", "x", "1"}, s), std::invalid_argument);
  CHECK_THROWS_AS(resolve_target({"osp", "1"}, s), std::invalid_argument);
  CHECK_THROWS_AS(resolve_target({}, s), std::invalid_argument);
}

TEST_CASE("psh(0|2) is zero") {
  ShTower t = build_sh_tower(2);
  CHECK(t.h.algebra->dim() == 3);
  CHECK(t.sh->dim() == 2);
  CHECK(t.psh.algebra->dim() == 0);
  CHECK(t.psh_form.dim() == 0);
}

TEST_CASE("catalog rows") {
  ExampleSpec d;
  auto rows = run_catalog({"2.3", "2.1"}, d);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].id == "2.1");  // catalog order, not request order
  json j = catalog_to_json(rows);
  CHECK(j["failures"] == 0);
  CHECK(j["rows"][1]["dim_g"] == 16);
  CHECK(j["rows"][1]["params"]["k"] == "i,0,0");
  std::string text = catalog_to_text(rows);
  CHECK(text.find("2 examples, 0 failing") != std::string::npos);
}
