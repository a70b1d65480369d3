#include <catch2/catch_amalgamated.hpp>

#include "polycat/fixtures.hpp"
#include "polycat/globular_set.hpp"

using namespace polycat;
namespace fx = polycat::fixtures;

TEST_CASE("fixture globular sets validate cleanly") {
  CHECK(validate_globular(fx::arrow_globset()).ok());
  CHECK(validate_globular(fx::two_cell_globset()).ok());
  GlobularSet empty(0);
  CHECK(validate_globular(empty).ok());
}

TEST_CASE("globular identities are enforced") {
  GlobularSet g(2);
  g.cells[0] = {"x", "y"};
  g.cells[1] = {"f", "g"};
  g.cells[2] = {"th"};
  g.src[1]["f"] = "x";
  g.tgt[1]["f"] = "y";
  g.src[1]["g"] = "y";  // not parallel to f
  g.tgt[1]["g"] = "x";
  g.src[2]["th"] = "f";
  g.tgt[2]["th"] = "g";
  auto rep = validate_globular(g);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.has_code("globular.src"));
  CHECK(rep.has_code("globular.tgt"));
}

TEST_CASE("structural gaps are reported as malformed") {
  SECTION("missing boundary") {
    GlobularSet g(1);
    g.cells[0] = {"x"};
    g.cells[1] = {"f"};
    g.src[1]["f"] = "x";  // tgt missing
    auto rep = validate_globular(g);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.has_code("malformed.boundary_map"));
  }
  SECTION("dangling boundary") {
    GlobularSet g(1);
    g.cells[0] = {"x"};
    g.cells[1] = {"f"};
    g.src[1]["f"] = "x";
    g.tgt[1]["f"] = "ghost";
    CHECK(validate_globular(g).has_code("malformed.boundary_map"));
  }
  SECTION("duplicate cell") {
    GlobularSet g(0);
    g.cells[0] = {"x", "x"};
    CHECK(validate_globular(g).has_code("malformed.duplicate_cell"));
  }
  SECTION("entry for undeclared cell") {
    GlobularSet g(1);
    g.cells[0] = {"x"};
    g.src[1]["phantom"] = "x";
    g.tgt[1]["phantom"] = "x";
    CHECK(validate_globular(g).has_code("malformed.boundary_map"));
  }
}

TEST_CASE("globular maps validate boundaries and totality") {
  const GlobularSet arrow = fx::arrow_globset();

  SECTION("identity map is valid") {
    CHECK(validate_glob_map(identity_glob_map(arrow)).ok());
  }
  SECTION("collapse to a loop is valid") {
    GlobularSet loop(1);
    loop.cells[0] = {"p"};
    loop.cells[1] = {"l"};
    loop.src[1]["l"] = "p";
    loop.tgt[1]["l"] = "p";
    GlobularMap m{arrow, loop, {{{"x", "p"}, {"y", "p"}}, {{"f", "l"}}}};
    CHECK(validate_glob_map(m).ok());
  }
  SECTION("boundary-breaking map is rejected") {
    GlobularMap m{arrow, arrow, {{{"x", "y"}, {"y", "y"}}, {{"f", "f"}}}};
    auto rep = validate_glob_map(m);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.has_code("globmap.src"));
  }
  SECTION("partial map is rejected") {
    GlobularMap m{arrow, arrow, {{{"x", "x"}}, {{"f", "f"}}}};
    CHECK(validate_glob_map(m).has_code("malformed.map"));
  }
  SECTION("dimension mismatch needs the explicit flag") {
    GlobularSet pt(0);
    pt.cells[0] = {"x"};
    GlobularMap m{pt, arrow, {{{"x", "x"}}}};
    CHECK(validate_glob_map(m).has_code("malformed.dim_mismatch"));
    CHECK(validate_glob_map(m, /*allow_higher_cod=*/true).ok());
  }
}

TEST_CASE("globular map composition") {
  const GlobularSet arrow = fx::arrow_globset();
  GlobularSet loop(1);
  loop.cells[0] = {"p"};
  loop.cells[1] = {"l"};
  loop.src[1]["l"] = "p";
  loop.tgt[1]["l"] = "p";

  GlobularMap collapse{arrow, loop, {{{"x", "p"}, {"y", "p"}}, {{"f", "l"}}}};
  GlobularMap idm = identity_glob_map(loop);
  GlobularMap both = compose_glob_maps(collapse, idm);
  CHECK(both.apply(1, "f") == "l");
  CHECK(both.apply(0, "x") == "p");
  CHECK(validate_glob_map(both).ok());

  // Composition demands structurally equal middle objects.
  GlobularMap idarrow = identity_glob_map(arrow);
  CHECK_THROWS_AS(compose_glob_maps(collapse, idarrow), PolycatError);
}
