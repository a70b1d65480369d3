#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "polycat/fixtures.hpp"
#include "polycat/monadicity.hpp"
#include "support/common.hpp"

using namespace polycat;
using namespace polycat::testing;
namespace fx = polycat::fixtures;

TEST_CASE("the identity presentation transports every fixture onto itself") {
  const std::vector<std::pair<std::string, TableCategory>> bases = [] {
    std::vector<std::pair<std::string, TableCategory>> v;
    v.emplace_back("walking_arrow", fx::walking_arrow());
    v.emplace_back("idempotent_monoid", fx::idempotent_monoid());
    v.emplace_back("zmod3", fx::zmod3());
    v.emplace_back("terminal2", fx::terminal2());
    v.emplace_back("walking_two_cell", fx::walking_two_cell());
    return v;
  }();

  for (const auto& [name, base] : bases) {
    INFO(name);
    auto c = shared(base);
    const SplitFork fork = degenerate_split_fork(c);
    CHECK(validate_split_fork(fork, 2).ok());

    const Transport t = transport_structure(fork);
    const auto cat_rep = validate_category(*t.e);
    INFO(cat_rep.summary());
    CHECK(cat_rep.ok());
    CHECK(validate_functor(t.h, 3).ok());
    CHECK(validate_functor(t.comparison, 3).ok());
    CHECK(is_iso(t.comparison, 3).conclusive_iso());

    // The quotient functor composed with the comparison gives back q.
    for (int n = 0; n <= fork.dp->max_dim(); ++n)
      for (const auto& d : fork.dp->cells(n, 3))
        CHECK(t.comparison.apply(n, t.h.apply(n, d)) == fork.q.apply(n, d));

    CHECK(resplit_in_pol(fork, t, 1).ok());
  }
}

TEST_CASE("the canonical presentation rebuilds the walking arrow") {
  auto c = shared(fx::walking_arrow());
  const SplitFork fork = canonical_split_pair(c);

  const auto fork_rep = validate_split_fork(fork, 2);
  INFO(fork_rep.summary());
  CHECK(fork_rep.ok());

  const Transport t = transport_structure(fork);
  CHECK(validate_category(*t.e).ok());
  CHECK(t.e->cells(0, 0).size() == 2);
  CHECK(t.e->cells(1, 0).size() == 3);

  const auto h_rep = validate_functor(t.h, 2);
  INFO(h_rep.summary());
  CHECK(h_rep.ok());
  CHECK(validate_functor(t.comparison, 2).ok());
  CHECK(is_iso(t.comparison, 2).conclusive_iso());

  for (int n = 0; n <= fork.dp->max_dim(); ++n)
    for (const auto& d : fork.dp->cells(n, 2))
      CHECK(t.comparison.apply(n, t.h.apply(n, d)) == fork.q.apply(n, d));

  const auto resplit_rep = resplit_in_pol(fork, t, 1);
  INFO(resplit_rep.summary());
  CHECK(resplit_rep.ok());
}

TEST_CASE("the canonical presentation rebuilds two-dimensional categories") {
  auto c = GENERATE(as<std::string>{}, "terminal2", "walking_two_cell");
  CAPTURE(c);
  auto base = shared(c == "terminal2" ? fx::terminal2() : fx::walking_two_cell());
  const SplitFork fork = canonical_split_pair(base);

  const auto fork_rep = validate_split_fork(fork, 1);
  INFO(fork_rep.summary());
  CHECK(fork_rep.ok());

  const Transport t = transport_structure(fork);
  CHECK(validate_category(*t.e).ok());
  for (int n = 0; n <= 2; ++n)
    CHECK(t.e->cells(n, 0).size() == base->cells(n, 0).size());

  CHECK(validate_functor(t.h, 1).ok());
  CHECK(validate_functor(t.comparison, 1).ok());
  CHECK(is_iso(t.comparison, 1).conclusive_iso());

  for (int n = 0; n <= fork.dp->max_dim(); ++n)
    for (const auto& d : fork.dp->cells(n, 1))
      CHECK(t.comparison.apply(n, t.h.apply(n, d)) == fork.q.apply(n, d));

  const auto resplit_rep = resplit_in_pol(fork, t, 1);
  INFO(resplit_rep.summary());
  CHECK(resplit_rep.ok());
}

TEST_CASE("the canonical coequalizer is universal for the walking arrow") {
  auto c = shared(fx::walking_arrow());
  const SplitFork fork = canonical_split_pair(c);
  const Transport t = transport_structure(fork);

  SECTION("the original category is a cone, mediated by the comparison") {
    const auto check = verify_coequalizer_universal(fork, t, fork.q, 2, 10000);
    INFO(check.rep.summary());
    CHECK(check.rep.ok());
    for (int n = 0; n <= t.e->max_dim(); ++n)
      for (const auto& e : t.e->cells(n, 0))
        CHECK(check.mediating.apply(n, e) == t.comparison.apply(n, e));
  }
  SECTION("the quotient itself is a cone, mediated by the identity") {
    const OmegaFunctor cone{fork.dp, t.e, t.h.map};
    const auto check = verify_coequalizer_universal(fork, t, cone, 2, 10000);
    INFO(check.rep.summary());
    CHECK(check.rep.ok());
    for (int n = 0; n <= t.e->max_dim(); ++n)
      for (const auto& e : t.e->cells(n, 0))
        CHECK(check.mediating.apply(n, e) == e);
  }
  SECTION("a collapsed cone still factors uniquely") {
    auto term = shared(fx::terminal1());
    const OmegaFunctor cone{fork.dp, term, [](int n, const std::string&) {
                              return n == 0 ? std::string("*")
                                            : std::string("id(*)");
                            }};
    const auto check = verify_coequalizer_universal(fork, t, cone, 2, 10000);
    INFO(check.rep.summary());
    CHECK(check.rep.ok());
  }
  SECTION("a map that fails to equalize the pair is rejected") {
    const OmegaFunctor not_cone = identity_functor(fork.dp);
    const auto check = verify_coequalizer_universal(fork, t, not_cone, 2, 0);
    CHECK(check.rep.has_code("cone.notcone"));
  }
}

TEST_CASE("tampered splitting data is detected") {
  auto c = shared(fx::walking_arrow());
  const SplitFork fork = canonical_split_pair(c);
  const std::string tidx = triple_key("idx", gen("x"), gen("x"));
  const std::string tf = triple_key("f", gen("x"), gen("y"));

  SECTION("a section that hits the wrong triple") {
    SplitFork broken = fork;
    auto orig = fork.a;
    broken.a = PolyMorphism{
        fork.a.dom, fork.a.cod,
        [orig, tidx, tf](int n, const std::string& g) {
          return orig.apply(n, n == 1 && g == tidx ? tf : g);
        }};
    CHECK(validate_split_fork(broken, 2).has_code("fork.split_ka"));
  }
  SECTION("a second-stage section that hits the wrong triple") {
    SplitFork broken = fork;
    auto orig = fork.b;
    const auto pool = fork.rd->enumerate_gens(1, 1);
    REQUIRE(pool.size() >= 2);
    const std::string g0 = pool[0], g1 = pool[1];
    broken.b = PolyMorphism{
        fork.b.dom, fork.b.cod,
        [orig, g0, g1](int n, const std::string& g) {
          return orig.apply(n, n == 1 && g == g0 ? g1 : g);
        }};
    const auto rep = validate_split_fork(broken, 1);
    CHECK(rep.has_code("fork.split_fb"));
  }
  SECTION("a quotient that no longer equalizes the pair") {
    SplitFork broken = fork;
    auto orig = fork.q;
    // Divert one specific composite path so q.f and q.g split apart.
    const std::string path_idx_f = *fork.dp->comp(
        0, 1, fork.dp->identity(0, term_key(gen("x"))),
        cell_key(single_gen_cell(1, tf, *fork.r)));
    broken.q = OmegaFunctor{
        fork.q.dom, fork.q.cod,
        [orig, path_idx_f](int n, const std::string& d) {
          if (n == 1 && d == path_idx_f) return std::string("idx");
          return orig.apply(n, d);
        }};
    CHECK(validate_split_fork(broken, 2).has_code("fork.coequal"));
  }
}

TEST_CASE("resolved core maps decide isomorphy exactly as the direct check") {
  struct Case {
    std::string name;
    OmegaFunctor f;
    bool expect_iso;
  };
  std::vector<Case> cases;

  auto mono = shared(fx::idempotent_monoid());
  cases.push_back({"identity on the idempotent monoid",
                   identity_functor(mono), true});

  auto arrow = shared(fx::walking_arrow());
  cases.push_back({"identity on the walking arrow", identity_functor(arrow),
                   true});

  auto disc = shared(fx::discrete_two());
  cases.push_back({"swap of two points",
                   OmegaFunctor{disc, disc,
                                [](int, const std::string& c) {
                                  return c == "p" ? std::string("q")
                                                  : std::string("p");
                                }},
                   true});

  auto z3 = shared(fx::zmod3());
  cases.push_back({"inversion automorphism",
                   OmegaFunctor{z3, z3,
                                [](int n, const std::string& c) {
                                  if (n == 0) return c;
                                  if (c == "e1") return std::string("e2");
                                  if (c == "e2") return std::string("e1");
                                  return c;
                                }},
                   true});

  auto term1 = shared(fx::terminal1());
  cases.push_back({"collapse of the walking arrow",
                   OmegaFunctor{arrow, term1,
                                [](int n, const std::string&) {
                                  return n == 0 ? std::string("*")
                                                : std::string("id(*)");
                                }},
                   false});
  cases.push_back({"collapse of the idempotent monoid",
                   OmegaFunctor{mono, term1,
                                [](int n, const std::string&) {
                                  return n == 0 ? std::string("*")
                                                : std::string("id(*)");
                                }},
                   false});

  auto two = shared(fx::walking_two_cell());
  auto term2 = shared(fx::terminal2());
  cases.push_back({"collapse of the walking two-cell",
                   OmegaFunctor{two, term2,
                                [](int n, const std::string&) {
                                  if (n == 0) return std::string("*");
                                  if (n == 1) return std::string("id(*)");
                                  return std::string("id(id(*))");
                                }},
                   false});

  cases.push_back({"unit collapse inside the idempotent monoid",
                   OmegaFunctor{mono, mono,
                                [](int n, const std::string& c) {
                                  if (n == 1 && c == "e")
                                    return std::string("1");
                                  return c;
                                }},
                   false});

  for (const auto& cse : cases) {
    INFO(cse.name);
    CHECK(validate_functor(cse.f, 3).ok());
    const IsoVerdict direct = is_iso(cse.f, 3);
    const IsoVerdict reflected =
        reflect_iso(cse.f, make_resolution(cse.f.dom),
                    make_resolution(cse.f.cod));
    CHECK(direct.kind == reflected.kind);
    if (cse.expect_iso) {
      CHECK(reflected.conclusive_iso());
    } else {
      CHECK(reflected.refuted());
      CHECK_FALSE(reflected.witness.empty());
    }
  }
}
