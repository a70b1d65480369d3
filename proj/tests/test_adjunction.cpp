#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "polycat/adjunction.hpp"
#include "polycat/fixtures.hpp"
#include "polycat/free_category.hpp"
#include "polycat/glob_poly.hpp"
#include "support/common.hpp"

using namespace polycat;
using namespace polycat::testing;
namespace fx = polycat::fixtures;

namespace {

std::shared_ptr<const Resolution> res_of(TableCategory c) {
  return make_resolution(shared(std::move(c)));
}

}  // namespace

TEST_CASE("resolution generators are boundary-matched triples") {
  auto r = res_of(fx::walking_arrow());

  CHECK(r->max_dim() == 1);
  CHECK(r->enumerate_gens(0, 2) == std::vector<std::string>{"x", "y"});

  const std::string tidx = triple_key("idx", gen("x"), gen("x"));
  const std::string tidy = triple_key("idy", gen("y"), gen("y"));
  const std::string tf = triple_key("f", gen("x"), gen("y"));
  CHECK(r->enumerate_gens(1, 2) ==
        std::vector<std::string>{tidx, tidy, tf});

  CHECK(r->contains(1, tf));
  CHECK_FALSE(r->contains(1, triple_key("f", gen("y"), gen("x"))));
  CHECK_FALSE(r->contains(1, triple_key("ghost", gen("x"), gen("y"))));
  CHECK_FALSE(r->contains(1, "f"));
  CHECK(triple_z(1, tf) == "f");
  CHECK(triple_z(0, "x") == "x");

  const AttachedGen at = r->attach_of(1, tf);
  CHECK(at.src == NormalCell::make0("x"));
  CHECK(at.tgt == NormalCell::make0("y"));

  CHECK(validate_polygraph(*r, 3).ok());
}

TEST_CASE("resolution triple pools grow with the boundary budget") {
  auto r = res_of(fx::terminal2());

  CHECK(r->enumerate_gens(1, 2).size() == 1);
  CHECK(r->enumerate_gens(2, 1).size() == 4);
  CHECK(r->enumerate_gens(2, 2).size() == 9);
  CHECK(r->enumerate_gens(2, 3).size() == 16);

  // Pools nest as the budget grows.
  const auto small = r->enumerate_gens(2, 2);
  const auto large = r->enumerate_gens(2, 3);
  for (const auto& g : small)
    CHECK(std::find(large.begin(), large.end(), g) != large.end());

  CHECK(validate_polygraph(*r, 2).ok());
}

TEST_CASE("counit evaluation composes z-components in the base") {
  auto r = res_of(fx::zmod3());
  const std::string t1 = triple_key("e1", gen("*"), gen("*"));
  const std::string t2 = triple_key("e2", gen("*"), gen("*"));

  CHECK(counit_eval(*r, gen(t1)) == "e1");
  CHECK(counit_eval(*r, comp(0, gen(t1), gen(t2))) == "e0");
  CHECK(counit_eval(*r, comp(0, gen(t2), gen(t2))) == "e1");
  CHECK(counit_eval(*r, idt(gen("*"))) == "e0");

  const OmegaFunctor eps = counit_functor(r);
  CHECK(validate_functor(eps, 3).ok());
}

TEST_CASE("counit functor is valid over a two-dimensional base") {
  auto r = res_of(fx::walking_two_cell());
  const OmegaFunctor eps = counit_functor(r);
  const auto rep = validate_functor(eps, 2);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("the core of a resolution presents the base cells") {
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
    auto r = res_of(base);
    const GlobularMap to_base = core_to_base(r, base);
    const GlobularMap to_core = base_to_core(r, base);
    CHECK(validate_glob_map(to_base).ok());
    CHECK(validate_glob_map(to_core).ok());

    // Cell-for-cell bijection between the core and the base.
    for (int n = 0; n <= base.dims; ++n)
      CHECK(to_base.dom.cells[n].size() == base.cell_names[n].size());

    // Two-sided inverse.
    const GlobularMap round_core = compose_glob_maps(to_base, to_core);
    CHECK(round_core.map == identity_glob_map(to_base.dom).map);
    const GlobularMap round_base = compose_glob_maps(to_core, to_base);
    CHECK(round_base.map == identity_glob_map(to_core.dom).map);

    // The pointwise inverse agrees with the materialized maps.
    for (int n = 0; n <= base.dims; ++n)
      for (const auto& c : base.cell_names[n])
        CHECK(triple_z(n, chi_cell(*r, n, c)) == c);
  }
}

TEST_CASE("a polygraph embeds into the resolution of its free category") {
  auto p = wrap_polygraph(fx::two_strand());
  const PolyMorphism eta = unit_poly(p);
  auto rc = std::dynamic_pointer_cast<const Resolution>(eta.cod);
  REQUIRE(rc);

  CHECK(eta.apply(0, "a") == term_key(gen("a")));
  CHECK(eta.apply(1, "u") ==
        triple_key(term_key(gen("u")), gen(term_key(gen("a"))),
                   gen(term_key(gen("b")))));

  // Images are valid triples with the transported attachments.
  for (int n = 0; n <= p->max_dim(); ++n) {
    for (const auto& g : p->enumerate_gens(n, 3)) {
      const std::string img = eta.apply(n, g);
      CHECK(rc->contains(n, img));
      if (n >= 1) {
        const AttachedGen at = p->attach_of(n, g);
        const AttachedGen ia = rc->attach_of(n, img);
        CHECK(ia.src == apply_free_morphism(eta, at.src));
        CHECK(ia.tgt == apply_free_morphism(eta, at.tgt));
      }
    }
  }

  // Evaluating an embedded cell recovers the cell itself.
  for (int n = 0; n <= p->max_dim(); ++n)
    for (const NormalCell& c : enumerate_cells(*p, n, 2))
      CHECK(rc->eval(apply_free_morphism(eta, c)) == cell_key(c));
}

TEST_CASE("resolving the counit splits the embedding") {
  auto c = shared(fx::walking_arrow());
  auto r = make_resolution(c);
  const PolyMorphism a = unit_poly(r);
  auto rd = std::dynamic_pointer_cast<const Resolution>(a.cod);
  REQUIRE(rd);

  const PolyMorphism k = resolve_functor(counit_functor(r), rd, r);
  for (int n = 0; n <= r->max_dim(); ++n)
    for (const auto& g : r->enumerate_gens(n, 2))
      CHECK(k.apply(n, a.apply(n, g)) == g);
}

TEST_CASE("functors lift to resolutions boundary by boundary") {
  auto c = shared(fx::walking_arrow());
  auto d = shared(fx::terminal1());
  const OmegaFunctor f{c, d, [](int n, const std::string&) {
                         return n == 0 ? std::string("*")
                                       : std::string("id(*)");
                       }};
  CHECK(validate_functor(f, 3).ok());

  auto rc = make_resolution(c);
  auto rd = make_resolution(d);
  const PolyMorphism lifted = resolve_functor(f, rc, rd);

  CHECK(lifted.apply(0, "x") == "*");
  const std::string tf = triple_key("f", gen("x"), gen("y"));
  CHECK(lifted.apply(1, tf) == triple_key("id(*)", gen("*"), gen("*")));

  // The lift commutes with evaluation into the bases.
  for (int n = 0; n <= rc->max_dim(); ++n)
    for (const NormalCell& cell : enumerate_cells(*rc, n, 3))
      CHECK(rd->eval(apply_free_morphism(lifted, cell)) ==
            f.apply(n, rc->eval(cell)));
}

TEST_CASE("the lift is the only boundary-preserving choice") {
  auto c = shared(fx::walking_two_cell());
  auto d = shared(fx::terminal2());
  const OmegaFunctor f{c, d, [](int n, const std::string&) {
                         if (n == 0) return std::string("*");
                         if (n == 1) return std::string("id(*)");
                         return std::string("id(id(*))");
                       }};
  CHECK(validate_functor(f, 2).ok());

  auto rc = make_resolution(c);
  auto rd = make_resolution(d);
  const PolyMorphism lifted = resolve_functor(f, rc, rd);

  const auto pool = rd->enumerate_gens(2, 2);
  REQUIRE(pool.size() == 9);
  for (const auto& g : rc->enumerate_gens(2, 1)) {
    const AttachedGen at = rc->attach_of(2, g);
    const NormalCell img_src = apply_free_morphism(lifted, at.src);
    const NormalCell img_tgt = apply_free_morphism(lifted, at.tgt);
    std::vector<std::string> candidates;
    for (const auto& t : pool) {
      if (triple_z(2, t) != f.apply(2, triple_z(2, g))) continue;
      const AttachedGen ta = rd->attach_of(2, t);
      if (ta.src == img_src && ta.tgt == img_tgt) candidates.push_back(t);
    }
    INFO(g);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates.front() == lifted.apply(2, g));
  }

  // The restriction to the cores tracks the functor's cell map.
  const GlobularMap core_map = core_of_morphism(lifted);
  CHECK(validate_glob_map(core_map).ok());
  for (int n = 0; n <= core_map.dom.max_dim; ++n)
    for (const auto& g : core_map.dom.cells[n])
      CHECK(triple_z(n, core_map.apply(n, g)) ==
            f.apply(n, triple_z(n, g)));
}
