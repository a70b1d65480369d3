#pragma once

// The inclusion of globular sets into polygraphs, and its right adjoint.
//
// A globular set becomes a polygraph whose generators are attached along
// single-generator cells. In the other direction, the globular core of a
// polygraph keeps exactly those generators whose boundaries are single
// lower generators that themselves belong to the core, hereditarily.
// Core membership only ever involves boundaries of canonical size one, so
// extraction is exact even over lazily enumerated polygraphs.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polycat/free_category.hpp"
#include "polycat/globular_set.hpp"
#include "polycat/normal_form.hpp"
#include "polycat/polygraph.hpp"

namespace polycat {

// The cell of a free category consisting of a single generator.
inline NormalCell single_gen_cell(int n, const std::string& g,
                                  const LazyPolygraph& p) {
  switch (n) {
    case 0:
      return NormalCell::make0(g);
    case 1: {
      const AttachedGen at = p.attach_of(1, g);
      return NormalCell::make1(Path{at.src.object, {g}});
    }
    case 2: {
      const AttachedGen at = p.attach_of(2, g);
      return NormalCell::make2(TwoCell{at.src.path, {Whisker{{}, g, {}}}});
    }
    default:
      throw PolycatError("type.dim_cap",
                         "single-generator cells stop at dimension 2");
  }
}

// If the cell is a single bare generator, returns its name.
inline std::optional<std::string> as_single_gen(const NormalCell& c) {
  switch (c.dim) {
    case 0:
      return c.object;
    case 1:
      if (c.path.gens.size() == 1) return c.path.gens.front();
      return std::nullopt;
    case 2:
      if (c.two.chain.size() == 1 && c.two.chain.front().left.empty() &&
          c.two.chain.front().right.empty())
        return c.two.chain.front().gen;
      return std::nullopt;
    default:
      if (c.raw && c.raw->kind == Term::Kind::Gen) return c.raw->gen;
      return std::nullopt;
  }
}

// A globular set as a polygraph with single-generator attachments.
inline Polygraph glob_to_poly(const GlobularSet& x) {
  Polygraph p(x.max_dim);
  p.gens = x.cells;
  // Ascending order: attaching n-generators only consults dimensions < n,
  // which are already in place.
  for (int n = 1; n <= x.max_dim; ++n) {
    for (const auto& c : x.cells[n]) {
      p.attach[n][c] = {
          single_gen_cell(n - 1, x.src_of(n, c), FinitePolygraphView(p)),
          single_gen_cell(n - 1, x.tgt_of(n, c), FinitePolygraphView(p))};
    }
  }
  return p;
}

// The globular core: generators whose two boundaries are single generators
// already in the core one dimension down. The result lists core generators
// in the polygraph's enumeration order.
//
// Because single-generator boundaries have canonical size exactly one, an
// enumeration budget of one already sees every candidate; the budget
// parameter is clamped accordingly and the result is exact for any
// polygraph whose enumeration is size-complete.
inline GlobularSet poly_core(const LazyPolygraph& p, int budget = 1) {
  const int eff = p.is_finite() ? budget : std::max(budget, 1);
  GlobularSet core(p.max_dim());
  std::vector<std::set<std::string>> member(p.max_dim() + 1);
  for (const auto& g : p.enumerate_gens(0, eff)) {
    core.cells[0].push_back(g);
    member[0].insert(g);
  }
  for (int n = 1; n <= p.max_dim(); ++n) {
    for (const auto& g : p.enumerate_gens(n, eff)) {
      const AttachedGen at = p.attach_of(n, g);
      const auto s = as_single_gen(at.src);
      const auto t = as_single_gen(at.tgt);
      if (!s || !t) continue;
      if (!member[n - 1].count(*s) || !member[n - 1].count(*t)) continue;
      core.cells[n].push_back(g);
      member[n].insert(g);
      core.src[n][g] = *s;
      core.tgt[n][g] = *t;
    }
  }
  return core;
}

inline bool in_core(const GlobularSet& core, int n, const std::string& g) {
  return core.has_cell(n, g);
}

// Restriction of a generator morphism to the globular cores. Core
// generators must land on core generators; that is a consequence of
// morphisms preserving attachments, so a violation is reported as an error
// rather than a verdict.
inline GlobularMap core_of_morphism(const PolyMorphism& u, int budget = 1) {
  GlobularMap m;
  m.dom = poly_core(*u.dom, budget);
  m.cod = poly_core(*u.cod, budget);
  m.map.resize(m.dom.max_dim + 1);
  for (int n = 0; n <= m.dom.max_dim; ++n) {
    for (const auto& g : m.dom.cells[n]) {
      const std::string img = u.apply(n, g);
      if (!m.cod.has_cell(n, img))
        throw PolycatError("core.escape",
                           "core generator " + g +
                               " maps outside the codomain core to " + img);
      m.map[n][g] = img;
    }
  }
  return m;
}

}  // namespace polycat
