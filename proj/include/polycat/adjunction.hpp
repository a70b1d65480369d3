#pragma once

// The resolution polygraph of a strict category and the maps tying it back:
//
//  - `Resolution` presents a category C as a polygraph whose n-generators
//    are triples (z, x, y): an n-cell z of C together with a parallel pair
//    x, y of (n-1)-cells of the free category over the lower generators,
//    evaluating to the boundaries of z. Over an infinite base the triple
//    pool is budget-bounded like any lazy polygraph.
//  - `counit_functor` evaluates free cells over the resolution back into the
//    base category by dropping to the z-components.
//  - `unit_poly` embeds a polygraph P into the resolution of its own free
//    category, sending each generator to its tautological triple.
//  - `triple_z` / `chi_cell` realize the inverse bijections between the
//    resolution's globular core and the cells of the base category.
//  - `lift_resolution` lifts a dimensionwise cell map between base
//    categories to a morphism of resolutions, boundary by boundary.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycat/free_category.hpp"
#include "polycat/glob_poly.hpp"
#include "polycat/globular_set.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"
#include "polycat/term.hpp"

namespace polycat {

// Encoded generator name of a resolution triple.
inline std::string triple_key(const std::string& z, const TermPtr& x,
                              const TermPtr& y) {
  Json j = Json::array({"tri", z, term_to_json(x), term_to_json(y)});
  return j.dump();
}

struct Triple {
  std::string z;
  TermPtr x;
  TermPtr y;
};

inline std::optional<Triple> parse_triple(const std::string& name) {
  Json j;
  try {
    j = Json::parse(name);
  } catch (const Json::exception&) {
    return std::nullopt;
  }
  if (!j.is_array() || j.size() != 4 || j[0] != "tri" || !j[1].is_string())
    return std::nullopt;
  try {
    return Triple{j[1].get<std::string>(), term_from_json(j[2]),
                  term_from_json(j[3])};
  } catch (const PolycatError&) {
    return std::nullopt;
  }
}

// The z-component of a resolution generator: dimension-0 generators are base
// cells themselves, higher ones carry the cell in their triple.
inline std::string triple_z(int n, const std::string& g) {
  if (n == 0) return g;
  const auto t = parse_triple(g);
  if (!t)
    throw PolycatError("malformed.triple",
                       "not a resolution generator: " + g);
  return t->z;
}

// Evaluation of free cells over a resolution into its base category.
inline GenAssignment counit_assignment(
    std::shared_ptr<const StrictCategory> base) {
  return {std::move(base),
          [](int n, const std::string& g) { return triple_z(n, g); }};
}

class Resolution final : public LazyPolygraph {
 public:
  explicit Resolution(std::shared_ptr<const StrictCategory> base)
      : base_(std::move(base)), eps_(counit_assignment(base_)) {}

  const std::shared_ptr<const StrictCategory>& base() const { return base_; }

  int max_dim() const override { return std::min(base_->max_dim(), 3); }

  // Even over a finite base the triple pool is unbounded (the x and y
  // components range over free cells), so enumeration is budget-relative.
  bool is_finite() const override { return false; }

  bool contains(int n, const std::string& g) const override {
    if (n < 0 || n > max_dim()) return false;
    if (n == 0) return base_->has_cell(0, g);
    const auto cached = contains_cache_.find({n, g});
    if (cached != contains_cache_.end()) return cached->second;
    const bool ok = check_triple(n, g);
    contains_cache_.emplace(std::pair<int, std::string>{n, g}, ok);
    return ok;
  }

  std::vector<std::string> enumerate_gens(int n, int budget) const override {
    if (n < 0 || n > max_dim()) return {};
    if (n == 0) return base_->cells(0, budget);
    const auto cached = enum_cache_.find({n, budget});
    if (cached != enum_cache_.end()) return cached->second;

    std::vector<std::string> out;
    const auto lower = enumerate_cells(*this, n - 1, budget);
    for (const auto& z : base_->cells(n, budget)) {
      const std::string sz = base_->src(n, z);
      const std::string tz = base_->tgt(n, z);
      for (const auto& cx : lower) {
        if (eval(cx) != sz) continue;
        for (const auto& cy : lower) {
          if (eval(cy) != tz) continue;
          if (n >= 2 && !(boundary_src(*this, cx) == boundary_src(*this, cy) &&
                          boundary_tgt(*this, cx) == boundary_tgt(*this, cy)))
            continue;
          out.push_back(triple_key(z, canonical_term(cx), canonical_term(cy)));
        }
      }
    }
    enum_cache_.emplace(std::pair<int, int>{n, budget}, out);
    return out;
  }

  AttachedGen attach_of(int n, const std::string& g) const override {
    if (n < 1 || n > max_dim())
      throw PolycatError("malformed.attach",
                         "no attachments at dimension " + std::to_string(n));
    const auto cached = attach_cache_.find({n, g});
    if (cached != attach_cache_.end()) return cached->second;
    if (!contains(n, g))
      throw PolycatError("malformed.attach",
                         "no attachment for generator " + g);
    const Triple t = *parse_triple(g);
    AttachedGen at{normalize(*this, t.x), normalize(*this, t.y)};
    attach_cache_.emplace(std::pair<int, std::string>{n, g}, at);
    return at;
  }

  // Base cell reached by evaluating the z-components of a free cell.
  std::string eval(const NormalCell& c) const {
    return evaluate_cell(*this, eps_, c);
  }

 private:
  bool check_triple(int n, const std::string& g) const {
    const auto t = parse_triple(g);
    if (!t) return false;
    if (!base_->has_cell(n, t->z)) return false;
    NormalCell cx, cy;
    try {
      cx = normalize(*this, t->x);
      cy = normalize(*this, t->y);
    } catch (const PolycatError&) {
      return false;
    }
    if (cx.dim != n - 1 || cy.dim != n - 1) return false;
    // The stored components must already be canonical, so each generator has
    // exactly one name.
    if (term_key(canonical_term(cx)) != term_key(t->x) ||
        term_key(canonical_term(cy)) != term_key(t->y))
      return false;
    try {
      if (eval(cx) != base_->src(n, t->z)) return false;
      if (eval(cy) != base_->tgt(n, t->z)) return false;
    } catch (const PolycatError&) {
      return false;
    }
    if (n >= 2 && !(boundary_src(*this, cx) == boundary_src(*this, cy) &&
                    boundary_tgt(*this, cx) == boundary_tgt(*this, cy)))
      return false;
    return true;
  }

  std::shared_ptr<const StrictCategory> base_;
  GenAssignment eps_;
  mutable std::map<std::pair<int, std::string>, bool> contains_cache_;
  mutable std::map<std::pair<int, std::string>, AttachedGen> attach_cache_;
  mutable std::map<std::pair<int, int>, std::vector<std::string>> enum_cache_;
};

inline std::shared_ptr<const Resolution> make_resolution(
    std::shared_ptr<const StrictCategory> base) {
  return std::make_shared<Resolution>(std::move(base));
}

// The evaluation functor from the free category over a resolution to the
// resolved category.
inline OmegaFunctor counit_functor(std::shared_ptr<const Resolution> r) {
  auto base = r->base();
  return extend_functor(free_cat(std::move(r)), counit_assignment(base));
}

// Evaluates a single free term over the resolution into the base category.
inline std::string counit_eval(const Resolution& r, const TermPtr& t) {
  return r.eval(normalize(r, t));
}

// Embeds a polygraph into the resolution of its free category: a generator g
// goes to the triple of its own cell and the embedded images of its
// attachment boundaries. The codomain resolution must present the free
// category over p.
inline PolyMorphism unit_poly(std::shared_ptr<const LazyPolygraph> p,
                              std::shared_ptr<const Resolution> r) {
  auto memo =
      std::make_shared<std::map<std::pair<int, std::string>, std::string>>();
  auto fn = std::make_shared<
      std::function<std::string(int, const std::string&)>>();
  *fn = [p, r, memo, fn](int n, const std::string& g) -> std::string {
    const auto it = memo->find({n, g});
    if (it != memo->end()) return it->second;
    std::string out;
    if (n == 0) {
      out = cell_key(single_gen_cell(0, g, *p));
    } else {
      const AttachedGen at = p->attach_of(n, g);
      const PolyMorphism cur{
          p, r, [fn](int k, const std::string& h) { return (*fn)(k, h); }};
      out = triple_key(cell_key(single_gen_cell(n, g, *p)),
                       canonical_term(apply_free_morphism(cur, at.src)),
                       canonical_term(apply_free_morphism(cur, at.tgt)));
    }
    memo->emplace(std::pair<int, std::string>{n, g}, out);
    return out;
  };
  return {std::move(p), std::move(r),
          [fn](int n, const std::string& g) { return (*fn)(n, g); }};
}

inline PolyMorphism unit_poly(std::shared_ptr<const LazyPolygraph> p) {
  auto r = make_resolution(free_cat(p));
  return unit_poly(std::move(p), std::move(r));
}

// The core generator presenting a base cell: the inverse direction of the
// core / base-cell bijection realized by `triple_z`.
inline std::string chi_cell(const Resolution& r, int n,
                            const std::string& base_cell) {
  if (n == 0) return base_cell;
  const auto& base = *r.base();
  const std::string sx = chi_cell(r, n - 1, base.src(n, base_cell));
  const std::string sy = chi_cell(r, n - 1, base.tgt(n, base_cell));
  return triple_key(
      base_cell, canonical_term(single_gen_cell(n - 1, sx, r)),
      canonical_term(single_gen_cell(n - 1, sy, r)));
}

// The two mutually inverse globular maps between the resolution's core and
// the underlying globular set of a finite base category.
inline GlobularMap core_to_base(std::shared_ptr<const Resolution> r,
                                const TableCategory& base) {
  GlobularMap m;
  m.dom = poly_core(*r);
  m.cod = underlying_globular(base);
  m.map.resize(m.dom.max_dim + 1);
  for (int n = 0; n <= m.dom.max_dim; ++n)
    for (const auto& g : m.dom.cells[n]) m.map[n][g] = triple_z(n, g);
  return m;
}

inline GlobularMap base_to_core(std::shared_ptr<const Resolution> r,
                                const TableCategory& base) {
  GlobularMap m;
  m.dom = underlying_globular(base);
  m.cod = poly_core(*r);
  m.map.resize(m.dom.max_dim + 1);
  for (int n = 0; n <= m.dom.max_dim; ++n)
    for (const auto& c : m.dom.cells[n]) m.map[n][c] = chi_cell(*r, n, c);
  return m;
}

// Lifts a dimensionwise map of base cells to a morphism of resolutions,
// sending (z, x, y) to (alpha z, image of x, image of y) recursively. When
// alpha commutes with boundaries the images are again valid triples.
inline PolyMorphism lift_resolution(
    std::shared_ptr<const Resolution> dom,
    std::shared_ptr<const Resolution> cod,
    std::function<std::string(int, const std::string&)> alpha) {
  auto memo =
      std::make_shared<std::map<std::pair<int, std::string>, std::string>>();
  auto fn = std::make_shared<
      std::function<std::string(int, const std::string&)>>();
  *fn = [dom, cod, alpha, memo, fn](int n,
                                    const std::string& g) -> std::string {
    const auto it = memo->find({n, g});
    if (it != memo->end()) return it->second;
    std::string out;
    if (n == 0) {
      out = alpha(0, g);
    } else {
      const auto t = parse_triple(g);
      if (!t)
        throw PolycatError("malformed.triple",
                           "lift applied to a non-triple: " + g);
      const AttachedGen at = dom->attach_of(n, g);
      const PolyMorphism cur{
          dom, cod, [fn](int k, const std::string& h) { return (*fn)(k, h); }};
      out = triple_key(alpha(n, t->z),
                       canonical_term(apply_free_morphism(cur, at.src)),
                       canonical_term(apply_free_morphism(cur, at.tgt)));
    }
    memo->emplace(std::pair<int, std::string>{n, g}, out);
    return out;
  };
  return {std::move(dom), std::move(cod),
          [fn](int n, const std::string& g) { return (*fn)(n, g); }};
}

// The resolution of a functor between the base categories.
inline PolyMorphism resolve_functor(const OmegaFunctor& f,
                                    std::shared_ptr<const Resolution> rdom,
                                    std::shared_ptr<const Resolution> rcod) {
  return lift_resolution(
      std::move(rdom), std::move(rcod),
      [f](int n, const std::string& c) { return f.apply(n, c); });
}

}  // namespace polycat
