#pragma once

// Functors between truncated strict omega-categories, represented as a
// dimension-respecting cell map over shared category handles. Validation and
// isomorphism checks are exact on finite categories and budget-qualified on
// lazily enumerated ones.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"

namespace polycat {

struct OmegaFunctor {
  std::shared_ptr<const StrictCategory> dom;
  std::shared_ptr<const StrictCategory> cod;
  std::function<std::string(int, const std::string&)> map;

  std::string apply(int n, const std::string& c) const { return map(n, c); }
};

inline OmegaFunctor identity_functor(
    std::shared_ptr<const StrictCategory> c) {
  return {c, c, [](int, const std::string& cell) { return cell; }};
}

// compose_functors(f, g) = g after f.
inline OmegaFunctor compose_functors(const OmegaFunctor& f,
                                     const OmegaFunctor& g) {
  if (f.cod.get() != g.dom.get())
    throw PolycatError("malformed.compose",
                       "functor codomain/domain mismatch");
  auto fm = f.map;
  auto gm = g.map;
  return {f.dom, g.cod, [fm, gm](int n, const std::string& c) {
            return gm(n, fm(n, c));
          }};
}

// Functor laws on all cells the budget reaches: images land in the codomain,
// boundaries, identities and (composable-pair) compositions are preserved.
inline ValidationReport validate_functor(const OmegaFunctor& f, int budget) {
  ValidationReport rep;
  if (!f.dom || !f.cod) {
    rep.add("malformed.functor", "missing endpoint category");
    return rep;
  }
  const auto& dom = *f.dom;
  const auto& cod = *f.cod;
  if (dom.max_dim() > cod.max_dim()) {
    rep.add("malformed.dim_mismatch",
            "domain max_dim " + std::to_string(dom.max_dim()) +
                " exceeds codomain max_dim " +
                std::to_string(cod.max_dim()));
    return rep;
  }

  for (int n = 0; n <= dom.max_dim(); ++n) {
    const auto cs = dom.cells(n, budget);
    for (const auto& c : cs) {
      const std::string fc = f.apply(n, c);
      if (!cod.has_cell(n, fc)) {
        rep.add("functor.image", "image of " + std::to_string(n) + "-cell " +
                                     c + " is not a codomain cell: " + fc);
        continue;
      }
      if (n >= 1) {
        if (f.apply(n - 1, dom.src(n, c)) != cod.src(n, fc))
          rep.add("functor.src", "source not preserved at " + c);
        if (f.apply(n - 1, dom.tgt(n, c)) != cod.tgt(n, fc))
          rep.add("functor.tgt", "target not preserved at " + c);
      }
      if (n < dom.max_dim()) {
        if (f.apply(n + 1, dom.identity(n, c)) != cod.identity(n, fc))
          rep.add("functor.id", "identity not preserved at " + c);
      }
    }
    if (n >= 1) {
      for (int k = 0; k < n; ++k) {
        for (const auto& x : cs) {
          for (const auto& y : cs) {
            auto z = dom.comp(k, n, x, y);
            if (!z) continue;
            auto fz = cod.comp(k, n, f.apply(n, x), f.apply(n, y));
            if (!fz) {
              rep.add("functor.comp",
                      "images of composable pair (" + x + ", " + y +
                          ") are not composable along dimension " +
                          std::to_string(k));
              continue;
            }
            if (f.apply(n, *z) != *fz)
              rep.add("functor.comp",
                      "composition not preserved at (" + x + ", " + y +
                          ") along dimension " + std::to_string(k));
          }
        }
      }
    }
  }
  return rep;
}

struct IsoVerdict {
  enum class Kind { Iso, NotIso, IsoUpToBudget } kind;
  std::string witness;  // which cell breaks bijectivity, for NotIso

  bool conclusive_iso() const { return kind == Kind::Iso; }
  bool refuted() const { return kind == Kind::NotIso; }
};

// Bijectivity of the cell map, dimension by dimension. Exact when both
// endpoints are finite. On lazy endpoints an injectivity failure among
// enumerated cells is a conclusive refutation; otherwise the verdict is
// only valid up to the budget.
inline IsoVerdict is_iso(const OmegaFunctor& f, int budget) {
  const bool finite = f.dom->is_finite() && f.cod->is_finite();
  if (f.dom->max_dim() != f.cod->max_dim())
    return {IsoVerdict::Kind::NotIso, "truncation dimensions differ"};
  for (int n = 0; n <= f.dom->max_dim(); ++n) {
    std::map<std::string, std::string> image;  // cod cell -> dom preimage
    for (const auto& c : f.dom->cells(n, budget)) {
      const std::string fc = f.apply(n, c);
      if (!f.cod->has_cell(n, fc))
        return {IsoVerdict::Kind::NotIso,
                "image of " + c + " lies outside the codomain"};
      auto [it, fresh] = image.emplace(fc, c);
      if (!fresh)
        return {IsoVerdict::Kind::NotIso,
                std::to_string(n) + "-cells " + it->second + " and " + c +
                    " share the image " + fc};
    }
    if (finite) {
      for (const auto& d : f.cod->cells(n, budget))
        if (image.find(d) == image.end())
          return {IsoVerdict::Kind::NotIso,
                  std::to_string(n) + "-cell " + d + " has no preimage"};
    }
  }
  return {finite ? IsoVerdict::Kind::Iso : IsoVerdict::Kind::IsoUpToBudget,
          ""};
}

}  // namespace polycat
