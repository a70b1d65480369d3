#pragma once

// Presents a category as a split coequalizer of free categories and
// transports the categorical structure along the splitting:
//
//  - `canonical_split_pair` builds the two-stage free presentation
//    FW(FW(C)) => FW(C) -> C with its splitting data, all at the polygraph
//    level where the splitting lives; `degenerate_split_fork` is the trivial
//    presentation of C by itself, useful as a sanity case.
//  - `transport_structure` rebuilds a category E on the resolution's
//    globular core from the splitting alone (identities and compositions
//    are computed upstairs and carried back down), together with the
//    quotient functor h and the comparison functor E -> C.
//  - `resplit_in_pol` re-lifts the splitting to the resolutions of the
//    transported category, closing the loop.
//  - `reflect_iso` decides isomorphy of a functor from its resolved core
//    map; `verify_coequalizer_universal` checks the coequalizer's universal property
//    against a given cone, including an exhaustive search over candidate
//    mediating maps when the codomain is small enough.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycat/adjunction.hpp"
#include "polycat/free_category.hpp"
#include "polycat/functor.hpp"
#include "polycat/glob_poly.hpp"
#include "polycat/globular_set.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"

namespace polycat {

// A split coequalizer presentation of `base`:
//
//        f                 q
//   cp ======> dp  ------------>  base
//        g
//
// with q.f = q.g, split at the polygraph level by sections a of k and b of
// the resolved f, where k resolves q. The canonical instance takes
// dp = FW(base) and cp = FW(dp) with the evaluation functors; the
// degenerate instance is the identity presentation.
struct SplitFork {
  std::shared_ptr<const StrictCategory> base;
  std::shared_ptr<const Resolution> r;  // presents base

  std::shared_ptr<const StrictCategory> dp;
  std::shared_ptr<const Resolution> rd;  // presents dp

  std::shared_ptr<const StrictCategory> cp;
  std::shared_ptr<const Resolution> rdd;  // presents cp

  OmegaFunctor q;     // dp -> base
  OmegaFunctor f, g;  // cp -> dp
  PolyMorphism k;     // rd -> r, resolves q
  PolyMorphism a;     // r -> rd, section of k
  PolyMorphism b;     // rd -> rdd, section of the resolved f
};

inline SplitFork canonical_split_pair(
    std::shared_ptr<const StrictCategory> base) {
  SplitFork fork;
  fork.base = base;
  fork.r = make_resolution(base);
  auto dp = free_cat(fork.r);
  fork.dp = dp;
  fork.rd = make_resolution(dp);
  auto cp = free_cat(fork.rd);
  fork.cp = cp;
  fork.rdd = make_resolution(cp);

  fork.q = extend_functor(dp, counit_assignment(base));
  fork.f = extend_functor(cp, counit_assignment(dp));
  fork.k = resolve_functor(fork.q, fork.rd, fork.r);
  fork.g = free_functor(fork.k, cp, dp);
  fork.a = unit_poly(fork.r, fork.rd);
  fork.b = unit_poly(fork.rd, fork.rdd);
  return fork;
}

inline SplitFork degenerate_split_fork(
    std::shared_ptr<const StrictCategory> base) {
  SplitFork fork;
  fork.base = base;
  fork.r = make_resolution(base);
  fork.dp = base;
  fork.rd = fork.r;
  fork.cp = base;
  fork.rdd = fork.r;
  fork.q = identity_functor(base);
  fork.f = identity_functor(base);
  fork.g = identity_functor(base);
  fork.k = identity_poly_morphism(fork.r);
  fork.a = identity_poly_morphism(fork.r);
  fork.b = identity_poly_morphism(fork.r);
  return fork;
}

// Checks the fork and splitting equations on every generator and cell the
// budget reaches: q.f = q.g, k.a = id, Wf.b = id and Wg.b = a.k.
inline ValidationReport validate_split_fork(const SplitFork& fork,
                                            int budget) {
  ValidationReport rep;

  for (int n = 0; n <= fork.cp->max_dim(); ++n)
    for (const auto& c : fork.cp->cells(n, budget))
      if (fork.q.apply(n, fork.f.apply(n, c)) !=
          fork.q.apply(n, fork.g.apply(n, c)))
        rep.add("fork.coequal",
                "q.f and q.g disagree on " + std::to_string(n) + "-cell " + c);

  for (int n = 0; n <= fork.r->max_dim(); ++n)
    for (const auto& e : fork.r->enumerate_gens(n, budget))
      if (fork.k.apply(n, fork.a.apply(n, e)) != e)
        rep.add("fork.split_ka", "k.a moves the generator " + e);

  const PolyMorphism wf = resolve_functor(fork.f, fork.rdd, fork.rd);
  const PolyMorphism wg = resolve_functor(fork.g, fork.rdd, fork.rd);
  for (int n = 0; n <= fork.rd->max_dim(); ++n) {
    for (const auto& d : fork.rd->enumerate_gens(n, budget)) {
      const std::string bd = fork.b.apply(n, d);
      if (wf.apply(n, bd) != d)
        rep.add("fork.split_fb", "Wf.b moves the generator " + d);
      if (wg.apply(n, bd) != fork.a.apply(n, fork.k.apply(n, d)))
        rep.add("fork.split_gb",
                "Wg.b and a.k disagree on the generator " + d);
    }
  }
  return rep;
}

// The transported category on the core, with the quotient and comparison
// functors and the two transport maps that build it.
struct Transport {
  std::shared_ptr<const TableCategory> e;
  OmegaFunctor h;           // dp -> e
  OmegaFunctor comparison;  // e -> base, the z-component
  std::function<std::string(int, const std::string&)> alpha;  // e -> dp cells
  std::function<std::string(int, const std::string&)> ell;    // dp -> e cells
};

inline Transport transport_structure(const SplitFork& fork) {
  if (!fork.base->is_finite())
    throw PolycatError("transport.infinite",
                       "structure transport needs a finite base category");

  const GlobularSet core = poly_core(*fork.r);

  auto a = fork.a;
  std::function<std::string(int, const std::string&)> alpha =
      [a](int n, const std::string& e) { return triple_z(n, a.apply(n, e)); };

  auto k = fork.k;
  auto rd = fork.rd;
  auto ell_memo =
      std::make_shared<std::map<std::pair<int, std::string>, std::string>>();
  std::function<std::string(int, const std::string&)> ell =
      [k, rd, ell_memo](int n, const std::string& d) {
        const auto it = ell_memo->find({n, d});
        if (it != ell_memo->end()) return it->second;
        std::string out = k.apply(n, chi_cell(*rd, n, d));
        ell_memo->emplace(std::pair<int, std::string>{n, d}, out);
        return out;
      };

  auto e = std::make_shared<TableCategory>(core.max_dim);
  for (int n = 0; n <= core.max_dim; ++n) {
    for (const auto& c : core.cells[n]) {
      e->add_cell(n, c);
      if (n >= 1)
        e->set_boundaries(n, c, core.src[n].at(c), core.tgt[n].at(c));
    }
  }

  // Iterated boundaries inside the core, for composability of pairs.
  auto bnd = [&core](bool source, int n, std::string c, int k2) {
    while (n > k2) {
      c = (source ? core.src : core.tgt)[n].at(c);
      --n;
    }
    return c;
  };

  for (int n = 0; n <= core.max_dim; ++n) {
    for (const auto& c : core.cells[n]) {
      if (n < core.max_dim)
        e->set_identity(
            n, c, ell(n + 1, fork.dp->identity(n, alpha(n, c))));
      if (n >= 1) {
        for (int k2 = 0; k2 < n; ++k2) {
          for (const auto& d : core.cells[n]) {
            if (bnd(false, n, c, k2) != bnd(true, n, d, k2)) continue;
            auto z = fork.dp->comp(k2, n, alpha(n, c), alpha(n, d));
            if (!z)
              throw PolycatError("transport.comp",
                                 "upstairs composite missing for (" + c +
                                     ", " + d + ")");
            e->set_comp(k2, n, c, d, ell(n, *z));
          }
        }
      }
    }
  }

  Transport t;
  t.e = e;
  t.alpha = alpha;
  t.ell = ell;
  t.h = OmegaFunctor{fork.dp, e,
                     [ell](int n, const std::string& d) { return ell(n, d); }};
  t.comparison = OmegaFunctor{
      e, fork.base,
      [](int n, const std::string& c) { return triple_z(n, c); }};
  return t;
}

// Re-lifts the splitting to the resolution of the transported category:
// the fork Wf, Wg ⇉ Wh is split by the sections abar and b, where abar
// resolves the comparison functor and then re-embeds along the original
// section a. Checks Wh.abar = id, Wf.b = id and Wg.b = abar.Wh on budgeted
// generators; together these exhibit Wh as a split coequalizer of Wf, Wg.
inline ValidationReport resplit_in_pol(const SplitFork& fork,
                                       const Transport& t, int budget) {
  ValidationReport rep;
  auto re = make_resolution(t.e);
  const PolyMorphism abar = compose_poly_morphisms(
      resolve_functor(t.comparison, re, fork.r), fork.a);
  const PolyMorphism wh = resolve_functor(t.h, fork.rd, re);

  const PolyMorphism bbar = fork.b;
  const PolyMorphism wf = resolve_functor(fork.f, fork.rdd, fork.rd);
  const PolyMorphism wg = resolve_functor(fork.g, fork.rdd, fork.rd);

  for (int n = 0; n <= re->max_dim(); ++n)
    for (const auto& eg : re->enumerate_gens(n, budget))
      if (wh.apply(n, abar.apply(n, eg)) != eg)
        rep.add("resplit.section", "Wh.abar moves the generator " + eg);

  for (int n = 0; n <= fork.rd->max_dim(); ++n) {
    for (const auto& d : fork.rd->enumerate_gens(n, budget)) {
      const std::string bd = bbar.apply(n, d);
      if (wf.apply(n, bd) != d)
        rep.add("resplit.fsection", "Wf.bbar moves the generator " + d);
      if (wg.apply(n, bd) != abar.apply(n, wh.apply(n, d)))
        rep.add("resplit.square",
                "Wg.bbar and abar.Wh disagree on the generator " + d);
    }
  }
  return rep;
}

// Decides whether a functor between finite categories is an isomorphism by
// inspecting the core restriction of its resolution.
inline IsoVerdict reflect_iso(const OmegaFunctor& f,
                              std::shared_ptr<const Resolution> rdom,
                              std::shared_ptr<const Resolution> rcod,
                              int budget = 1) {
  const GlobularMap m =
      core_of_morphism(resolve_functor(f, rdom, rcod), budget);
  if (m.dom.max_dim != m.cod.max_dim)
    return {IsoVerdict::Kind::NotIso, "core truncation dimensions differ"};
  for (int n = 0; n <= m.dom.max_dim; ++n) {
    std::map<std::string, std::string> image;
    for (const auto& g : m.dom.cells[n]) {
      const std::string& img = m.apply(n, g);
      auto [it, fresh] = image.emplace(img, g);
      if (!fresh)
        return {IsoVerdict::Kind::NotIso,
                "core " + std::to_string(n) + "-generators " + it->second +
                    " and " + g + " share the image " + img};
    }
    for (const auto& d : m.cod.cells[n])
      if (image.find(d) == image.end())
        return {IsoVerdict::Kind::NotIso,
                "core " + std::to_string(n) + "-generator " + d +
                    " has no preimage"};
  }
  return {IsoVerdict::Kind::Iso, ""};
}

// Convenience entry point that builds both resolutions itself; the budget
// bounds the core enumeration, for which one already suffices on finite
// bases.
inline IsoVerdict check_iso_reflection(const OmegaFunctor& f,
                                       int budget = 1) {
  return reflect_iso(f, make_resolution(f.dom), make_resolution(f.cod),
                     budget);
}

struct UniversalCheck {
  ValidationReport rep;
  OmegaFunctor mediating;  // e -> cone codomain
};

// Universal property of the coequalizer against one cone m: dp -> X with
// m.f = m.g. The mediating map through h is forced cellwise because h has a
// section; when the search space is at most `exhaustive_cap`, every
// dimension-respecting cell map e -> X is also tried directly.
inline UniversalCheck verify_coequalizer_universal(const SplitFork& fork,
                                       const Transport& t,
                                       const OmegaFunctor& cone, int budget,
                                       long exhaustive_cap = 0) {
  UniversalCheck out;
  ValidationReport& rep = out.rep;

  if (cone.dom.get() != fork.dp.get()) {
    rep.add("cone.shape", "cone does not start at the fork's middle stage");
    return out;
  }
  for (int n = 0; n <= fork.cp->max_dim(); ++n)
    for (const auto& c : fork.cp->cells(n, budget))
      if (cone.apply(n, fork.f.apply(n, c)) !=
          cone.apply(n, fork.g.apply(n, c)))
        rep.add("cone.notcone",
                "cone does not equalize f and g at " + std::to_string(n) +
                    "-cell " + c);

  auto alpha = t.alpha;
  auto m = cone;
  out.mediating =
      OmegaFunctor{t.e, cone.cod, [m, alpha](int n, const std::string& c) {
                     return m.apply(n, alpha(n, c));
                   }};

  // Factoring through h reproduces the cone.
  for (int n = 0; n <= fork.dp->max_dim(); ++n)
    for (const auto& d : fork.dp->cells(n, budget))
      if (out.mediating.apply(n, t.h.apply(n, d)) != cone.apply(n, d))
        rep.add("universal.factor",
                "mediating map does not reproduce the cone at " + d);

  // h has the section alpha, which forces the mediating map cellwise.
  for (int n = 0; n <= t.e->max_dim(); ++n)
    for (const auto& c : t.e->cells(n, 0))
      if (t.ell(n, alpha(n, c)) != c)
        rep.add("universal.section", "h.alpha moves the cell " + c);

  if (exhaustive_cap > 0 && cone.cod->is_finite()) {
    // Every dimension-respecting cell map e -> X, checked directly.
    std::vector<std::pair<int, std::string>> slots;
    std::vector<std::vector<std::string>> choices;
    std::map<std::pair<int, std::string>, size_t> slot_of;
    long total = 1;
    for (int n = 0; n <= t.e->max_dim(); ++n) {
      const auto xs = cone.cod->cells(n, 0);
      for (const auto& c : t.e->cells(n, 0)) {
        slot_of[{n, c}] = slots.size();
        slots.emplace_back(n, c);
        choices.push_back(xs);
        if (total > 0 &&
            total <= exhaustive_cap / std::max<long>(1, xs.size()))
          total *= static_cast<long>(xs.size());
        else
          total = -1;
      }
    }
    if (total < 0 || total > exhaustive_cap) {
      rep.add("universal.skipped",
              "candidate space exceeds the exhaustive cap");
      return out;
    }

    // The factoring equations constrain one slot each, so resolve them to
    // forced choice indices once instead of re-walking dp per candidate.
    const size_t kNoChoice = static_cast<size_t>(-1);
    std::vector<std::pair<size_t, size_t>> forced;
    for (int n = 0; n <= fork.dp->max_dim(); ++n)
      for (const auto& d : fork.dp->cells(n, budget)) {
        const size_t s = slot_of.at({n, t.h.apply(n, d)});
        const std::string want = cone.apply(n, d);
        const auto& xs = choices[s];
        const auto it = std::find(xs.begin(), xs.end(), want);
        forced.emplace_back(
            s, it == xs.end() ? kNoChoice
                              : static_cast<size_t>(it - xs.begin()));
      }
    std::vector<size_t> med(slots.size(), kNoChoice);
    for (size_t i = 0; i < slots.size(); ++i) {
      const auto& xs = choices[i];
      const auto it =
          std::find(xs.begin(), xs.end(),
                    out.mediating.apply(slots[i].first, slots[i].second));
      if (it != xs.end()) med[i] = static_cast<size_t>(it - xs.begin());
    }

    long matches = 0;
    bool matched_mediating = false;
    std::vector<size_t> pick(slots.size(), 0);
    for (long iter = 0; iter < total; ++iter) {
      bool ok = true;
      for (const auto& [s, v] : forced)
        if (pick[s] != v) {
          ok = false;
          break;
        }
      if (ok) {
        ++matches;
        matched_mediating = matched_mediating || pick == med;
      }

      for (size_t i = 0; i < pick.size(); ++i) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
    }
    if (matches == 0)
      rep.add("universal.none", "no cell map factors the cone through h");
    else if (matches > 1)
      rep.add("universal.unique",
              "several cell maps factor the cone through h");
    else if (!matched_mediating)
      rep.add("universal.unique",
              "the factoring cell map differs from the mediating map");
  }
  return out;
}

}  // namespace polycat
