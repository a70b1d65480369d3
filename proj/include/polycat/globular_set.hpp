#pragma once

// Finite truncated globular sets: for each dimension n <= max_dim a finite
// set of cell names, with source/target maps one dimension down satisfying
// the globular identities src(src x) = src(tgt x) and tgt(src x) = tgt(tgt x).

#include <map>
#include <string>
#include <vector>

#include "polycat/report.hpp"

namespace polycat {

struct GlobularSet {
  int max_dim = 0;
  // cells[n] lists the n-cells in a fixed, deterministic order.
  std::vector<std::vector<std::string>> cells;
  // src[n], tgt[n] map n-cells to (n-1)-cells; index 0 is unused.
  std::vector<std::map<std::string, std::string>> src;
  std::vector<std::map<std::string, std::string>> tgt;

  GlobularSet() : cells(1), src(1), tgt(1) {}
  explicit GlobularSet(int dim)
      : max_dim(dim), cells(dim + 1), src(dim + 1), tgt(dim + 1) {}

  bool has_cell(int n, const std::string& c) const {
    if (n < 0 || n > max_dim) return false;
    for (const auto& x : cells[n])
      if (x == c) return true;
    return false;
  }

  const std::string& src_of(int n, const std::string& c) const {
    auto it = src[n].find(c);
    if (it == src[n].end())
      throw PolycatError("malformed.boundary_map",
                         "no source recorded for " + std::to_string(n) +
                             "-cell " + c);
    return it->second;
  }

  const std::string& tgt_of(int n, const std::string& c) const {
    auto it = tgt[n].find(c);
    if (it == tgt[n].end())
      throw PolycatError("malformed.boundary_map",
                         "no target recorded for " + std::to_string(n) +
                             "-cell " + c);
    return it->second;
  }

  friend bool operator==(const GlobularSet& a, const GlobularSet& b) {
    return a.max_dim == b.max_dim && a.cells == b.cells && a.src == b.src &&
           a.tgt == b.tgt;
  }
};

// Structural well-formedness plus the globular identities. Malformations
// (duplicates, partial or dangling boundary maps) are reported under
// "malformed.*"; failures of the globular identities under "globular.*".
inline ValidationReport validate_globular(const GlobularSet& x) {
  ValidationReport rep;
  if (x.max_dim < 0 || static_cast<int>(x.cells.size()) != x.max_dim + 1 ||
      static_cast<int>(x.src.size()) != x.max_dim + 1 ||
      static_cast<int>(x.tgt.size()) != x.max_dim + 1) {
    rep.add("malformed.shape", "dimension tables do not match max_dim");
    return rep;
  }
  for (int n = 0; n <= x.max_dim; ++n) {
    std::map<std::string, int> seen;
    for (const auto& c : x.cells[n]) {
      if (++seen[c] == 2)
        rep.add("malformed.duplicate_cell",
                "duplicate " + std::to_string(n) + "-cell " + c);
    }
  }
  for (int n = 1; n <= x.max_dim; ++n) {
    for (const auto& c : x.cells[n]) {
      for (const auto* tab : {&x.src[n], &x.tgt[n]}) {
        auto it = tab->find(c);
        const char* which = (tab == &x.src[n]) ? "source" : "target";
        if (it == tab->end()) {
          rep.add("malformed.boundary_map",
                  std::string("missing ") + which + " for " +
                      std::to_string(n) + "-cell " + c);
        } else if (!x.has_cell(n - 1, it->second)) {
          rep.add("malformed.boundary_map",
                  std::string(which) + " of " + std::to_string(n) + "-cell " +
                      c + " is undeclared cell " + it->second);
        }
      }
    }
    for (const auto* tab : {&x.src[n], &x.tgt[n]}) {
      for (const auto& [c, v] : *tab) {
        if (!x.has_cell(n, c))
          rep.add("malformed.boundary_map",
                  "boundary entry for undeclared " + std::to_string(n) +
                      "-cell " + c);
      }
    }
  }
  // Globular identities, checkable once boundary maps are total.
  for (int n = 2; n <= x.max_dim; ++n) {
    for (const auto& c : x.cells[n]) {
      auto s = x.src[n].find(c);
      auto t = x.tgt[n].find(c);
      if (s == x.src[n].end() || t == x.tgt[n].end()) continue;
      auto ss = x.src[n - 1].find(s->second);
      auto st = x.src[n - 1].find(t->second);
      auto ts = x.tgt[n - 1].find(s->second);
      auto tt = x.tgt[n - 1].find(t->second);
      if (ss == x.src[n - 1].end() || st == x.src[n - 1].end() ||
          ts == x.tgt[n - 1].end() || tt == x.tgt[n - 1].end())
        continue;
      if (ss->second != st->second)
        rep.add("globular.src", "src(src " + c + ") = " + ss->second +
                                    " but src(tgt " + c + ") = " + st->second);
      if (ts->second != tt->second)
        rep.add("globular.tgt", "tgt(src " + c + ") = " + ts->second +
                                    " but tgt(tgt " + c + ") = " + tt->second);
    }
  }
  return rep;
}

// A dimension-respecting map of globular sets, given by explicit tables.
struct GlobularMap {
  GlobularSet dom;
  GlobularSet cod;
  // map[n] sends n-cells of dom to n-cells of cod.
  std::vector<std::map<std::string, std::string>> map;

  const std::string& apply(int n, const std::string& c) const {
    if (n < 0 || n >= static_cast<int>(map.size()))
      throw PolycatError("malformed.map", "no table at dimension " +
                                              std::to_string(n));
    auto it = map[n].find(c);
    if (it == map[n].end())
      throw PolycatError("malformed.map", "no image for " + std::to_string(n) +
                                              "-cell " + c);
    return it->second;
  }
};

// Totality, boundary preservation, and codomain membership. By default the
// codomain must have the same truncation dimension as the domain; pass
// allow_higher_cod to permit a strictly deeper codomain.
inline ValidationReport validate_glob_map(const GlobularMap& f,
                                          bool allow_higher_cod = false) {
  ValidationReport rep;
  if (f.cod.max_dim < f.dom.max_dim ||
      (!allow_higher_cod && f.cod.max_dim != f.dom.max_dim)) {
    rep.add("malformed.dim_mismatch",
            "domain has max_dim " + std::to_string(f.dom.max_dim) +
                ", codomain " + std::to_string(f.cod.max_dim));
    return rep;
  }
  if (static_cast<int>(f.map.size()) != f.dom.max_dim + 1) {
    rep.add("malformed.map", "map tables do not cover every dimension");
    return rep;
  }
  for (int n = 0; n <= f.dom.max_dim; ++n) {
    for (const auto& c : f.dom.cells[n]) {
      auto it = f.map[n].find(c);
      if (it == f.map[n].end()) {
        rep.add("malformed.map",
                "no image for " + std::to_string(n) + "-cell " + c);
        continue;
      }
      if (!f.cod.has_cell(n, it->second)) {
        rep.add("malformed.map", "image of " + c + " is undeclared cell " +
                                     it->second);
        continue;
      }
      if (n >= 1) {
        auto chk = [&](bool source) {
          const auto& btab = source ? f.dom.src[n] : f.dom.tgt[n];
          const auto& ctab = source ? f.cod.src[n] : f.cod.tgt[n];
          auto b = btab.find(c);
          if (b == btab.end()) return;  // reported by validate_globular
          auto fb = f.map[n - 1].find(b->second);
          auto cb = ctab.find(it->second);
          if (fb == f.map[n - 1].end() || cb == ctab.end()) return;
          if (fb->second != cb->second)
            rep.add(source ? "globmap.src" : "globmap.tgt",
                    std::string(source ? "source" : "target") +
                        " not preserved at " + std::to_string(n) + "-cell " +
                        c);
        };
        chk(true);
        chk(false);
      }
    }
  }
  return rep;
}

// Composition g . f; requires cod(f) and dom(g) to be the same globular set,
// compared structurally.
inline GlobularMap compose_glob_maps(const GlobularMap& f,
                                     const GlobularMap& g) {
  if (!(f.cod == g.dom))
    throw PolycatError("malformed.compose",
                       "codomain of first map differs from domain of second");
  GlobularMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.map.resize(f.dom.max_dim + 1);
  for (int n = 0; n <= f.dom.max_dim; ++n)
    for (const auto& c : f.dom.cells[n])
      h.map[n][c] = g.apply(n, f.apply(n, c));
  return h;
}

inline GlobularMap identity_glob_map(const GlobularSet& x) {
  GlobularMap h;
  h.dom = x;
  h.cod = x;
  h.map.resize(x.max_dim + 1);
  for (int n = 0; n <= x.max_dim; ++n)
    for (const auto& c : x.cells[n]) h.map[n][c] = c;
  return h;
}

}  // namespace polycat
