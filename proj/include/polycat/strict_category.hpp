#pragma once

// Truncated strict omega-categories. `StrictCategory` is the abstract
// interface shared by finite table-backed categories and lazily enumerated
// free categories; `TableCategory` stores every operation as an explicit
// finite table and is validated against the full axiom set by
// `validate_category`.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polycat/globular_set.hpp"
#include "polycat/report.hpp"

namespace polycat {

class StrictCategory {
 public:
  virtual ~StrictCategory() = default;

  virtual int max_dim() const = 0;
  virtual bool is_finite() const = 0;

  // All n-cells whose canonical size is at most `budget`, in a deterministic
  // order. Finite categories ignore the budget and return every cell.
  virtual std::vector<std::string> cells(int n, int budget) const = 0;
  virtual bool has_cell(int n, const std::string& c) const = 0;

  // Boundaries one dimension down, for 1 <= n <= max_dim.
  virtual std::string src(int n, const std::string& c) const = 0;
  virtual std::string tgt(int n, const std::string& c) const = 0;

  // Identity on an n-cell, a cell of dimension n+1; defined for n < max_dim.
  virtual std::string identity(int n, const std::string& c) const = 0;

  // Composition of n-cells along a shared k-boundary, 0 <= k < n. Returns
  // nullopt when the pair is not composable.
  virtual std::optional<std::string> comp(int k, int n, const std::string& x,
                                          const std::string& y) const = 0;
};

// Iterated boundary: the k-dimensional source/target of an n-cell.
inline std::string src_k(const StrictCategory& c, int k, int n,
                         std::string cell) {
  for (int d = n; d > k; --d) cell = c.src(d, cell);
  return cell;
}

inline std::string tgt_k(const StrictCategory& c, int k, int n,
                         std::string cell) {
  for (int d = n; d > k; --d) cell = c.tgt(d, cell);
  return cell;
}

// Iterated identity: lifts a from_dim-cell to dimension to_dim.
inline std::string identity_up(const StrictCategory& c, int from_dim,
                               int to_dim, std::string cell) {
  for (int d = from_dim; d < to_dim; ++d) cell = c.identity(d, cell);
  return cell;
}

struct CompKey {
  int n;  // dimension of the cells being composed
  int k;  // shared boundary dimension, k < n
  friend bool operator<(const CompKey& a, const CompKey& b) {
    return std::tie(a.n, a.k) < std::tie(b.n, b.k);
  }
  friend bool operator==(const CompKey& a, const CompKey& b) {
    return a.n == b.n && a.k == b.k;
  }
};

class TableCategory final : public StrictCategory {
 public:
  int dims = 0;
  std::vector<std::vector<std::string>> cell_names;            // [n]
  std::vector<std::map<std::string, std::string>> src_tab;     // [n], n >= 1
  std::vector<std::map<std::string, std::string>> tgt_tab;     // [n], n >= 1
  std::vector<std::map<std::string, std::string>> id_tab;      // [n], n < dims
  std::map<CompKey,
           std::map<std::pair<std::string, std::string>, std::string>>
      comp_tab;

  TableCategory() : cell_names(1), src_tab(1), tgt_tab(1), id_tab(1) {}
  explicit TableCategory(int dim)
      : dims(dim),
        cell_names(dim + 1),
        src_tab(dim + 1),
        tgt_tab(dim + 1),
        id_tab(dim + 1) {}

  int max_dim() const override { return dims; }
  bool is_finite() const override { return true; }

  std::vector<std::string> cells(int n, int /*budget*/) const override {
    if (n < 0 || n > dims) return {};
    return cell_names[n];
  }

  bool has_cell(int n, const std::string& c) const override {
    if (n < 0 || n > dims) return false;
    for (const auto& x : cell_names[n])
      if (x == c) return true;
    return false;
  }

  std::string src(int n, const std::string& c) const override {
    return lookup(src_tab, n, c, "source");
  }
  std::string tgt(int n, const std::string& c) const override {
    return lookup(tgt_tab, n, c, "target");
  }

  std::string identity(int n, const std::string& c) const override {
    if (n < 0 || n >= dims)
      throw PolycatError("malformed.identity",
                         "no identities above dimension " +
                             std::to_string(dims));
    return lookup(id_tab, n, c, "identity");
  }

  std::optional<std::string> comp(int k, int n, const std::string& x,
                                  const std::string& y) const override {
    if (!(0 <= k && k < n && n <= dims))
      throw PolycatError("malformed.comp", "bad composition dimensions n=" +
                                               std::to_string(n) + " k=" +
                                               std::to_string(k));
    auto tab = comp_tab.find(CompKey{n, k});
    if (tab == comp_tab.end()) return std::nullopt;
    auto it = tab->second.find({x, y});
    if (it == tab->second.end()) return std::nullopt;
    return it->second;
  }

  void add_cell(int n, const std::string& name) {
    cell_names[n].push_back(name);
  }
  void set_boundaries(int n, const std::string& c, const std::string& s,
                      const std::string& t) {
    src_tab[n][c] = s;
    tgt_tab[n][c] = t;
  }
  void set_identity(int n, const std::string& c, const std::string& idc) {
    id_tab[n][c] = idc;
  }
  void set_comp(int k, int n, const std::string& x, const std::string& y,
                const std::string& z) {
    comp_tab[CompKey{n, k}][{x, y}] = z;
  }

 private:
  std::string lookup(const std::vector<std::map<std::string, std::string>>& t,
                     int n, const std::string& c, const char* what) const {
    if (n < 0 || n >= static_cast<int>(t.size()))
      throw PolycatError("malformed.lookup",
                         std::string(what) + " queried at bad dimension " +
                             std::to_string(n));
    auto it = t[n].find(c);
    if (it == t[n].end())
      throw PolycatError("malformed.lookup", std::string(what) + " of " +
                                                 std::to_string(n) +
                                                 "-cell " + c +
                                                 " is not recorded");
    return it->second;
  }
};

// The underlying globular data of a finite category (cells with boundaries,
// forgetting identities and compositions).
inline GlobularSet underlying_globular(const TableCategory& c) {
  GlobularSet g(c.dims);
  for (int n = 0; n <= c.dims; ++n) g.cells[n] = c.cell_names[n];
  for (int n = 1; n <= c.dims; ++n) {
    g.src[n] = c.src_tab[n];
    g.tgt[n] = c.tgt_tab[n];
  }
  return g;
}

// Conventional name for the same forgetful operation.
inline GlobularSet forget(const TableCategory& c) {
  return underlying_globular(c);
}

namespace detail {

// Guarded lookups used by the validator: structural gaps are reported
// elsewhere, so axiom instances touching missing data are skipped rather
// than crashing or double-reporting.
inline std::optional<std::string> try_bnd(
    const std::vector<std::map<std::string, std::string>>& tab, int n,
    const std::string& c) {
  if (n < 0 || n >= static_cast<int>(tab.size())) return std::nullopt;
  auto it = tab[n].find(c);
  if (it == tab[n].end()) return std::nullopt;
  return it->second;
}

inline std::optional<std::string> try_iter(
    const std::vector<std::map<std::string, std::string>>& tab, int from,
    int to, std::string c) {
  for (int d = from; d > to; --d) {
    auto b = try_bnd(tab, d, c);
    if (!b) return std::nullopt;
    c = *b;
  }
  return c;
}

inline std::optional<std::string> try_comp(const TableCategory& cat, int k,
                                           int n, const std::string& x,
                                           const std::string& y) {
  auto tab = cat.comp_tab.find(CompKey{n, k});
  if (tab == cat.comp_tab.end()) return std::nullopt;
  auto it = tab->second.find({x, y});
  if (it == tab->second.end()) return std::nullopt;
  return it->second;
}

inline std::optional<std::string> try_id_up(const TableCategory& cat, int from,
                                            int to, std::string c) {
  for (int d = from; d < to; ++d) {
    auto it = try_bnd(cat.id_tab, d, c);
    if (!it) return std::nullopt;
    c = *it;
  }
  return c;
}

}  // namespace detail

// Full axiom check for a finite table-backed category. Violation codes:
//   malformed.*          structural gaps (duplicate names, partial tables,
//                        missing composable entries, non-composable entries)
//   globular.*           globular identities on the underlying data
//   axiom.id_boundary    src(id x) = x = tgt(id x)
//   axiom.boundary       boundaries of composites
//   axiom.unit_left/right  iterated identities are units
//   axiom.assoc          associativity of each composition
//   axiom.interchange    interchange between nested composition levels
//   axiom.id_functorial  identities commute with composition
// Every family is checked independently; instances whose inputs are missing
// are skipped, since the gap itself is already reported as malformed.
inline ValidationReport validate_category(const TableCategory& cat) {
  ValidationReport rep;
  using detail::try_bnd;
  using detail::try_comp;
  using detail::try_id_up;
  using detail::try_iter;

  // Structure: table shapes, name uniqueness, boundary/identity totality.
  rep.merge(validate_globular(underlying_globular(cat)));
  for (int n = 0; n < cat.dims; ++n) {
    for (const auto& c : cat.cell_names[n]) {
      auto it = cat.id_tab[n].find(c);
      if (it == cat.id_tab[n].end())
        rep.add("malformed.identity", "missing identity on " +
                                          std::to_string(n) + "-cell " + c);
      else if (!cat.has_cell(n + 1, it->second))
        rep.add("malformed.identity", "identity of " + c +
                                          " is undeclared cell " + it->second);
    }
  }

  // Composition tables: entry present exactly for composable pairs, and
  // entries only mention declared cells.
  for (int n = 1; n <= cat.dims; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto tabit = cat.comp_tab.find(CompKey{n, k});
      for (const auto& x : cat.cell_names[n]) {
        auto xt = try_iter(cat.tgt_tab, n, k, x);
        if (!xt) continue;
        for (const auto& y : cat.cell_names[n]) {
          auto ys = try_iter(cat.src_tab, n, k, y);
          if (!ys) continue;
          const bool composable = (*xt == *ys);
          const bool present =
              tabit != cat.comp_tab.end() &&
              tabit->second.count({x, y}) > 0;
          if (composable && !present)
            rep.add("malformed.comp_missing",
                    "no entry for composable pair (" + x + ", " + y +
                        ") along dimension " + std::to_string(k));
          if (!composable && present)
            rep.add("malformed.comp_not_composable",
                    "entry for non-composable pair (" + x + ", " + y +
                        ") along dimension " + std::to_string(k));
          if (present && !cat.has_cell(n, tabit->second.at({x, y})))
            rep.add("malformed.comp_result",
                    "composite of (" + x + ", " + y + ") is undeclared cell " +
                        tabit->second.at({x, y}));
        }
      }
      if (tabit != cat.comp_tab.end()) {
        for (const auto& [pair, z] : tabit->second) {
          if (!cat.has_cell(n, pair.first) || !cat.has_cell(n, pair.second))
            rep.add("malformed.comp_entry",
                    "composition entry mentions undeclared cells (" +
                        pair.first + ", " + pair.second + ")");
          (void)z;
        }
      }
    }
  }

  // Identity boundaries: src(id x) = x = tgt(id x).
  for (int n = 0; n < cat.dims; ++n) {
    for (const auto& c : cat.cell_names[n]) {
      auto id = try_bnd(cat.id_tab, n, c);
      if (!id) continue;
      auto s = try_bnd(cat.src_tab, n + 1, *id);
      auto t = try_bnd(cat.tgt_tab, n + 1, *id);
      if (s && *s != c)
        rep.add("axiom.id_boundary",
                "src(id " + c + ") = " + *s + ", expected " + c);
      if (t && *t != c)
        rep.add("axiom.id_boundary",
                "tgt(id " + c + ") = " + *t + ", expected " + c);
    }
  }

  // Boundaries of composites.
  for (const auto& [key, tab] : cat.comp_tab) {
    const int n = key.n, k = key.k;
    for (const auto& [pair, z] : tab) {
      const auto& [x, y] = pair;
      auto zs = try_bnd(cat.src_tab, n, z);
      auto zt = try_bnd(cat.tgt_tab, n, z);
      if (k == n - 1) {
        auto xs = try_bnd(cat.src_tab, n, x);
        auto yt = try_bnd(cat.tgt_tab, n, y);
        if (zs && xs && *zs != *xs)
          rep.add("axiom.boundary", "src(" + x + " *" + std::to_string(k) +
                                        " " + y + ") = " + *zs +
                                        ", expected " + *xs);
        if (zt && yt && *zt != *yt)
          rep.add("axiom.boundary", "tgt(" + x + " *" + std::to_string(k) +
                                        " " + y + ") = " + *zt +
                                        ", expected " + *yt);
      } else {
        auto xs = try_bnd(cat.src_tab, n, x);
        auto ys = try_bnd(cat.src_tab, n, y);
        auto xt = try_bnd(cat.tgt_tab, n, x);
        auto yt = try_bnd(cat.tgt_tab, n, y);
        if (xs && ys && zs) {
          auto want = try_comp(cat, k, n - 1, *xs, *ys);
          if (want && *zs != *want)
            rep.add("axiom.boundary", "src(" + x + " *" + std::to_string(k) +
                                          " " + y + ") = " + *zs +
                                          ", expected " + *want);
        }
        if (xt && yt && zt) {
          auto want = try_comp(cat, k, n - 1, *xt, *yt);
          if (want && *zt != *want)
            rep.add("axiom.boundary", "tgt(" + x + " *" + std::to_string(k) +
                                          " " + y + ") = " + *zt +
                                          ", expected " + *want);
        }
      }
    }
  }

  // Units: iterated identities on the k-boundary act trivially.
  for (int n = 1; n <= cat.dims; ++n) {
    for (int k = 0; k < n; ++k) {
      for (const auto& x : cat.cell_names[n]) {
        auto sk = try_iter(cat.src_tab, n, k, x);
        auto tk = try_iter(cat.tgt_tab, n, k, x);
        if (sk) {
          auto e = try_id_up(cat, k, n, *sk);
          if (e) {
            auto z = try_comp(cat, k, n, *e, x);
            if (z && *z != x)
              rep.add("axiom.unit_left",
                      "id tower on " + *sk + " composed with " + x + " gives " +
                          *z + " along dimension " + std::to_string(k));
          }
        }
        if (tk) {
          auto e = try_id_up(cat, k, n, *tk);
          if (e) {
            auto z = try_comp(cat, k, n, x, *e);
            if (z && *z != x)
              rep.add("axiom.unit_right",
                      x + " composed with id tower on " + *tk + " gives " +
                          *z + " along dimension " + std::to_string(k));
          }
        }
      }
    }
  }

  // Associativity, per composition table.
  for (const auto& [key, tab] : cat.comp_tab) {
    const int n = key.n, k = key.k;
    for (const auto& x : cat.cell_names[n]) {
      for (const auto& y : cat.cell_names[n]) {
        auto xy = detail::try_comp(cat, k, n, x, y);
        if (!xy) continue;
        for (const auto& z : cat.cell_names[n]) {
          auto yz = detail::try_comp(cat, k, n, y, z);
          if (!yz) continue;
          auto l = detail::try_comp(cat, k, n, *xy, z);
          auto r = detail::try_comp(cat, k, n, x, *yz);
          if (l && r && *l != *r)
            rep.add("axiom.assoc", "((" + x + " " + y + ") " + z + ") = " +
                                       *l + " but (" + x + " (" + y + " " + z +
                                       ")) = " + *r + " along dimension " +
                                       std::to_string(k));
        }
      }
    }
    (void)tab;
  }

  // Interchange: for k < j < n, (x *j y) *k (z *j w) = (x *k z) *j (y *k w)
  // whenever both sides are defined.
  for (int n = 2; n <= cat.dims; ++n) {
    for (int j = 1; j < n; ++j) {
      for (int k = 0; k < j; ++k) {
        for (const auto& x : cat.cell_names[n])
          for (const auto& y : cat.cell_names[n]) {
            auto xy = detail::try_comp(cat, j, n, x, y);
            if (!xy) continue;
            for (const auto& z : cat.cell_names[n])
              for (const auto& w : cat.cell_names[n]) {
                auto zw = detail::try_comp(cat, j, n, z, w);
                if (!zw) continue;
                auto lhs = detail::try_comp(cat, k, n, *xy, *zw);
                auto xz = detail::try_comp(cat, k, n, x, z);
                auto yw = detail::try_comp(cat, k, n, y, w);
                if (!lhs || !xz || !yw) continue;
                auto rhs = detail::try_comp(cat, j, n, *xz, *yw);
                if (rhs && *lhs != *rhs)
                  rep.add("axiom.interchange",
                          "(" + x + " *" + std::to_string(j) + " " + y +
                              ") *" + std::to_string(k) + " (" + z + " *" +
                              std::to_string(j) + " " + w + ") = " + *lhs +
                              " but the interchanged composite is " + *rhs);
              }
          }
      }
    }
  }

  // Identities are functorial for every lower composition.
  for (const auto& [key, tab] : cat.comp_tab) {
    const int n = key.n, k = key.k;
    if (n >= cat.dims) continue;
    for (const auto& [pair, z] : tab) {
      auto ix = try_bnd(cat.id_tab, n, pair.first);
      auto iy = try_bnd(cat.id_tab, n, pair.second);
      auto iz = try_bnd(cat.id_tab, n, z);
      if (!ix || !iy || !iz) continue;
      auto got = detail::try_comp(cat, k, n + 1, *ix, *iy);
      if (got && *got != *iz)
        rep.add("axiom.id_functorial",
                "id(" + pair.first + ") *" + std::to_string(k) + " id(" +
                    pair.second + ") = " + *got + " but id of the composite is " +
                    *iz);
    }
  }

  return rep;
}

// Pads a category with formal identity cells up to dimension new_dim. New
// cells are named "id(<lower>)"; all compositions involving them are forced
// by the axioms.
inline TableCategory extend_with_identities(const TableCategory& c,
                                            int new_dim) {
  if (new_dim < c.dims)
    throw PolycatError("malformed.extend",
                       "cannot extend to a lower dimension");
  TableCategory e(new_dim);
  e.cell_names = c.cell_names;
  e.cell_names.resize(new_dim + 1);
  e.src_tab = c.src_tab;
  e.src_tab.resize(new_dim + 1);
  e.tgt_tab = c.tgt_tab;
  e.tgt_tab.resize(new_dim + 1);
  e.id_tab = c.id_tab;
  e.id_tab.resize(new_dim + 1);
  e.comp_tab = c.comp_tab;

  auto idname = [](const std::string& s) { return "id(" + s + ")"; };

  for (int d = c.dims + 1; d <= new_dim; ++d) {
    for (const auto& lower : e.cell_names[d - 1]) {
      const std::string name = idname(lower);
      if (e.has_cell(d - 1, name) || e.has_cell(d, name))
        throw PolycatError("malformed.extend",
                           "identity name collision at " + name);
      e.add_cell(d, name);
      e.set_boundaries(d, name, lower, lower);
      e.set_identity(d - 1, lower, name);
    }
    // Top-boundary composition: id(x) *_{d-1} id(y) needs x = y.
    for (const auto& lower : e.cell_names[d - 1]) {
      const std::string name = idname(lower);
      e.set_comp(d - 1, d, name, name, name);
    }
    // Lower compositions descend to dimension d-1.
    for (int k = 0; k < d - 1; ++k) {
      auto lowtab = e.comp_tab.find(CompKey{d - 1, k});
      if (d - 1 == 0 || lowtab == e.comp_tab.end()) continue;
      for (const auto& [pair, z] : lowtab->second)
        e.set_comp(k, d, idname(pair.first), idname(pair.second), idname(z));
    }
  }
  return e;
}

}  // namespace polycat
