#pragma once

// The free truncated strict omega-category on a polygraph.
//
// Cells are equivalence classes of composition terms; this module decides
// the class of a term (dimensions 0..2) by rewriting it to a canonical
// normal cell:
//   * identities are erased,
//   * 0- and 1-composition are flattened to words/chains,
//   * 2-dimensional chains are brought to a left-greedy interchange normal
//     form by adjacent swaps that strictly decrease the chain in a total
//     lexicographic order on (whisker offset, generator key) sequences.
// Dimension-3 terms are type-checked but kept raw: their equality is
// refused, which is the honest boundary of the decision procedure here.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polycat/functor.hpp"
#include "polycat/normal_form.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"
#include "polycat/term.hpp"

namespace polycat {

inline constexpr int kMaxTermDim = 3;

// Dimension of the generator `g` in P (smallest dimension carrying it).
inline int gen_dim(const LazyPolygraph& p, const std::string& g) {
  for (int n = 0; n <= p.max_dim(); ++n)
    if (p.contains(n, g)) return n;
  throw PolycatError("type.unknown_gen", "generator not in polygraph: " + g);
}

// Dimension of a term; checks only the dimension discipline, not boundaries.
inline int term_dim(const LazyPolygraph& p, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen:
      return gen_dim(p, t->gen);
    case Term::Kind::Id: {
      const int d = term_dim(p, t->sub) + 1;
      if (d > kMaxTermDim)
        throw PolycatError("type.dim_cap", "identity term of dimension " +
                                               std::to_string(d));
      return d;
    }
    case Term::Kind::Comp: {
      const int a = term_dim(p, t->lhs);
      const int b = term_dim(p, t->rhs);
      if (a != b)
        throw PolycatError("type.dim_mismatch",
                           "composing cells of dimensions " +
                               std::to_string(a) + " and " +
                               std::to_string(b));
      if (t->along >= a)
        throw PolycatError("type.bad_level",
                           "composition level " + std::to_string(t->along) +
                               " not below cell dimension " +
                               std::to_string(a));
      return a;
    }
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

namespace detail {

// Objects along a path: result[i] is the object before the i-th generator.
inline std::vector<std::string> path_objects(const LazyPolygraph& p,
                                             const Path& path) {
  std::vector<std::string> obj{path.anchor};
  for (const auto& g : path.gens) {
    const AttachedGen at = p.attach_of(1, g);
    if (at.src.object != obj.back())
      throw PolycatError("type.boundary",
                         "path breaks at generator " + g + ": expected source " +
                             obj.back() + ", found " + at.src.object);
    obj.push_back(at.tgt.object);
  }
  return obj;
}

// Applies one whiskered layer to a path, checking that the layer's declared
// context matches the path both as a word and at the attachment object.
inline Path apply_layer(const LazyPolygraph& p, const Path& path,
                        const Whisker& w) {
  const AttachedGen at = p.attach_of(2, w.gen);
  const auto& sw = at.src.path.gens;
  const auto& tw = at.tgt.path.gens;
  const size_t off = w.left.size();
  if (path.gens.size() != off + sw.size() + w.right.size() ||
      !std::equal(w.left.begin(), w.left.end(), path.gens.begin()) ||
      !std::equal(sw.begin(), sw.end(), path.gens.begin() + off) ||
      !std::equal(w.right.begin(), w.right.end(),
                  path.gens.begin() + off + sw.size()))
    throw PolycatError("type.boundary",
                       "layer " + w.gen + " does not match its path context");
  const auto objs = path_objects(p, path);
  if (objs[off] != at.src.path.anchor)
    throw PolycatError("type.boundary",
                       "layer " + w.gen + " attached at object " +
                           at.src.path.anchor + " but the path passes through " +
                           objs[off]);
  Path out;
  out.anchor = path.anchor;
  out.gens.reserve(off + tw.size() + w.right.size());
  out.gens.insert(out.gens.end(), w.left.begin(), w.left.end());
  out.gens.insert(out.gens.end(), tw.begin(), tw.end());
  out.gens.insert(out.gens.end(), w.right.begin(), w.right.end());
  return out;
}

inline Path chain_target(const LazyPolygraph& p, const TwoCell& c) {
  Path cur = c.source;
  for (const auto& w : c.chain) cur = apply_layer(p, cur, w);
  return cur;
}

// Interchange normalization: adjacent layers are swapped whenever the swap
// strictly decreases the ((offset, generator) , (offset, generator)) pair in
// lexicographic order. Disjoint supports admit exactly the classical
// interchange swaps; the generator key breaks ties for layers with empty
// support sharing an offset. Each accepted swap strictly decreases the chain
// in a total order over its finite move class, so the sweep terminates.
inline void sort_chain(const LazyPolygraph& p, TwoCell& c) {
  auto key_of = [](const Whisker& w) {
    return std::pair<size_t, std::string>(w.left.size(), w.gen);
  };
  bool dirty = true;
  while (dirty) {
    dirty = false;
    Path before = c.source;
    for (size_t i = 0; i + 1 < c.chain.size(); ++i) {
      const Whisker& a = c.chain[i];
      const Whisker& b = c.chain[i + 1];
      const AttachedGen at_a = p.attach_of(2, a.gen);
      const AttachedGen at_b = p.attach_of(2, b.gen);
      const size_t sa = a.left.size();
      const size_t sb = b.left.size();
      const size_t a_tgt = at_a.tgt.path.gens.size();
      const size_t b_src = at_b.src.path.gens.size();

      std::optional<std::pair<Whisker, Whisker>> swapped;
      if (sb + b_src <= sa) {
        // b's support lies left of a's: b can act first at the same offset.
        std::vector<std::string> mid(a.left.begin() + sb + b_src,
                                     a.left.end());
        Whisker nb;
        nb.left = b.left;
        nb.gen = b.gen;
        nb.right = mid;
        nb.right.insert(nb.right.end(), at_a.src.path.gens.begin(),
                        at_a.src.path.gens.end());
        nb.right.insert(nb.right.end(), a.right.begin(), a.right.end());
        Whisker na;
        na.left = b.left;
        na.left.insert(na.left.end(), at_b.tgt.path.gens.begin(),
                       at_b.tgt.path.gens.end());
        na.left.insert(na.left.end(), mid.begin(), mid.end());
        na.gen = a.gen;
        na.right = a.right;
        swapped = {std::move(nb), std::move(na)};
      } else if (sb >= sa + a_tgt) {
        // b's support lies right of a's output.
        std::vector<std::string> mid(b.left.begin() + sa + a_tgt,
                                     b.left.end());
        Whisker nb;
        nb.left = a.left;
        nb.left.insert(nb.left.end(), at_a.src.path.gens.begin(),
                       at_a.src.path.gens.end());
        nb.left.insert(nb.left.end(), mid.begin(), mid.end());
        nb.gen = b.gen;
        nb.right = b.right;
        Whisker na;
        na.left = a.left;
        na.gen = a.gen;
        na.right = mid;
        na.right.insert(na.right.end(), at_b.tgt.path.gens.begin(),
                        at_b.tgt.path.gens.end());
        na.right.insert(na.right.end(), b.right.begin(), b.right.end());
        swapped = {std::move(nb), std::move(na)};
      }

      if (swapped) {
        const auto cur = std::pair(key_of(a), key_of(b));
        const auto alt =
            std::pair(key_of(swapped->first), key_of(swapped->second));
        if (alt < cur) {
          c.chain[i] = std::move(swapped->first);
          c.chain[i + 1] = std::move(swapped->second);
          dirty = true;
        }
      }
      before = apply_layer(p, before, c.chain[i]);
    }
  }
}

}  // namespace detail

inline NormalCell normalize(const LazyPolygraph& p, const TermPtr& t);

namespace detail {

inline NormalCell normalize0(const LazyPolygraph& p, const TermPtr& t) {
  if (t->kind != Term::Kind::Gen)
    throw PolycatError("term.corrupt", "0-dimensional non-generator term");
  if (!p.contains(0, t->gen))
    throw PolycatError("type.unknown_gen", "unknown object " + t->gen);
  return NormalCell::make0(t->gen);
}

inline Path normalize1(const LazyPolygraph& p, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen: {
      const AttachedGen at = p.attach_of(1, t->gen);
      Path out;
      out.anchor = at.src.object;
      out.gens = {t->gen};
      return out;
    }
    case Term::Kind::Id: {
      const NormalCell obj = normalize(p, t->sub);
      Path out;
      out.anchor = obj.object;
      return out;
    }
    case Term::Kind::Comp: {
      Path a = normalize1(p, t->lhs);
      Path b = normalize1(p, t->rhs);
      const auto objs = path_objects(p, a);
      if (objs.back() != b.anchor)
        throw PolycatError("type.boundary",
                           "1-composition boundary mismatch: " + objs.back() +
                               " vs " + b.anchor);
      a.gens.insert(a.gens.end(), b.gens.begin(), b.gens.end());
      return a;
    }
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

// Flattens a 2-dimensional term to a source path plus a layer chain; the
// chain is in raw application order, not yet interchange-sorted.
inline TwoCell flatten2(const LazyPolygraph& p, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen: {
      const AttachedGen at = p.attach_of(2, t->gen);
      TwoCell out;
      out.source = at.src.path;
      out.chain = {Whisker{{}, t->gen, {}}};
      return out;
    }
    case Term::Kind::Id: {
      TwoCell out;
      out.source = normalize1(p, t->sub);
      return out;
    }
    case Term::Kind::Comp: {
      TwoCell a = flatten2(p, t->lhs);
      TwoCell b = flatten2(p, t->rhs);
      if (t->along == 1) {
        const Path mid = chain_target(p, a);
        if (!(mid == b.source))
          throw PolycatError("type.boundary",
                             "vertical composition boundary mismatch");
        a.chain.insert(a.chain.end(), b.chain.begin(), b.chain.end());
        return a;
      }
      // Horizontal composition: left factor first, then the right factor
      // whiskered by the left factor's target path.
      const auto objs = path_objects(p, a.source);
      if (objs.back() != b.source.anchor)
        throw PolycatError("type.boundary",
                           "horizontal composition boundary mismatch: " +
                               objs.back() + " vs " + b.source.anchor);
      const Path atgt = chain_target(p, a);
      TwoCell out;
      out.source = a.source;
      out.source.gens.insert(out.source.gens.end(), b.source.gens.begin(),
                             b.source.gens.end());
      for (Whisker w : a.chain) {
        w.right.insert(w.right.end(), b.source.gens.begin(),
                       b.source.gens.end());
        out.chain.push_back(std::move(w));
      }
      for (Whisker w : b.chain) {
        std::vector<std::string> left = atgt.gens;
        left.insert(left.end(), w.left.begin(), w.left.end());
        w.left = std::move(left);
        out.chain.push_back(std::move(w));
      }
      return out;
    }
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

}  // namespace detail

inline NormalCell normalize(const LazyPolygraph& p, const TermPtr& t) {
  const int n = term_dim(p, t);
  switch (n) {
    case 0:
      return detail::normalize0(p, t);
    case 1:
      return NormalCell::make1(detail::normalize1(p, t));
    case 2: {
      TwoCell c = detail::flatten2(p, t);
      detail::chain_target(p, c);  // full typing pass before sorting
      detail::sort_chain(p, c);
      return NormalCell::make2(std::move(c));
    }
    default: {
      // Type-check dimension-3 terms (via their 2-dimensional boundaries)
      // but keep them raw.
      struct Check {
        const LazyPolygraph& p;
        // Returns the (src, tgt) pair of 2-dimensional normal boundaries.
        std::pair<NormalCell, NormalCell> operator()(const TermPtr& t) const {
          switch (t->kind) {
            case Term::Kind::Gen: {
              const AttachedGen at = p.attach_of(3, t->gen);
              return {at.src, at.tgt};
            }
            case Term::Kind::Id: {
              NormalCell c = normalize(p, t->sub);
              return {c, c};
            }
            case Term::Kind::Comp: {
              auto a = (*this)(t->lhs);
              auto b = (*this)(t->rhs);
              if (t->along == 2) {
                if (!(a.second == b.first))
                  throw PolycatError("type.boundary",
                                     "3-dimensional composition mismatch");
                return {a.first, b.second};
              }
              // Lower compositions: boundaries compose one dimension down.
              auto comp2 = [&](const NormalCell& x, const NormalCell& y) {
                return normalize(
                    p, Term::make_comp(t->along, canonical_term(x),
                                       canonical_term(y)));
              };
              return {comp2(a.first, b.first), comp2(a.second, b.second)};
            }
          }
          throw PolycatError("term.corrupt", "unknown term kind");
        }
      };
      Check{p}(t);
      return NormalCell::make_raw(n, t);
    }
  }
}

struct CellType {
  int dim;
  // Boundaries one dimension down; absent (dim -1) for objects.
  NormalCell src;
  NormalCell tgt;
};

inline NormalCell boundary_src(const LazyPolygraph& p, const NormalCell& c);
inline NormalCell boundary_tgt(const LazyPolygraph& p, const NormalCell& c);

inline CellType infer_type(const LazyPolygraph& p, const TermPtr& t) {
  const NormalCell c = normalize(p, t);
  CellType ty;
  ty.dim = c.dim;
  if (c.dim >= 1) {
    ty.src = boundary_src(p, c);
    ty.tgt = boundary_tgt(p, c);
  }
  return ty;
}

inline NormalCell boundary_src(const LazyPolygraph& p, const NormalCell& c) {
  switch (c.dim) {
    case 1:
      return NormalCell::make0(c.path.anchor);
    case 2:
      return NormalCell::make1(c.two.source);
    case 3: {
      // Recompute via the typing pass on the raw term.
      const TermPtr t = c.raw;
      switch (t->kind) {
        case Term::Kind::Gen:
          return p.attach_of(3, t->gen).src;
        case Term::Kind::Id:
          return normalize(p, t->sub);
        case Term::Kind::Comp: {
          const NormalCell l = NormalCell::make_raw(3, t->lhs);
          if (t->along == 2) return boundary_src(p, l);
          const NormalCell r = NormalCell::make_raw(3, t->rhs);
          return normalize(
              p, Term::make_comp(t->along,
                                 canonical_term(boundary_src(p, l)),
                                 canonical_term(boundary_src(p, r))));
        }
      }
      throw PolycatError("term.corrupt", "unknown term kind");
    }
    default:
      throw PolycatError("type.dim_cap",
                         "no source boundary at dimension " +
                             std::to_string(c.dim));
  }
}

inline NormalCell boundary_tgt(const LazyPolygraph& p, const NormalCell& c) {
  switch (c.dim) {
    case 1: {
      const auto objs = detail::path_objects(p, c.path);
      return NormalCell::make0(objs.back());
    }
    case 2:
      return NormalCell::make1(detail::chain_target(p, c.two));
    case 3: {
      const TermPtr t = c.raw;
      switch (t->kind) {
        case Term::Kind::Gen:
          return p.attach_of(3, t->gen).tgt;
        case Term::Kind::Id:
          return normalize(p, t->sub);
        case Term::Kind::Comp: {
          const NormalCell r = NormalCell::make_raw(3, t->rhs);
          if (t->along == 2) return boundary_tgt(p, r);
          const NormalCell l = NormalCell::make_raw(3, t->lhs);
          return normalize(
              p, Term::make_comp(t->along,
                                 canonical_term(boundary_tgt(p, l)),
                                 canonical_term(boundary_tgt(p, r))));
        }
      }
      throw PolycatError("term.corrupt", "unknown term kind");
    }
    default:
      throw PolycatError("type.dim_cap",
                         "no target boundary at dimension " +
                             std::to_string(c.dim));
  }
}

// Iterated boundary of a normal cell down to dimension k.
inline NormalCell boundary_src_k(const LazyPolygraph& p, NormalCell c, int k) {
  while (c.dim > k) c = boundary_src(p, c);
  return c;
}
inline NormalCell boundary_tgt_k(const LazyPolygraph& p, NormalCell c, int k) {
  while (c.dim > k) c = boundary_tgt(p, c);
  return c;
}

// Decides equality of the cells denoted by two terms. Refuses dimension 3
// and above, where normal forms are not canonical.
inline bool eq_cells(const LazyPolygraph& p, const TermPtr& a,
                     const TermPtr& b) {
  const NormalCell ca = normalize(p, a);
  const NormalCell cb = normalize(p, b);
  if (ca.dim != cb.dim) return false;
  if (!ca.canonical() || !cb.canonical())
    throw PolycatError("eq.undecided",
                       "cell equality is only decided up to dimension 2");
  return ca == cb;
}

// All n-cells of canonical size <= budget, ordered by (size, canonical key).
// Over an infinite polygraph the same budget also bounds the generators
// consulted, so the enumeration is complete relative to that generator pool.
inline std::vector<NormalCell> enumerate_cells(const LazyPolygraph& p, int n,
                                               int budget) {
  if (n < 0 || n > 2)
    throw PolycatError("enumerate.dim_cap",
                       "cell enumeration is supported up to dimension 2");
  std::vector<NormalCell> out;
  if (budget <= 0) return out;

  if (n == 0) {
    for (const auto& g : p.enumerate_gens(0, budget))
      out.push_back(NormalCell::make0(g));
  } else if (n == 1) {
    const auto objects = p.enumerate_gens(0, budget);
    const auto gens1 = p.enumerate_gens(1, budget);
    for (const auto& a : objects) {
      // Depth-first over paths out of `a`, bounded by word length.
      struct Walk {
        const LazyPolygraph& p;
        const std::vector<std::string>& gens1;
        int budget;
        std::vector<NormalCell>& out;
        void go(const Path& cur, const std::string& at) {
          out.push_back(NormalCell::make1(cur));
          if (static_cast<int>(cur.gens.size()) >= budget) return;
          for (const auto& g : gens1) {
            const AttachedGen attach = p.attach_of(1, g);
            if (attach.src.object != at) continue;
            Path next = cur;
            next.gens.push_back(g);
            go(next, attach.tgt.object);
          }
        }
      };
      Path start;
      start.anchor = a;
      Walk{p, gens1, budget, out}.go(start, a);
    }
  } else {
    const auto gens2 = p.enumerate_gens(2, budget);
    size_t max_src = 0;
    for (const auto& g : gens2)
      max_src = std::max(max_src, p.attach_of(2, g).src.path.gens.size());

    // Source paths can be longer than the budget: a bare layer costs 1 no
    // matter how wide its support is. Identity 2-cells need paths up to the
    // budget itself.
    const int path_cap =
        std::max(budget, budget - 1 + static_cast<int>(max_src));
    std::vector<Path> sources;
    for (const auto& a : p.enumerate_gens(0, budget)) {
      struct Walk {
        const LazyPolygraph& p;
        const std::vector<std::string>& gens1;
        int cap;
        std::vector<Path>& out;
        void go(const Path& cur, const std::string& at) {
          out.push_back(cur);
          if (static_cast<int>(cur.gens.size()) >= cap) return;
          for (const auto& g : gens1) {
            const AttachedGen attach = p.attach_of(1, g);
            if (attach.src.object != at) continue;
            Path next = cur;
            next.gens.push_back(g);
            go(next, attach.tgt.object);
          }
        }
      };
      Path start;
      start.anchor = a;
      const auto gens1 = p.enumerate_gens(1, budget);
      Walk{p, gens1, path_cap, sources}.go(start, a);
    }

    std::map<std::string, NormalCell> seen;
    for (const Path& src : sources) {
      // Identity 2-cells.
      if (static_cast<int>(std::max<size_t>(src.gens.size(), 1)) <= budget) {
        NormalCell idc = NormalCell::make2(TwoCell{src, {}});
        seen.emplace(cell_key(idc), idc);
      }
      struct Grow {
        const LazyPolygraph& p;
        const std::vector<std::string>& gens2;
        int budget;
        const Path& src;
        std::map<std::string, NormalCell>& seen;
        void go(const Path& cur, std::vector<Whisker>& chain, int used) {
          if (!chain.empty()) {
            TwoCell cell{src, chain};
            detail::sort_chain(p, cell);
            NormalCell nc = NormalCell::make2(std::move(cell));
            seen.emplace(cell_key(nc), nc);
          }
          const auto objs = detail::path_objects(p, cur);
          for (const auto& g : gens2) {
            const AttachedGen attach = p.attach_of(2, g);
            const auto& word = attach.src.path.gens;
            if (word.size() > cur.gens.size()) continue;
            const int cost =
                static_cast<int>(cur.gens.size() - word.size()) + 1;
            if (used + cost > budget) continue;
            for (size_t pos = 0; pos + word.size() <= cur.gens.size();
                 ++pos) {
              if (!std::equal(word.begin(), word.end(),
                              cur.gens.begin() + pos))
                continue;
              if (objs[pos] != attach.src.path.anchor) continue;
              Whisker w;
              w.left.assign(cur.gens.begin(), cur.gens.begin() + pos);
              w.gen = g;
              w.right.assign(cur.gens.begin() + pos + word.size(),
                             cur.gens.end());
              Path next;
              next.anchor = cur.anchor;
              next.gens = w.left;
              next.gens.insert(next.gens.end(),
                               attach.tgt.path.gens.begin(),
                               attach.tgt.path.gens.end());
              next.gens.insert(next.gens.end(), w.right.begin(),
                               w.right.end());
              chain.push_back(std::move(w));
              go(next, chain, used + cost);
              chain.pop_back();
            }
          }
        }
      };
      std::vector<Whisker> chain;
      Grow{p, gens2, budget, src, seen}.go(src, chain, 0);
    }
    for (auto& [key, cell] : seen) {
      (void)key;
      out.push_back(std::move(cell));
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const NormalCell& a, const NormalCell& b) {
                     const int sa = cell_size(a), sb = cell_size(b);
                     if (sa != sb) return sa < sb;
                     return cell_key(a) < cell_key(b);
                   });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const NormalCell& a, const NormalCell& b) {
                          return cell_key(a) == cell_key(b);
                        }),
            out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation into a strict category.

// Assigns a target cell to every generator, dimension by dimension.
struct GenAssignment {
  std::shared_ptr<const StrictCategory> target;
  std::function<std::string(int, const std::string&)> assign;
};

// Evaluates a term under an assignment; composition failures in the target
// surface as errors, signalling an incompatible assignment.
inline std::string evaluate_term(const LazyPolygraph& p,
                                 const GenAssignment& a, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen:
      return a.assign(gen_dim(p, t->gen), t->gen);
    case Term::Kind::Id: {
      const int d = term_dim(p, t->sub);
      return a.target->identity(d, evaluate_term(p, a, t->sub));
    }
    case Term::Kind::Comp: {
      const int d = term_dim(p, t->lhs);
      auto z = a.target->comp(t->along, d, evaluate_term(p, a, t->lhs),
                              evaluate_term(p, a, t->rhs));
      if (!z)
        throw PolycatError("eval.not_composable",
                           "assignment sends a composable pair to a "
                           "non-composable pair at level " +
                               std::to_string(t->along));
      return *z;
    }
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

inline std::string evaluate_cell(const LazyPolygraph& p,
                                 const GenAssignment& a, const NormalCell& c) {
  return evaluate_term(p, a, canonical_term(c));
}

// Boundary compatibility of an assignment on every generator within budget.
inline ValidationReport check_assignment(const LazyPolygraph& p,
                                         const GenAssignment& a, int budget) {
  ValidationReport rep;
  for (int n = 0; n <= p.max_dim(); ++n) {
    for (const auto& g : p.enumerate_gens(n, budget)) {
      std::string image;
      try {
        image = a.assign(n, g);
      } catch (const PolycatError& e) {
        rep.add("assign.error", "assignment fails on " + g + ": " + e.what());
        continue;
      }
      if (!a.target->has_cell(n, image)) {
        rep.add("assign.image",
                "generator " + g + " is sent to a non-cell: " + image);
        continue;
      }
      if (n >= 1) {
        const AttachedGen at = p.attach_of(n, g);
        try {
          if (evaluate_cell(p, a, at.src) != a.target->src(n, image))
            rep.add("assign.src", "source boundary not respected at " + g);
          if (evaluate_cell(p, a, at.tgt) != a.target->tgt(n, image))
            rep.add("assign.tgt", "target boundary not respected at " + g);
        } catch (const PolycatError& e) {
          rep.add("assign.error",
                  "boundary evaluation fails at " + g + ": " + e.what());
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The free category as a lazily enumerated strict category.

class FreeCategory final : public StrictCategory {
 public:
  explicit FreeCategory(std::shared_ptr<const LazyPolygraph> p)
      : pol_(std::move(p)) {}

  const LazyPolygraph& polygraph() const { return *pol_; }
  std::shared_ptr<const LazyPolygraph> polygraph_ptr() const { return pol_; }

  // Cells above dimension 2 have no canonical form, so the category view is
  // truncated there even when the polygraph carries higher generators.
  int max_dim() const override { return std::min(pol_->max_dim(), 2); }
  bool is_finite() const override { return false; }

  std::vector<std::string> cells(int n, int budget) const override {
    if (n < 0 || n > max_dim()) return {};
    std::vector<std::string> keys;
    for (const auto& c : enumerate_cells(*pol_, n, budget))
      keys.push_back(cell_key(c));
    return keys;
  }

  bool has_cell(int n, const std::string& key) const override {
    if (n < 0 || n > max_dim()) return false;
    try {
      const NormalCell c = parse_cell(key);
      return c.dim == n && cell_key(c) == key;
    } catch (const PolycatError&) {
      return false;
    }
  }

  std::string src(int n, const std::string& key) const override {
    return cell_key(boundary_src(*pol_, checked(n, key)));
  }
  std::string tgt(int n, const std::string& key) const override {
    return cell_key(boundary_tgt(*pol_, checked(n, key)));
  }

  std::string identity(int n, const std::string& key) const override {
    if (n >= max_dim())
      throw PolycatError("malformed.identity",
                         "no identities above dimension " +
                             std::to_string(max_dim()));
    const NormalCell c = checked(n, key);
    return cell_key(normalize(*pol_, Term::make_id(canonical_term(c))));
  }

  std::optional<std::string> comp(int k, int n, const std::string& x,
                                  const std::string& y) const override {
    if (!(0 <= k && k < n && n <= max_dim()))
      throw PolycatError("malformed.comp", "bad composition dimensions n=" +
                                               std::to_string(n) + " k=" +
                                               std::to_string(k));
    const NormalCell cx = checked(n, x);
    const NormalCell cy = checked(n, y);
    if (!(boundary_tgt_k(*pol_, cx, k) == boundary_src_k(*pol_, cy, k)))
      return std::nullopt;
    return cell_key(normalize(
        *pol_,
        Term::make_comp(k, canonical_term(cx), canonical_term(cy))));
  }

  NormalCell parse_cell(const std::string& key) const {
    Json j;
    try {
      j = Json::parse(key);
    } catch (const Json::exception& e) {
      throw PolycatError("parse.json", e.what());
    }
    return normalize(*pol_, term_from_json(j));
  }

 private:
  NormalCell checked(int n, const std::string& key) const {
    const NormalCell c = parse_cell(key);
    if (c.dim != n || cell_key(c) != key)
      throw PolycatError("malformed.cell",
                         "not a canonical " + std::to_string(n) + "-cell: " +
                             key);
    return c;
  }

  std::shared_ptr<const LazyPolygraph> pol_;
};

inline std::shared_ptr<FreeCategory> free_cat(
    std::shared_ptr<const LazyPolygraph> p) {
  return std::make_shared<FreeCategory>(std::move(p));
}

// The functor out of a free category determined by a generator assignment.
// Precondition: check_assignment reported no violations.
inline OmegaFunctor extend_functor(std::shared_ptr<const FreeCategory> dom,
                                   GenAssignment a) {
  auto pol = dom->polygraph_ptr();
  auto memo =
      std::make_shared<std::map<std::pair<int, std::string>, std::string>>();
  auto domc = dom;
  return {dom, a.target,
          [pol, a, memo, domc](int n, const std::string& key) {
            auto it = memo->find({n, key});
            if (it != memo->end()) return it->second;
            const NormalCell c = domc->parse_cell(key);
            std::string v = evaluate_cell(*pol, a, c);
            memo->emplace(std::pair<int, std::string>{n, key}, v);
            return v;
          }};
}

// Renames a normal cell along a generator map and renormalizes over the
// codomain polygraph.
inline NormalCell apply_free_morphism(const PolyMorphism& u,
                                      const NormalCell& c) {
  struct Rename {
    const PolyMorphism& u;
    TermPtr operator()(const TermPtr& t) const {
      switch (t->kind) {
        case Term::Kind::Gen:
          return Term::make_gen(u.apply(gen_dim(*u.dom, t->gen), t->gen));
        case Term::Kind::Id:
          return Term::make_id((*this)(t->sub));
        case Term::Kind::Comp:
          return Term::make_comp(t->along, (*this)(t->lhs), (*this)(t->rhs));
      }
      throw PolycatError("term.corrupt", "unknown term kind");
    }
  };
  return normalize(*u.cod, Rename{u}(canonical_term(c)));
}

// The functor between free categories induced by a generator morphism. The
// endpoint handles must present the morphism's own polygraphs.
inline OmegaFunctor free_functor(const PolyMorphism& u,
                                 std::shared_ptr<const FreeCategory> dom,
                                 std::shared_ptr<const FreeCategory> cod) {
  auto memo =
      std::make_shared<std::map<std::pair<int, std::string>, std::string>>();
  return {dom, std::move(cod),
          [u, dom, memo](int n, const std::string& key) {
            auto it = memo->find({n, key});
            if (it != memo->end()) return it->second;
            std::string v =
                cell_key(apply_free_morphism(u, dom->parse_cell(key)));
            memo->emplace(std::pair<int, std::string>{n, key}, v);
            return v;
          }};
}

inline OmegaFunctor free_functor(const PolyMorphism& u) {
  return free_functor(u, free_cat(u.dom), free_cat(u.cod));
}

// Structural well-formedness of a polygraph: unique names, attachments that
// are canonical cells of the right dimension over the lower truncation, and
// parallel boundaries from dimension 2 up.
inline ValidationReport validate_polygraph(const LazyPolygraph& p,
                                           int budget) {
  ValidationReport rep;
  std::map<std::string, int> where;
  for (int n = 0; n <= p.max_dim(); ++n) {
    for (const auto& g : p.enumerate_gens(n, budget)) {
      auto [it, fresh] = where.emplace(g, n);
      if (!fresh)
        rep.add("malformed.duplicate_gen",
                "generator " + g + " declared at dimensions " +
                    std::to_string(it->second) + " and " + std::to_string(n));
      if (n == 0) continue;
      AttachedGen at;
      try {
        at = p.attach_of(n, g);
      } catch (const PolycatError& e) {
        rep.add("malformed.attach", e.what());
        continue;
      }
      if (at.src.dim != n - 1 || at.tgt.dim != n - 1) {
        rep.add("malformed.attach",
                "attachment of " + g + " has wrong dimension");
        continue;
      }
      try {
        for (const NormalCell* b : {&at.src, &at.tgt}) {
          const NormalCell renorm = normalize(p, canonical_term(*b));
          if (!(renorm == *b))
            rep.add("malformed.attach",
                    "attachment boundary of " + g + " is not canonical");
        }
        if (n >= 2) {
          if (!(boundary_src(p, at.src) == boundary_src(p, at.tgt)) ||
              !(boundary_tgt(p, at.src) == boundary_tgt(p, at.tgt)))
            rep.add("malformed.parallel",
                    "attachment boundaries of " + g + " are not parallel");
        }
      } catch (const PolycatError& e) {
        rep.add("malformed.attach",
                "attachment of " + g + " does not type-check: " +
                    std::string(e.what()));
      }
    }
  }
  return rep;
}

}  // namespace polycat
