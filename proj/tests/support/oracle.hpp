#pragma once

// An independent decision procedure for cell equality in free categories,
// used to cross-check the normal-form engine. Equality is decided by
// breadth-first closure of a term under the generating congruence:
// associativity, units, interchange and identity functoriality, each applied
// at every subterm position in both directions. No call into the library's
// normalization is made; typing is re-derived here from the polygraph's
// attachment data alone (word flattening for 1-dimensional boundaries).
//
// Verdicts are three-valued: Equal and NotEqual are conclusive (the full
// bounded closure was explored); Inconclusive means a cap was hit first and
// the caller must treat the comparison as failed, never as a pass.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polycat/normal_form.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/term.hpp"

namespace polycat::testing {

inline int term_nodes(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen:
      return 1;
    case Term::Kind::Id:
      return 1 + term_nodes(t->sub);
    case Term::Kind::Comp:
      return 1 + term_nodes(t->lhs) + term_nodes(t->rhs);
  }
  return 0;
}

class Oracle {
 public:
  Oracle(const LazyPolygraph& p, int size_cap, int node_size_cap,
         int expansion_cap)
      : p_(p),
        size_cap_(size_cap),
        node_size_cap_(node_size_cap),
        expansion_cap_(expansion_cap) {}

  enum class Verdict { Equal, NotEqual, Inconclusive };

  struct Closure {
    std::set<std::string> keys;
    bool complete = false;
  };

  std::optional<int> typable_dim(const TermPtr& t) const {
    switch (t->kind) {
      case Term::Kind::Gen: {
        for (int n = 0; n <= p_.max_dim(); ++n)
          if (p_.contains(n, t->gen)) return n;
        return std::nullopt;
      }
      case Term::Kind::Id: {
        auto d = typable_dim(t->sub);
        if (!d || *d + 1 > 2) return std::nullopt;
        return *d + 1;
      }
      case Term::Kind::Comp: {
        auto a = typable_dim(t->lhs);
        auto b = typable_dim(t->rhs);
        if (!a || !b || *a != *b || t->along >= *a) return std::nullopt;
        const int n = *a;
        if (n == 1) {
          auto pa = flat1(t->lhs), pb = flat1(t->rhs);
          if (!pa || !pb) return std::nullopt;
          return end_object(*pa) == pb->anchor ? std::optional<int>(1)
                                               : std::nullopt;
        }
        // n == 2
        if (t->along == 1) {
          auto ta = flat1(tgt1(t->lhs)), sb = flat1(src1(t->rhs));
          if (!ta || !sb) return std::nullopt;
          return (ta->anchor == sb->anchor && ta->word == sb->word)
                     ? std::optional<int>(2)
                     : std::nullopt;
        }
        auto sa = flat1(src1(t->lhs)), sb = flat1(src1(t->rhs));
        if (!sa || !sb) return std::nullopt;
        return end_object(*sa) == sb->anchor ? std::optional<int>(2)
                                             : std::nullopt;
      }
    }
    return std::nullopt;
  }

  Closure closure(const TermPtr& seed) const {
    Closure out;
    std::deque<TermPtr> queue;
    queue.push_back(seed);
    out.keys.insert(term_key(seed));
    int expansions = 0;
    while (!queue.empty()) {
      if (++expansions > expansion_cap_) return out;  // incomplete
      TermPtr t = queue.front();
      queue.pop_front();
      for (const TermPtr& u : all_rewrites(t)) {
        if (term_size(u) > size_cap_ || term_nodes(u) > node_size_cap_)
          continue;
        if (out.keys.insert(term_key(u)).second) queue.push_back(u);
      }
    }
    out.complete = true;
    return out;
  }

  Verdict decide(const Closure& ca, const TermPtr& a, const Closure& cb,
                 const TermPtr& b) const {
    if (ca.keys.count(term_key(b)) || cb.keys.count(term_key(a)))
      return Verdict::Equal;
    for (const auto& k : ca.keys)
      if (cb.keys.count(k)) return Verdict::Equal;
    if (ca.complete || cb.complete) return Verdict::NotEqual;
    return Verdict::Inconclusive;
  }

  Verdict equal(const TermPtr& a, const TermPtr& b) const {
    auto da = typable_dim(a), db = typable_dim(b);
    if (!da || !db)
      throw PolycatError("oracle.seed", "oracle given an untypable seed");
    if (*da != *db) return Verdict::NotEqual;
    const Closure ca = closure(a);
    if (ca.keys.count(term_key(b))) return Verdict::Equal;
    const Closure cb = closure(b);
    return decide(ca, a, cb, b);
  }

  std::vector<TermPtr> all_rewrites(const TermPtr& t) const {
    std::vector<TermPtr> out = root_rewrites(t);
    switch (t->kind) {
      case Term::Kind::Gen:
        break;
      case Term::Kind::Id:
        for (const TermPtr& u : all_rewrites(t->sub))
          out.push_back(Term::make_id(u));
        break;
      case Term::Kind::Comp:
        for (const TermPtr& u : all_rewrites(t->lhs))
          out.push_back(Term::make_comp(t->along, u, t->rhs));
        for (const TermPtr& u : all_rewrites(t->rhs))
          out.push_back(Term::make_comp(t->along, t->lhs, u));
        break;
    }
    return out;
  }

 private:
  struct Flat {
    std::string anchor;
    std::vector<std::string> word;
    friend bool operator==(const Flat& a, const Flat& b) {
      return a.anchor == b.anchor && a.word == b.word;
    }
  };

  // Flattening of a 1-dimensional term into (anchor object, generator word).
  std::optional<Flat> flat1(const TermPtr& t) const {
    switch (t->kind) {
      case Term::Kind::Gen: {
        if (!p_.contains(1, t->gen)) return std::nullopt;
        return Flat{p_.attach_of(1, t->gen).src.object, {t->gen}};
      }
      case Term::Kind::Id:
        if (t->sub->kind != Term::Kind::Gen ||
            !p_.contains(0, t->sub->gen))
          return std::nullopt;
        return Flat{t->sub->gen, {}};
      case Term::Kind::Comp: {
        if (t->along != 0) return std::nullopt;
        auto a = flat1(t->lhs), b = flat1(t->rhs);
        if (!a || !b) return std::nullopt;
        a->word.insert(a->word.end(), b->word.begin(), b->word.end());
        return a;
      }
    }
    return std::nullopt;
  }

  std::string end_object(const Flat& f) const {
    std::string at = f.anchor;
    for (const auto& g : f.word) at = p_.attach_of(1, g).tgt.object;
    return at;
  }

  // Syntactic boundary terms one dimension down (dimension 2 -> 1).
  TermPtr src1(const TermPtr& t) const { return bnd1(t, /*source=*/true); }
  TermPtr tgt1(const TermPtr& t) const { return bnd1(t, /*source=*/false); }

  TermPtr bnd1(const TermPtr& t, bool source) const {
    switch (t->kind) {
      case Term::Kind::Gen: {
        const AttachedGen at = p_.attach_of(2, t->gen);
        return canonical_term(source ? at.src : at.tgt);
      }
      case Term::Kind::Id:
        return t->sub;
      case Term::Kind::Comp:
        if (t->along == 1) return bnd1(source ? t->lhs : t->rhs, source);
        return Term::make_comp(t->along, bnd1(t->lhs, source),
                               bnd1(t->rhs, source));
    }
    throw PolycatError("term.corrupt", "unknown term kind");
  }

  // Syntactic boundary for any dimension (n -> n-1).
  TermPtr bnd(const TermPtr& t, int n, bool source) const {
    switch (t->kind) {
      case Term::Kind::Gen: {
        const AttachedGen at = p_.attach_of(n, t->gen);
        return canonical_term(source ? at.src : at.tgt);
      }
      case Term::Kind::Id:
        return t->sub;
      case Term::Kind::Comp:
        if (t->along == n - 1) return bnd(source ? t->lhs : t->rhs, n, source);
        return Term::make_comp(t->along, bnd(t->lhs, n, source),
                               bnd(t->rhs, n, source));
    }
    throw PolycatError("term.corrupt", "unknown term kind");
  }

  // Peels exactly `height` identity constructors, if present.
  static std::optional<TermPtr> peel_ids(TermPtr t, int height) {
    for (int i = 0; i < height; ++i) {
      if (t->kind != Term::Kind::Id) return std::nullopt;
      t = t->sub;
    }
    return t;
  }

  std::vector<TermPtr> root_rewrites(const TermPtr& t) const {
    std::vector<TermPtr> out;
    const auto dn = typable_dim(t);
    if (!dn)  // moves preserve typability; anything else is an oracle bug
      throw PolycatError("oracle.invariant",
                         "untypable term escaped into the closure: " +
                             term_key(t));
    const int n = *dn;

    auto push = [&](TermPtr u, bool must_typecheck) {
      if (must_typecheck && !typable_dim(u)) return;
      out.push_back(std::move(u));
    };

    if (t->kind == Term::Kind::Comp) {
      const int k = t->along;
      // Associativity, both directions.
      if (t->lhs->kind == Term::Kind::Comp && t->lhs->along == k)
        push(Term::make_comp(k, t->lhs->lhs,
                             Term::make_comp(k, t->lhs->rhs, t->rhs)),
             false);
      if (t->rhs->kind == Term::Kind::Comp && t->rhs->along == k)
        push(Term::make_comp(k, Term::make_comp(k, t->lhs, t->rhs->lhs),
                             t->rhs->rhs),
             false);
      // Interchange, both directions; the result is re-typechecked because
      // the middle boundary may fail to split.
      if (t->lhs->kind == Term::Kind::Comp &&
          t->rhs->kind == Term::Kind::Comp &&
          t->lhs->along == t->rhs->along && t->lhs->along != k) {
        const int j = t->lhs->along;
        push(Term::make_comp(j,
                             Term::make_comp(k, t->lhs->lhs, t->rhs->lhs),
                             Term::make_comp(k, t->lhs->rhs, t->rhs->rhs)),
             true);
      }
      // Unit elimination.
      if (auto base = peel_ids(t->lhs, n - k); base) push(t->rhs, false);
      if (auto base = peel_ids(t->rhs, n - k); base) push(t->lhs, false);
      // Identity functoriality: id(a) *k id(b) -> id(a *k b), for k below
      // the boundary dimension.
      if (t->lhs->kind == Term::Kind::Id && t->rhs->kind == Term::Kind::Id &&
          k < n - 1)
        push(Term::make_id(Term::make_comp(k, t->lhs->sub, t->rhs->sub)),
             false);
    }

    if (t->kind == Term::Kind::Id && t->sub->kind == Term::Kind::Comp &&
        t->sub->along < n - 1) {
      // Identity functoriality, expansion direction.
      push(Term::make_comp(t->sub->along, Term::make_id(t->sub->lhs),
                           Term::make_id(t->sub->rhs)),
           false);
    }

    // Unit introduction on every level.
    for (int k = 0; k < n; ++k) {
      TermPtr s = t;
      TermPtr tg = t;
      int d = n;
      for (; d > k; --d) {
        s = bnd(s, d, true);
        tg = bnd(tg, d, false);
      }
      TermPtr tower_s = s, tower_t = tg;
      for (int i = k; i < n; ++i) {
        tower_s = Term::make_id(tower_s);
        tower_t = Term::make_id(tower_t);
      }
      push(Term::make_comp(k, tower_s, t), false);
      push(Term::make_comp(k, t, tower_t), false);
    }

    return out;
  }

  const LazyPolygraph& p_;
  int size_cap_;
  int node_size_cap_;
  int expansion_cap_;
};

}  // namespace polycat::testing
