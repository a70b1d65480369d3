#pragma once

// Canonical representatives for cells of a free category:
//   dim 0  a generator name
//   dim 1  a path of 1-generators anchored at its source object
//   dim 2  a source path plus a chain of whiskered 2-generators, kept in the
//          left-greedy order produced by interchange normalization
//   dim 3+ a raw term, explicitly non-canonical
// Each normal cell serializes to a canonical term whose compact dump is the
// cell's identity everywhere in the library.

#include <string>
#include <utility>
#include <vector>

#include "polycat/term.hpp"

namespace polycat {

// A 1-cell: composable 1-generators laid end to end. The anchor is the
// source object, which disambiguates empty paths (identity 1-cells).
struct Path {
  std::string anchor;
  std::vector<std::string> gens;

  friend bool operator==(const Path& a, const Path& b) {
    return a.anchor == b.anchor && a.gens == b.gens;
  }
};

// One layer of a 2-cell: a 2-generator whiskered by 1-paths on both sides.
struct Whisker {
  std::vector<std::string> left;
  std::string gen;
  std::vector<std::string> right;

  friend bool operator==(const Whisker& a, const Whisker& b) {
    return a.left == b.left && a.gen == b.gen && a.right == b.right;
  }
};

// A 2-cell: the source path plus the vertical chain of whiskered layers,
// listed in application order (first layer acts on `source`).
struct TwoCell {
  Path source;
  std::vector<Whisker> chain;

  friend bool operator==(const TwoCell& a, const TwoCell& b) {
    return a.source == b.source && a.chain == b.chain;
  }
};

struct NormalCell {
  int dim = -1;
  std::string object;  // dim 0
  Path path;           // dim 1
  TwoCell two;         // dim 2
  TermPtr raw;         // dim >= 3, not canonical

  static NormalCell make0(std::string obj) {
    NormalCell c;
    c.dim = 0;
    c.object = std::move(obj);
    return c;
  }
  static NormalCell make1(Path p) {
    NormalCell c;
    c.dim = 1;
    c.path = std::move(p);
    return c;
  }
  static NormalCell make2(TwoCell t) {
    NormalCell c;
    c.dim = 2;
    c.two = std::move(t);
    return c;
  }
  static NormalCell make_raw(int dim, TermPtr t) {
    NormalCell c;
    c.dim = dim;
    c.raw = std::move(t);
    return c;
  }

  bool canonical() const { return dim <= 2; }

  friend bool operator==(const NormalCell& a, const NormalCell& b) {
    if (a.dim != b.dim) return false;
    switch (a.dim) {
      case 0:
        return a.object == b.object;
      case 1:
        return a.path == b.path;
      case 2:
        return a.two == b.two;
      default:
        return term_equal(a.raw, b.raw);
    }
  }
};

namespace detail {

// Left-associated 0-composite of a nonempty generator path.
inline TermPtr path_word_term(const std::vector<std::string>& gens) {
  TermPtr t = Term::make_gen(gens.front());
  for (size_t i = 1; i < gens.size(); ++i)
    t = Term::make_comp(0, t, Term::make_gen(gens[i]));
  return t;
}

inline TermPtr path_term(const Path& p) {
  if (p.gens.empty()) return Term::make_id(Term::make_gen(p.anchor));
  return path_word_term(p.gens);
}

// A whiskered layer as a term; empty whiskering paths are elided so the
// canonical term never mentions identity factors it does not need.
inline TermPtr whisker_term(const Whisker& w) {
  TermPtr t = Term::make_gen(w.gen);
  if (!w.left.empty())
    t = Term::make_comp(0, Term::make_id(path_word_term(w.left)), t);
  if (!w.right.empty())
    t = Term::make_comp(0, t, Term::make_id(path_word_term(w.right)));
  return t;
}

}  // namespace detail

// The canonical term denoted by a normal cell. Canonical terms are
// left-associated at every composition level; identity cells are a single
// id wrapper around the canonical term one dimension down.
inline TermPtr canonical_term(const NormalCell& c) {
  switch (c.dim) {
    case 0:
      return Term::make_gen(c.object);
    case 1:
      return detail::path_term(c.path);
    case 2: {
      if (c.two.chain.empty())
        return Term::make_id(detail::path_term(c.two.source));
      TermPtr t = detail::whisker_term(c.two.chain.front());
      for (size_t i = 1; i < c.two.chain.size(); ++i)
        t = Term::make_comp(1, t, detail::whisker_term(c.two.chain[i]));
      return t;
    }
    default:
      return c.raw;
  }
}

inline std::string cell_key(const NormalCell& c) {
  return term_key(canonical_term(c));
}

inline int cell_size(const NormalCell& c) {
  return term_size(canonical_term(c));
}

}  // namespace polycat
