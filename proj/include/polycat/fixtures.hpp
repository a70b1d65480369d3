#pragma once

// Small hand-built categories, globular sets and polygraphs used by the test
// suite, the CLI corpus and the acceptance checks. Everything here is finite
// and fully explicit; each builder documents its cells inline.

#include <memory>
#include <string>

#include "polycat/globular_set.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/strict_category.hpp"

namespace polycat::fixtures {

// One object, nothing else.
inline TableCategory point() {
  TableCategory c(0);
  c.add_cell(0, "*");
  return c;
}

// The terminal category padded with identities to dimension 2:
// cells *, id(*), id(id(*)).
inline TableCategory terminal2() { return extend_with_identities(point(), 2); }

inline TableCategory terminal1() { return extend_with_identities(point(), 1); }

// Two objects and one arrow between them, plus identities.
inline TableCategory walking_arrow() {
  TableCategory c(1);
  c.add_cell(0, "x");
  c.add_cell(0, "y");
  c.add_cell(1, "idx");
  c.add_cell(1, "idy");
  c.add_cell(1, "f");
  c.set_boundaries(1, "idx", "x", "x");
  c.set_boundaries(1, "idy", "y", "y");
  c.set_boundaries(1, "f", "x", "y");
  c.set_identity(0, "x", "idx");
  c.set_identity(0, "y", "idy");
  c.set_comp(0, 1, "idx", "idx", "idx");
  c.set_comp(0, 1, "idy", "idy", "idy");
  c.set_comp(0, 1, "idx", "f", "f");
  c.set_comp(0, 1, "f", "idy", "f");
  return c;
}

// One object with an idempotent endomorphism: e . e = e.
inline TableCategory idempotent_monoid() {
  TableCategory c(1);
  c.add_cell(0, "*");
  c.add_cell(1, "1");
  c.add_cell(1, "e");
  c.set_boundaries(1, "1", "*", "*");
  c.set_boundaries(1, "e", "*", "*");
  c.set_identity(0, "*", "1");
  c.set_comp(0, 1, "1", "1", "1");
  c.set_comp(0, 1, "1", "e", "e");
  c.set_comp(0, 1, "e", "1", "e");
  c.set_comp(0, 1, "e", "e", "e");
  return c;
}

// The cyclic monoid on three elements under addition.
inline TableCategory zmod3() {
  TableCategory c(1);
  c.add_cell(0, "*");
  for (const char* g : {"e0", "e1", "e2"}) c.add_cell(1, g);
  for (const char* g : {"e0", "e1", "e2"}) c.set_boundaries(1, g, "*", "*");
  c.set_identity(0, "*", "e0");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c.set_comp(0, 1, "e" + std::to_string(i), "e" + std::to_string(j),
                 "e" + std::to_string((i + j) % 3));
  return c;
}

// Two parallel arrows with one 2-cell between them, plus identities.
inline TableCategory walking_two_cell() {
  TableCategory c(2);
  c.add_cell(0, "x");
  c.add_cell(0, "y");
  c.add_cell(1, "idx");
  c.add_cell(1, "idy");
  c.add_cell(1, "f");
  c.add_cell(1, "g");
  c.set_boundaries(1, "idx", "x", "x");
  c.set_boundaries(1, "idy", "y", "y");
  c.set_boundaries(1, "f", "x", "y");
  c.set_boundaries(1, "g", "x", "y");
  c.set_identity(0, "x", "idx");
  c.set_identity(0, "y", "idy");
  c.set_comp(0, 1, "idx", "idx", "idx");
  c.set_comp(0, 1, "idy", "idy", "idy");
  for (const char* a : {"f", "g"}) {
    c.set_comp(0, 1, "idx", a, a);
    c.set_comp(0, 1, a, "idy", a);
  }
  c.add_cell(2, "iidx");
  c.add_cell(2, "iidy");
  c.add_cell(2, "if");
  c.add_cell(2, "ig");
  c.add_cell(2, "th");
  c.set_boundaries(2, "iidx", "idx", "idx");
  c.set_boundaries(2, "iidy", "idy", "idy");
  c.set_boundaries(2, "if", "f", "f");
  c.set_boundaries(2, "ig", "g", "g");
  c.set_boundaries(2, "th", "f", "g");
  c.set_identity(1, "idx", "iidx");
  c.set_identity(1, "idy", "iidy");
  c.set_identity(1, "f", "if");
  c.set_identity(1, "g", "ig");
  // Vertical composition.
  c.set_comp(1, 2, "iidx", "iidx", "iidx");
  c.set_comp(1, 2, "iidy", "iidy", "iidy");
  c.set_comp(1, 2, "if", "if", "if");
  c.set_comp(1, 2, "ig", "ig", "ig");
  c.set_comp(1, 2, "if", "th", "th");
  c.set_comp(1, 2, "th", "ig", "th");
  // Horizontal composition (identity whiskers only).
  c.set_comp(0, 2, "iidx", "iidx", "iidx");
  c.set_comp(0, 2, "iidy", "iidy", "iidy");
  for (const char* a : {"if", "ig", "th"}) {
    c.set_comp(0, 2, "iidx", a, a);
    c.set_comp(0, 2, a, "iidy", a);
  }
  return c;
}

// Three objects, arrows u: a -> b, v: b -> c, their composite uv, and
// idempotent 2-cells al: u => u, be: v => v with whiskered images av, ub and
// the common composite g2 = al * be on uv. Exercises interchange with
// non-identity cells on both sides.
inline TableCategory interchange_pair() {
  TableCategory c(2);
  for (const char* o : {"a", "b", "cc"}) c.add_cell(0, o);
  for (const char* m : {"ida", "idb", "idc", "u", "v", "uv"}) c.add_cell(1, m);
  c.set_boundaries(1, "ida", "a", "a");
  c.set_boundaries(1, "idb", "b", "b");
  c.set_boundaries(1, "idc", "cc", "cc");
  c.set_boundaries(1, "u", "a", "b");
  c.set_boundaries(1, "v", "b", "cc");
  c.set_boundaries(1, "uv", "a", "cc");
  c.set_identity(0, "a", "ida");
  c.set_identity(0, "b", "idb");
  c.set_identity(0, "cc", "idc");
  c.set_comp(0, 1, "ida", "ida", "ida");
  c.set_comp(0, 1, "idb", "idb", "idb");
  c.set_comp(0, 1, "idc", "idc", "idc");
  c.set_comp(0, 1, "ida", "u", "u");
  c.set_comp(0, 1, "u", "idb", "u");
  c.set_comp(0, 1, "idb", "v", "v");
  c.set_comp(0, 1, "v", "idc", "v");
  c.set_comp(0, 1, "u", "v", "uv");
  c.set_comp(0, 1, "ida", "uv", "uv");
  c.set_comp(0, 1, "uv", "idc", "uv");

  for (const char* t : {"iida", "iidb", "iidc", "iu", "iv", "iuv"})
    c.add_cell(2, t);
  for (const char* t : {"al", "be", "av", "ub", "g2"}) c.add_cell(2, t);
  c.set_boundaries(2, "iida", "ida", "ida");
  c.set_boundaries(2, "iidb", "idb", "idb");
  c.set_boundaries(2, "iidc", "idc", "idc");
  c.set_boundaries(2, "iu", "u", "u");
  c.set_boundaries(2, "iv", "v", "v");
  c.set_boundaries(2, "iuv", "uv", "uv");
  c.set_boundaries(2, "al", "u", "u");
  c.set_boundaries(2, "be", "v", "v");
  c.set_boundaries(2, "av", "uv", "uv");
  c.set_boundaries(2, "ub", "uv", "uv");
  c.set_boundaries(2, "g2", "uv", "uv");
  c.set_identity(1, "ida", "iida");
  c.set_identity(1, "idb", "iidb");
  c.set_identity(1, "idc", "iidc");
  c.set_identity(1, "u", "iu");
  c.set_identity(1, "v", "iv");
  c.set_identity(1, "uv", "iuv");

  // Vertical composition: each hom-set is a commutative idempotent monoid
  // with g2 absorbing on uv.
  auto vert = [&](const std::string& x, const std::string& y,
                  const std::string& z) { c.set_comp(1, 2, x, y, z); };
  vert("iida", "iida", "iida");
  vert("iidb", "iidb", "iidb");
  vert("iidc", "iidc", "iidc");
  vert("iu", "iu", "iu");
  vert("iv", "iv", "iv");
  vert("iuv", "iuv", "iuv");
  vert("iu", "al", "al");
  vert("al", "iu", "al");
  vert("al", "al", "al");
  vert("iv", "be", "be");
  vert("be", "iv", "be");
  vert("be", "be", "be");
  for (const char* w : {"av", "ub", "g2"}) {
    vert("iuv", w, w);
    vert(w, "iuv", w);
  }
  vert("av", "av", "av");
  vert("ub", "ub", "ub");
  vert("av", "ub", "g2");
  vert("ub", "av", "g2");
  for (const char* w : {"av", "ub", "g2"}) {
    vert("g2", w, "g2");
    vert(w, "g2", "g2");
  }

  // Horizontal composition.
  auto horiz = [&](const std::string& x, const std::string& y,
                   const std::string& z) { c.set_comp(0, 2, x, y, z); };
  horiz("iida", "iida", "iida");
  horiz("iidb", "iidb", "iidb");
  horiz("iidc", "iidc", "iidc");
  for (const char* t : {"iu", "al"}) {
    horiz("iida", t, t);
    horiz(t, "iidb", t);
  }
  for (const char* t : {"iv", "be"}) {
    horiz("iidb", t, t);
    horiz(t, "iidc", t);
  }
  for (const char* t : {"iuv", "av", "ub", "g2"}) {
    horiz("iida", t, t);
    horiz(t, "iidc", t);
  }
  horiz("iu", "iv", "iuv");
  horiz("iu", "be", "ub");
  horiz("al", "iv", "av");
  horiz("al", "be", "g2");
  return c;
}

// Three objects with a strictly composable pair and its composite.
inline TableCategory composable_pair() {
  TableCategory c(1);
  for (const char* o : {"x", "y", "z"}) c.add_cell(0, o);
  for (const char* m : {"idx", "idy", "idz", "f", "g", "fg"}) c.add_cell(1, m);
  c.set_boundaries(1, "idx", "x", "x");
  c.set_boundaries(1, "idy", "y", "y");
  c.set_boundaries(1, "idz", "z", "z");
  c.set_boundaries(1, "f", "x", "y");
  c.set_boundaries(1, "g", "y", "z");
  c.set_boundaries(1, "fg", "x", "z");
  c.set_identity(0, "x", "idx");
  c.set_identity(0, "y", "idy");
  c.set_identity(0, "z", "idz");
  c.set_comp(0, 1, "idx", "idx", "idx");
  c.set_comp(0, 1, "idy", "idy", "idy");
  c.set_comp(0, 1, "idz", "idz", "idz");
  c.set_comp(0, 1, "idx", "f", "f");
  c.set_comp(0, 1, "f", "idy", "f");
  c.set_comp(0, 1, "idy", "g", "g");
  c.set_comp(0, 1, "g", "idz", "g");
  c.set_comp(0, 1, "f", "g", "fg");
  c.set_comp(0, 1, "idx", "fg", "fg");
  c.set_comp(0, 1, "fg", "idz", "fg");
  return c;
}

// Two objects, no arrows beyond the truncation.
inline TableCategory discrete_two() {
  TableCategory c(0);
  c.add_cell(0, "p");
  c.add_cell(0, "q");
  return c;
}

// ---------------------------------------------------------------------------
// Globular sets.

// Two objects and an arrow: the generating data of the walking arrow.
inline GlobularSet arrow_globset() {
  GlobularSet g(1);
  g.cells[0] = {"x", "y"};
  g.cells[1] = {"f"};
  g.src[1]["f"] = "x";
  g.tgt[1]["f"] = "y";
  return g;
}

// Two parallel arrows with a 2-cell between them.
inline GlobularSet two_cell_globset() {
  GlobularSet g(2);
  g.cells[0] = {"x", "y"};
  g.cells[1] = {"f", "g"};
  g.cells[2] = {"th"};
  g.src[1]["f"] = "x";
  g.tgt[1]["f"] = "y";
  g.src[1]["g"] = "x";
  g.tgt[1]["g"] = "y";
  g.src[2]["th"] = "f";
  g.tgt[2]["th"] = "g";
  return g;
}

// ---------------------------------------------------------------------------
// Polygraphs.

// One object, a loop f, and a 2-generator m contracting [f, f] to [f].
inline Polygraph loop_contraction() {
  Polygraph p(2);
  p.gens[0] = {"a"};
  p.gens[1] = {"f"};
  p.gens[2] = {"m"};
  p.attach[1]["f"] = {NormalCell::make0("a"), NormalCell::make0("a")};
  p.attach[2]["m"] = {
      NormalCell::make1(Path{"a", {"f", "f"}}),
      NormalCell::make1(Path{"a", {"f"}}),
  };
  return p;
}

// Two composable arrows carrying one endo-2-generator each; the canonical
// interchange example, where al and be act on disjoint segments.
inline Polygraph two_strand() {
  Polygraph p(2);
  p.gens[0] = {"a", "b", "cc"};
  p.gens[1] = {"u", "v"};
  p.gens[2] = {"al", "be"};
  p.attach[1]["u"] = {NormalCell::make0("a"), NormalCell::make0("b")};
  p.attach[1]["v"] = {NormalCell::make0("b"), NormalCell::make0("cc")};
  p.attach[2]["al"] = {NormalCell::make1(Path{"a", {"u"}}),
                       NormalCell::make1(Path{"a", {"u"}})};
  p.attach[2]["be"] = {NormalCell::make1(Path{"b", {"v"}}),
                       NormalCell::make1(Path{"b", {"v"}})};
  return p;
}

}  // namespace polycat::fixtures
