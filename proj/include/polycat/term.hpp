#pragma once

// Composition terms over a polygraph's generators, with a JSON wire format:
//   ["gen", name]       a generator
//   ["id", T]           the identity on the cell denoted by T
//   ["comp", k, A, B]   composition of A and B along their shared k-boundary
// Terms are immutable and shared; sizes count generator occurrences.

#include <memory>
#include <string>
#include <utility>

#include "json.hpp"

#include "polycat/report.hpp"

namespace polycat {

using Json = nlohmann::json;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Gen, Id, Comp };

  Kind kind;
  std::string gen;   // Kind::Gen
  TermPtr sub;       // Kind::Id
  int along = -1;    // Kind::Comp
  TermPtr lhs, rhs;  // Kind::Comp

  static TermPtr make_gen(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Gen;
    t->gen = std::move(name);
    return t;
  }

  static TermPtr make_id(TermPtr inner) {
    if (!inner) throw PolycatError("term.null", "id of a null term");
    auto t = std::make_shared<Term>();
    t->kind = Kind::Id;
    t->sub = std::move(inner);
    return t;
  }

  static TermPtr make_comp(int k, TermPtr a, TermPtr b) {
    if (!a || !b) throw PolycatError("term.null", "composition of null terms");
    if (k < 0)
      throw PolycatError("term.bad_level",
                         "negative composition level " + std::to_string(k));
    auto t = std::make_shared<Term>();
    t->kind = Kind::Comp;
    t->along = k;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
  }
};

inline Json term_to_json(const TermPtr& t) {
  if (!t) throw PolycatError("term.null", "serializing a null term");
  switch (t->kind) {
    case Term::Kind::Gen:
      return Json::array({"gen", t->gen});
    case Term::Kind::Id:
      return Json::array({"id", term_to_json(t->sub)});
    case Term::Kind::Comp:
      return Json::array(
          {"comp", t->along, term_to_json(t->lhs), term_to_json(t->rhs)});
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

inline TermPtr term_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw PolycatError("parse.term", "term must be a tagged array");
  const std::string tag = j[0].get<std::string>();
  if (tag == "gen") {
    if (j.size() != 2 || !j[1].is_string())
      throw PolycatError("parse.term", "gen takes one string argument");
    return Term::make_gen(j[1].get<std::string>());
  }
  if (tag == "id") {
    if (j.size() != 2)
      throw PolycatError("parse.term", "id takes one term argument");
    return Term::make_id(term_from_json(j[1]));
  }
  if (tag == "comp") {
    if (j.size() != 4 || !j[1].is_number_integer())
      throw PolycatError("parse.term",
                         "comp takes a level and two term arguments");
    const int k = j[1].get<int>();
    if (k < 0) throw PolycatError("parse.term", "negative composition level");
    return Term::make_comp(k, term_from_json(j[2]), term_from_json(j[3]));
  }
  throw PolycatError("parse.term", "unknown term tag: " + tag);
}

// Compact, key-sorted dump; used as the canonical cell key for normal terms.
inline std::string term_key(const TermPtr& t) { return term_to_json(t).dump(); }

// Number of generator occurrences (identities are free).
inline int term_size(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Gen:
      return 1;
    case Term::Kind::Id:
      return term_size(t->sub);
    case Term::Kind::Comp:
      return term_size(t->lhs) + term_size(t->rhs);
  }
  throw PolycatError("term.corrupt", "unknown term kind");
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Gen:
      return a->gen == b->gen;
    case Term::Kind::Id:
      return term_equal(a->sub, b->sub);
    case Term::Kind::Comp:
      return a->along == b->along && term_equal(a->lhs, b->lhs) &&
             term_equal(a->rhs, b->rhs);
  }
  return false;
}

}  // namespace polycat
