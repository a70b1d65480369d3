#pragma once

// Helpers shared across the test suite.

#include <memory>
#include <string>
#include <vector>

#include "polycat/fixtures.hpp"
#include "polycat/free_category.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/strict_category.hpp"
#include "polycat/term.hpp"

namespace polycat::testing {

inline std::shared_ptr<const TableCategory> shared(TableCategory c) {
  return std::make_shared<TableCategory>(std::move(c));
}

inline TermPtr gen(const std::string& g) { return Term::make_gen(g); }
inline TermPtr idt(TermPtr t) { return Term::make_id(std::move(t)); }
inline TermPtr comp(int k, TermPtr a, TermPtr b) {
  return Term::make_comp(k, std::move(a), std::move(b));
}

inline TermPtr parse_term(const std::string& s) {
  return term_from_json(Json::parse(s));
}

}  // namespace polycat::testing
