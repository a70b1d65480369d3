#pragma once

// The on-disk document format: a JSON envelope {kind, version, payload}
// around one of the eight payload layouts (globular set, category table,
// functor, globular map, polygraph, polygraph morphism, term, fork
// description). Parsing is strict: unknown fields anywhere in the tree are
// rejected, as are wrong types and missing fields, with error codes under
// "parse.". Serialization always emits the canonical form, so
// parse-serialize-parse equals parse.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polycat/free_category.hpp"
#include "polycat/globular_set.hpp"
#include "polycat/normal_form.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"
#include "polycat/term.hpp"

namespace polycat {

inline constexpr const char* kDocVersion = "1";

// ---------------------------------------------------------------------------
// Strict-parsing helpers.

inline void require_object(const Json& j, const std::string& where) {
  if (!j.is_object())
    throw PolycatError("parse.type", where + " must be a JSON object");
}

inline void reject_unknown_fields(const Json& j,
                                  const std::set<std::string>& allowed,
                                  const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw PolycatError("parse.field",
                         "unknown field \"" + key + "\" in " + where);
}

inline const Json& require_field(const Json& j, const std::string& key,
                                 const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw PolycatError("parse.missing",
                       where + " lacks the field \"" + key + "\"");
  return *it;
}

inline int parse_dim_field(const Json& j, const std::string& key,
                           const std::string& where) {
  const Json& v = require_field(j, key, where);
  if (!v.is_number_integer() || v.get<int>() < 0)
    throw PolycatError("parse.type", where + "." + key +
                                         " must be a non-negative integer");
  return v.get<int>();
}

inline std::string parse_string_field(const Json& j, const std::string& key,
                                      const std::string& where) {
  const Json& v = require_field(j, key, where);
  if (!v.is_string())
    throw PolycatError("parse.type", where + "." + key + " must be a string");
  return v.get<std::string>();
}

// A per-dimension list of cell/generator names: array of arrays of strings.
inline std::vector<std::vector<std::string>> parse_name_table(
    const Json& j, int dims, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dims + 1)
    throw PolycatError("parse.type", where + " must be an array with one " +
                                         "entry per dimension 0.." +
                                         std::to_string(dims));
  std::vector<std::vector<std::string>> out(dims + 1);
  for (int n = 0; n <= dims; ++n) {
    if (!j[n].is_array())
      throw PolycatError("parse.type", where + "[" + std::to_string(n) +
                                           "] must be an array of strings");
    for (const auto& name : j[n]) {
      if (!name.is_string())
        throw PolycatError("parse.type", where + "[" + std::to_string(n) +
                                             "] must contain only strings");
      out[n].push_back(name.get<std::string>());
    }
  }
  return out;
}

// A per-dimension string-to-string map: array of objects.
inline std::vector<std::map<std::string, std::string>> parse_map_table(
    const Json& j, int entries, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != entries)
    throw PolycatError("parse.type", where + " must be an array with " +
                                         std::to_string(entries) +
                                         " entries");
  std::vector<std::map<std::string, std::string>> out(entries);
  for (int n = 0; n < entries; ++n) {
    require_object(j[n], where + "[" + std::to_string(n) + "]");
    for (const auto& [key, value] : j[n].items()) {
      if (!value.is_string())
        throw PolycatError("parse.type", where + "[" + std::to_string(n) +
                                             "] must map strings to strings");
      out[n][key] = value.get<std::string>();
    }
  }
  return out;
}

inline Json dump_map_table(
    const std::vector<std::map<std::string, std::string>>& tabs) {
  Json out = Json::array();
  for (const auto& tab : tabs) {
    Json o = Json::object();
    for (const auto& [key, value] : tab) o[key] = value;
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Globular sets.

inline Json globset_to_json(const GlobularSet& x) {
  Json j = Json::object();
  j["max_dim"] = x.max_dim;
  j["cells"] = x.cells;
  std::vector<std::map<std::string, std::string>> src(x.src.begin() + 1,
                                                      x.src.end());
  std::vector<std::map<std::string, std::string>> tgt(x.tgt.begin() + 1,
                                                      x.tgt.end());
  j["src"] = dump_map_table(src);
  j["tgt"] = dump_map_table(tgt);
  return j;
}

inline GlobularSet globset_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"max_dim", "cells", "src", "tgt"}, where);
  GlobularSet x(parse_dim_field(j, "max_dim", where));
  x.cells = parse_name_table(require_field(j, "cells", where), x.max_dim,
                             where + ".cells");
  auto src = parse_map_table(require_field(j, "src", where), x.max_dim,
                             where + ".src");
  auto tgt = parse_map_table(require_field(j, "tgt", where), x.max_dim,
                             where + ".tgt");
  for (int n = 1; n <= x.max_dim; ++n) {
    x.src[n] = std::move(src[n - 1]);
    x.tgt[n] = std::move(tgt[n - 1]);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Category tables.

inline Json category_to_json(const TableCategory& c) {
  Json j = Json::object();
  j["max_dim"] = c.dims;
  j["cells"] = c.cell_names;
  std::vector<std::map<std::string, std::string>> src(c.src_tab.begin() + 1,
                                                      c.src_tab.end());
  std::vector<std::map<std::string, std::string>> tgt(c.tgt_tab.begin() + 1,
                                                      c.tgt_tab.end());
  std::vector<std::map<std::string, std::string>> ids(
      c.id_tab.begin(), c.id_tab.begin() + std::max(c.dims, 0));
  j["src"] = dump_map_table(src);
  j["tgt"] = dump_map_table(tgt);
  j["identity"] = dump_map_table(ids);
  Json comp = Json::array();
  for (const auto& [key, tab] : c.comp_tab) {
    Json entry = Json::object();
    entry["n"] = key.n;
    entry["k"] = key.k;
    Json table = Json::array();
    for (const auto& [pair, result] : tab)
      table.push_back(Json::array({pair.first, pair.second, result}));
    entry["table"] = std::move(table);
    comp.push_back(std::move(entry));
  }
  j["comp"] = std::move(comp);
  return j;
}

inline TableCategory category_from_json(const Json& j,
                                        const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(
      j, {"max_dim", "cells", "src", "tgt", "identity", "comp"}, where);
  TableCategory c(parse_dim_field(j, "max_dim", where));
  c.cell_names = parse_name_table(require_field(j, "cells", where), c.dims,
                                  where + ".cells");
  auto src = parse_map_table(require_field(j, "src", where), c.dims,
                             where + ".src");
  auto tgt = parse_map_table(require_field(j, "tgt", where), c.dims,
                             where + ".tgt");
  auto ids = parse_map_table(require_field(j, "identity", where), c.dims,
                             where + ".identity");
  for (int n = 1; n <= c.dims; ++n) {
    c.src_tab[n] = std::move(src[n - 1]);
    c.tgt_tab[n] = std::move(tgt[n - 1]);
  }
  for (int n = 0; n < c.dims; ++n) c.id_tab[n] = std::move(ids[n]);
  const Json& comp = require_field(j, "comp", where);
  if (!comp.is_array())
    throw PolycatError("parse.type", where + ".comp must be an array");
  for (const auto& entry : comp) {
    require_object(entry, where + ".comp entry");
    reject_unknown_fields(entry, {"n", "k", "table"}, where + ".comp entry");
    const int n = parse_dim_field(entry, "n", where + ".comp entry");
    const int k = parse_dim_field(entry, "k", where + ".comp entry");
    const Json& table = require_field(entry, "table", where + ".comp entry");
    if (!table.is_array())
      throw PolycatError("parse.type",
                         where + ".comp entry table must be an array");
    for (const auto& row : table) {
      if (!row.is_array() || row.size() != 3 || !row[0].is_string() ||
          !row[1].is_string() || !row[2].is_string())
        throw PolycatError("parse.type", where + ".comp rows must be " +
                                             "[lhs, rhs, result] strings");
      c.comp_tab[CompKey{n, k}][{row[0].get<std::string>(),
                                 row[1].get<std::string>()}] =
          row[2].get<std::string>();
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Polygraphs. Attachments are stored as term expressions; parsing
// re-normalizes them over the lower-dimensional part, so any typable term
// is accepted and the canonical form is what round-trips.

inline Json polygraph_to_json(const Polygraph& p) {
  Json j = Json::object();
  j["max_dim"] = p.max_dim;
  Json gens = Json::array();
  for (int n = 0; n <= p.max_dim; ++n) {
    Json level = Json::array();
    for (const auto& g : p.gens[n]) {
      Json item = Json::object();
      item["name"] = g;
      if (n >= 1) {
        const AttachedGen& at = p.attached(n, g);
        item["src"] = term_to_json(canonical_term(at.src));
        item["tgt"] = term_to_json(canonical_term(at.tgt));
      }
      level.push_back(std::move(item));
    }
    gens.push_back(std::move(level));
  }
  j["gens"] = std::move(gens);
  return j;
}

inline TermPtr term_expr_from_json(const Json& j, const std::string& where) {
  try {
    return term_from_json(j);
  } catch (const PolycatError& e) {
    throw PolycatError("parse.type",
                       where + " is not a term expression: " + e.what());
  }
}

inline Polygraph polygraph_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"max_dim", "gens", "provenance"}, where);
  if (auto it = j.find("provenance"); it != j.end()) {
    require_object(*it, where + ".provenance");
    reject_unknown_fields(*it, {"source", "budget", "dim"},
                          where + ".provenance");
  }
  Polygraph p(parse_dim_field(j, "max_dim", where));
  const Json& gens = require_field(j, "gens", where);
  if (!gens.is_array() || static_cast<int>(gens.size()) != p.max_dim + 1)
    throw PolycatError("parse.type", where + ".gens must be an array with " +
                                         "one entry per dimension");
  for (int n = 0; n <= p.max_dim; ++n) {
    if (!gens[n].is_array())
      throw PolycatError("parse.type", where + ".gens[" + std::to_string(n) +
                                           "] must be an array");
    for (const auto& item : gens[n]) {
      const std::string at = where + ".gens[" + std::to_string(n) + "] entry";
      require_object(item, at);
      const std::string name = parse_string_field(item, "name", at);
      if (n == 0) {
        reject_unknown_fields(item, {"name"}, at);
        p.gens[0].push_back(name);
        continue;
      }
      reject_unknown_fields(item, {"name", "src", "tgt"}, at);
      const TermPtr ts =
          term_expr_from_json(require_field(item, "src", at), at + ".src");
      const TermPtr tt =
          term_expr_from_json(require_field(item, "tgt", at), at + ".tgt");
      // Normalize over the part of the polygraph built so far; boundary
      // terms live one dimension down, so this is always sufficient.
      const FinitePolygraphView below(p);
      AttachedGen attached;
      try {
        attached.src = normalize(below, ts);
        attached.tgt = normalize(below, tt);
      } catch (const PolycatError& e) {
        throw PolycatError("parse.type", at + " has an untypable boundary: " +
                                             e.what());
      }
      p.gens[n].push_back(name);
      p.attach[n].emplace(name, std::move(attached));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Maps: functors between category tables, globular maps, polygraph
// morphisms. Domain and codomain are embedded so documents stand alone.

struct FunctorDoc {
  TableCategory dom;
  TableCategory cod;
  std::vector<std::map<std::string, std::string>> map;

  OmegaFunctor as_functor() const {
    auto d = std::make_shared<TableCategory>(dom);
    auto c = std::make_shared<TableCategory>(cod);
    auto tabs = map;
    return {d, c, [tabs](int n, const std::string& cell) {
              if (n < 0 || n >= static_cast<int>(tabs.size()))
                throw PolycatError("malformed.map",
                                   "no assignment table at dimension " +
                                       std::to_string(n));
              auto it = tabs[n].find(cell);
              if (it == tabs[n].end())
                throw PolycatError("malformed.map", "no image for " +
                                                        std::to_string(n) +
                                                        "-cell " + cell);
              return it->second;
            }};
  }
};

inline Json functor_to_json(const FunctorDoc& f) {
  Json j = Json::object();
  j["dom"] = category_to_json(f.dom);
  j["cod"] = category_to_json(f.cod);
  j["map"] = dump_map_table(f.map);
  return j;
}

inline FunctorDoc functor_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"dom", "cod", "map"}, where);
  FunctorDoc f;
  f.dom = category_from_json(require_field(j, "dom", where), where + ".dom");
  f.cod = category_from_json(require_field(j, "cod", where), where + ".cod");
  f.map = parse_map_table(require_field(j, "map", where), f.dom.dims + 1,
                          where + ".map");
  return f;
}

inline Json globmap_to_json(const GlobularMap& f) {
  Json j = Json::object();
  j["dom"] = globset_to_json(f.dom);
  j["cod"] = globset_to_json(f.cod);
  j["map"] = dump_map_table(f.map);
  return j;
}

inline GlobularMap globmap_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"dom", "cod", "map"}, where);
  GlobularMap f;
  f.dom = globset_from_json(require_field(j, "dom", where), where + ".dom");
  f.cod = globset_from_json(require_field(j, "cod", where), where + ".cod");
  f.map = parse_map_table(require_field(j, "map", where), f.dom.max_dim + 1,
                          where + ".map");
  return f;
}

struct PolyMorphismDoc {
  Polygraph dom;
  Polygraph cod;
  std::vector<std::map<std::string, std::string>> map;

  PolyMorphism as_morphism() const {
    auto d = wrap_polygraph(dom);
    auto c = wrap_polygraph(cod);
    auto tabs = map;
    return {d, c, [tabs](int n, const std::string& g) {
              if (n < 0 || n >= static_cast<int>(tabs.size()))
                throw PolycatError("malformed.map",
                                   "no assignment table at dimension " +
                                       std::to_string(n));
              auto it = tabs[n].find(g);
              if (it == tabs[n].end())
                throw PolycatError("malformed.map", "no image for " +
                                                        std::to_string(n) +
                                                        "-generator " + g);
              return it->second;
            }};
  }
};

inline Json polymorphism_to_json(const PolyMorphismDoc& u) {
  Json j = Json::object();
  j["dom"] = polygraph_to_json(u.dom);
  j["cod"] = polygraph_to_json(u.cod);
  j["map"] = dump_map_table(u.map);
  return j;
}

inline PolyMorphismDoc polymorphism_from_json(const Json& j,
                                              const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"dom", "cod", "map"}, where);
  PolyMorphismDoc u;
  u.dom = polygraph_from_json(require_field(j, "dom", where), where + ".dom");
  u.cod = polygraph_from_json(require_field(j, "cod", where), where + ".cod");
  u.map = parse_map_table(require_field(j, "map", where), u.dom.max_dim + 1,
                          where + ".map");
  return u;
}

// ---------------------------------------------------------------------------
// Terms and fork descriptions.

inline Json term_doc_to_json(const TermPtr& t) {
  Json j = Json::object();
  j["expr"] = term_to_json(t);
  return j;
}

inline TermPtr term_doc_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"expr"}, where);
  return term_expr_from_json(require_field(j, "expr", where), where + ".expr");
}

// A fork document names a finite base category and one of the two stock
// presentations over it; the fork members themselves involve lazy infinite
// polygraphs and are reconstructed rather than stored.
struct ForkDoc {
  std::string mode;  // "canonical" or "degenerate"
  TableCategory base;
};

inline Json fork_to_json(const ForkDoc& f) {
  Json j = Json::object();
  j["mode"] = f.mode;
  j["base"] = category_to_json(f.base);
  return j;
}

inline ForkDoc fork_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  reject_unknown_fields(j, {"mode", "base"}, where);
  ForkDoc f;
  f.mode = parse_string_field(j, "mode", where);
  if (f.mode != "canonical" && f.mode != "degenerate")
    throw PolycatError("parse.type",
                       where + ".mode must be \"canonical\" or "
                               "\"degenerate\", got \"" +
                           f.mode + "\"");
  f.base = category_from_json(require_field(j, "base", where), where + ".base");
  return f;
}

// ---------------------------------------------------------------------------
// Envelope.

struct Document {
  std::string kind;
  Json payload;
};

inline const std::set<std::string>& document_kinds() {
  static const std::set<std::string> kinds{
      "globset",   "category",     "functor", "globmap",
      "polygraph", "polymorphism", "term",    "fork"};
  return kinds;
}

inline Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw PolycatError("parse.json", e.what());
  }
  require_object(j, "document");
  reject_unknown_fields(j, {"kind", "version", "payload"}, "document");
  Document doc;
  doc.kind = parse_string_field(j, "kind", "document");
  if (!document_kinds().count(doc.kind))
    throw PolycatError("parse.kind", "unknown document kind \"" + doc.kind +
                                         "\"");
  const std::string version = parse_string_field(j, "version", "document");
  if (version != kDocVersion)
    throw PolycatError("parse.version", "unsupported format version \"" +
                                            version + "\"");
  doc.payload = require_field(j, "payload", "document");
  // Validate the payload structure eagerly so malformed documents are
  // rejected at parse time regardless of the consuming command.
  if (doc.kind == "globset") globset_from_json(doc.payload, "payload");
  if (doc.kind == "category") category_from_json(doc.payload, "payload");
  if (doc.kind == "functor") functor_from_json(doc.payload, "payload");
  if (doc.kind == "globmap") globmap_from_json(doc.payload, "payload");
  if (doc.kind == "polygraph") polygraph_from_json(doc.payload, "payload");
  if (doc.kind == "polymorphism")
    polymorphism_from_json(doc.payload, "payload");
  if (doc.kind == "term") term_doc_from_json(doc.payload, "payload");
  if (doc.kind == "fork") fork_from_json(doc.payload, "payload");
  return doc;
}

inline std::string serialize_document(const std::string& kind,
                                      const Json& payload) {
  Json j = Json::object();
  j["kind"] = kind;
  j["version"] = kDocVersion;
  j["payload"] = payload;
  return j.dump(2) + "\n";
}

}  // namespace polycat
