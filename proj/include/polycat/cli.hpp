#pragma once

// Command-line surface. `run` executes one subcommand against document
// files and writes line-delimited JSON records followed by a summary
// record; `resolve` and `core` instead write a complete document. Exit
// codes: 0 = pass, 1 = validation or property failure (violation records
// carry the witness), 2 = malformed input or usage.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "polycat/adjunction.hpp"
#include "polycat/document.hpp"
#include "polycat/fixtures.hpp"
#include "polycat/free_category.hpp"
#include "polycat/functor.hpp"
#include "polycat/glob_poly.hpp"
#include "polycat/globular_set.hpp"
#include "polycat/monadicity.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/report.hpp"
#include "polycat/strict_category.hpp"

namespace polycat::cli {

inline void emit(std::ostream& out, const Json& record) {
  out << record.dump() << '\n';
}

inline void emit_violations(std::ostream& out, const ValidationReport& rep) {
  for (const auto& v : rep.violations)
    emit(out, Json{{"record", "violation"},
                   {"code", v.code},
                   {"message", v.message}});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PolycatError("parse.io", "cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Checks that a polygraph morphism given by finite tables is total,
// dimension-preserving and attachment-preserving.
inline ValidationReport validate_poly_morphism_doc(const PolyMorphismDoc& u) {
  ValidationReport rep;
  const FinitePolygraphView dom(u.dom);
  const FinitePolygraphView cod(u.cod);
  const PolyMorphism m = u.as_morphism();
  for (int n = 0; n <= u.dom.max_dim; ++n) {
    for (const auto& g : u.dom.gens[n]) {
      std::string img;
      try {
        img = m.apply(n, g);
      } catch (const PolycatError& e) {
        rep.add("assign.missing", e.what());
        continue;
      }
      if (!cod.contains(n, img)) {
        rep.add("assign.image", "image of " + std::to_string(n) +
                                    "-generator " + g +
                                    " is not a codomain generator: " + img);
        continue;
      }
      if (n == 0) continue;
      const AttachedGen& at = u.dom.attached(n, g);
      const AttachedGen& at_img = cod.attach_of(n, img);
      try {
        if (cell_key(apply_free_morphism(m, at.src)) != cell_key(at_img.src))
          rep.add("assign.src", "source attachment of " + g +
                                    " is not preserved");
        if (cell_key(apply_free_morphism(m, at.tgt)) != cell_key(at_img.tgt))
          rep.add("assign.tgt", "target attachment of " + g +
                                    " is not preserved");
      } catch (const PolycatError& e) {
        rep.add("assign.image", std::string("boundary transport failed: ") +
                                    e.what());
      }
    }
  }
  return rep;
}

struct Options {
  std::string file;
  int budget = 3;
  int dim = -1;  // -1 = input max dimension
};

inline int finish(std::ostream& out, const std::string& command,
                  const ValidationReport& rep, Json extra = Json::object()) {
  emit_violations(out, rep);
  Json summary{{"record", "summary"}, {"command", command}, {"ok", rep.ok()}};
  for (const auto& [key, value] : extra.items()) summary[key] = value;
  emit(out, summary);
  return rep.ok() ? 0 : 1;
}

inline int cmd_validate(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  ValidationReport rep;
  Json extra{{"kind", doc.kind}};
  if (doc.kind == "globset") {
    rep = validate_globular(globset_from_json(doc.payload, "payload"));
  } else if (doc.kind == "category") {
    rep = validate_category(category_from_json(doc.payload, "payload"));
  } else if (doc.kind == "functor") {
    const FunctorDoc f = functor_from_json(doc.payload, "payload");
    for (int n = 0; n <= f.dom.dims; ++n)
      for (const auto& c : f.dom.cell_names[n])
        if (!f.map[n].count(c))
          rep.add("assign.missing", "no image for " + std::to_string(n) +
                                        "-cell " + c);
    if (rep.ok()) rep = validate_functor(f.as_functor(), opt.budget);
  } else if (doc.kind == "globmap") {
    rep = validate_glob_map(globmap_from_json(doc.payload, "payload"));
  } else if (doc.kind == "polygraph") {
    const Polygraph p = polygraph_from_json(doc.payload, "payload");
    rep = validate_polygraph(FinitePolygraphView(p), opt.budget);
  } else if (doc.kind == "polymorphism") {
    rep = validate_poly_morphism_doc(
        polymorphism_from_json(doc.payload, "payload"));
  } else if (doc.kind == "term") {
    term_doc_from_json(doc.payload, "payload");  // well-formedness only
  } else if (doc.kind == "fork") {
    const ForkDoc f = fork_from_json(doc.payload, "payload");
    auto base = std::make_shared<TableCategory>(f.base);
    rep = validate_category(*base);
    if (rep.ok()) {
      const SplitFork fork = f.mode == "canonical"
                                 ? canonical_split_pair(base)
                                 : degenerate_split_fork(base);
      rep = validate_split_fork(fork, opt.budget);
    }
    extra["mode"] = f.mode;
  }
  return finish(out, "validate", rep, extra);
}

inline int cmd_free(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind != "polygraph")
    throw PolycatError("parse.kind",
                       "free expects a polygraph document, got " + doc.kind);
  const Polygraph p = polygraph_from_json(doc.payload, "payload");
  const FinitePolygraphView view(p);
  const int top = opt.dim >= 0 ? opt.dim : std::min(p.max_dim, 2);
  Json counts = Json::array();
  for (int n = 0; n <= top; ++n) {
    const auto cells = enumerate_cells(view, n, opt.budget);
    for (const auto& c : cells)
      emit(out, Json{{"record", "cell"}, {"dim", n}, {"cell", cell_key(c)}});
    counts.push_back(cells.size());
  }
  emit(out, Json{{"record", "summary"},
                 {"command", "free"},
                 {"ok", true},
                 {"counts", counts}});
  return 0;
}

inline int cmd_resolve(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind != "category")
    throw PolycatError("parse.kind",
                       "resolve expects a category document, got " + doc.kind);
  auto base = std::make_shared<TableCategory>(
      category_from_json(doc.payload, "payload"));
  auto r = make_resolution(base);
  const int top = opt.dim >= 0 ? std::min(opt.dim, r->max_dim())
                               : r->max_dim();
  Polygraph p(top);
  for (int n = 0; n <= top; ++n) {
    for (const auto& g : r->enumerate_gens(n, opt.budget)) {
      p.gens[n].push_back(g);
      if (n >= 1) p.attach[n].emplace(g, r->attach_of(n, g));
    }
  }
  Json payload = polygraph_to_json(p);
  payload["provenance"] = Json{{"source", "resolution"},
                               {"budget", opt.budget},
                               {"dim", top}};
  out << serialize_document("polygraph", payload);
  return 0;
}

inline int cmd_core(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  GlobularSet core;
  if (doc.kind == "polygraph") {
    const Polygraph p = polygraph_from_json(doc.payload, "payload");
    core = poly_core(FinitePolygraphView(p), opt.budget);
  } else if (doc.kind == "category") {
    auto base = std::make_shared<TableCategory>(
        category_from_json(doc.payload, "payload"));
    core = poly_core(*make_resolution(base), opt.budget);
  } else {
    throw PolycatError("parse.kind",
                       "core expects a polygraph or category document, got " +
                           doc.kind);
  }
  out << serialize_document("globset", globset_to_json(core));
  return 0;
}

inline int cmd_phi_check(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind != "category")
    throw PolycatError("parse.kind",
                       "phi-check expects a category document, got " +
                           doc.kind);
  auto base = std::make_shared<TableCategory>(
      category_from_json(doc.payload, "payload"));
  ValidationReport rep = validate_category(*base);
  if (!rep.ok()) return finish(out, "phi-check", rep);
  auto r = make_resolution(base);
  const GlobularSet core = poly_core(*r);
  for (int n = 0; n <= base->dims; ++n) {
    std::map<std::string, std::string> image;
    for (const auto& g : core.cells[n]) {
      const std::string z = triple_z(n, g);
      if (!base->has_cell(n, z))
        rep.add("oracle.escape", "core generator " + g +
                                     " projects outside the category");
      else if (!image.emplace(z, g).second)
        rep.add("oracle.collision",
                "two core generators project to the " + std::to_string(n) +
                    "-cell " + z);
      if (chi_cell(*r, n, z) != g)
        rep.add("oracle.retract", "chi does not invert the projection on " +
                                      g);
    }
    for (const auto& c : base->cell_names[n]) {
      const std::string back = chi_cell(*r, n, c);
      if (!in_core(core, n, back))
        rep.add("core.escape", "chi leaves the core on " +
                                   std::to_string(n) + "-cell " + c);
      else if (triple_z(n, back) != c)
        rep.add("oracle.section", "projection does not invert chi on " + c);
    }
    emit(out, Json{{"record", "dimension"},
                   {"dim", n},
                   {"core", core.cells[n].size()},
                   {"cells", base->cell_names[n].size()},
                   {"bijective", core.cells[n].size() ==
                                     base->cell_names[n].size()}});
    if (core.cells[n].size() != base->cell_names[n].size())
      rep.add("oracle.count", "core and cell counts differ at dimension " +
                                  std::to_string(n));
  }
  return finish(out, "phi-check", rep);
}

inline int cmd_lift(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind == "functor") {
    const FunctorDoc fd = functor_from_json(doc.payload, "payload");
    const OmegaFunctor f = fd.as_functor();
    ValidationReport rep = validate_functor(f, opt.budget);
    if (!rep.ok()) return finish(out, "lift", rep);
    auto rdom = make_resolution(f.dom);
    auto rcod = make_resolution(f.cod);
    const PolyMorphism lifted = resolve_functor(f, rdom, rcod);
    const int top = opt.dim >= 0 ? std::min(opt.dim, rdom->max_dim())
                                 : rdom->max_dim();
    for (int n = 0; n <= top; ++n)
      for (const auto& g : rdom->enumerate_gens(n, opt.budget))
        emit(out, Json{{"record", "image"},
                       {"dim", n},
                       {"gen", g},
                       {"image", lifted.apply(n, g)}});
    return finish(out, "lift", rep);
  }
  if (doc.kind == "globmap") {
    const GlobularMap m = globmap_from_json(doc.payload, "payload");
    ValidationReport rep = validate_glob_map(m);
    if (!rep.ok()) return finish(out, "lift", rep);
    // The embedded-polygraph morphism induced by a globular map sends
    // each cell, read as a generator, to its image.
    for (int n = 0; n <= m.dom.max_dim; ++n)
      for (const auto& c : m.dom.cells[n])
        emit(out, Json{{"record", "image"},
                       {"dim", n},
                       {"gen", c},
                       {"image", m.apply(n, c)}});
    return finish(out, "lift", rep);
  }
  throw PolycatError("parse.kind",
                     "lift expects a functor or globmap document, got " +
                         doc.kind);
}

inline int cmd_coeq(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind != "fork")
    throw PolycatError("parse.kind",
                       "coeq expects a fork document, got " + doc.kind);
  const ForkDoc fd = fork_from_json(doc.payload, "payload");
  auto base = std::make_shared<TableCategory>(fd.base);
  ValidationReport rep = validate_category(*base);
  if (!rep.ok()) return finish(out, "coeq", rep, Json{{"mode", fd.mode}});
  const SplitFork fork = fd.mode == "canonical" ? canonical_split_pair(base)
                                                : degenerate_split_fork(base);
  rep = validate_split_fork(fork, opt.budget);
  if (!rep.ok()) return finish(out, "coeq", rep, Json{{"mode", fd.mode}});
  const Transport t = transport_structure(fork);
  rep.merge(validate_category(*t.e));
  emit(out, Json{{"record", "e_table"}, {"category", category_to_json(*t.e)}});
  for (int n = 0; n <= fork.dp->max_dim(); ++n)
    for (const auto& d : fork.dp->cells(n, opt.budget))
      emit(out, Json{{"record", "h"},
                     {"dim", n},
                     {"cell", d},
                     {"image", t.h.apply(n, d)}});
  const IsoVerdict iso = is_iso(t.comparison, opt.budget);
  if (!iso.conclusive_iso())
    rep.add("transport.compare", "comparison with the base is not an " +
                                     std::string("isomorphism: ") +
                                     iso.witness);
  return finish(out, "coeq", rep, Json{{"mode", fd.mode}});
}

inline int cmd_beck_check(const Options& opt, std::ostream& out) {
  const Document doc = parse_document(read_file(opt.file));
  if (doc.kind != "category")
    throw PolycatError("parse.kind",
                       "beck-check expects a category document, got " +
                           doc.kind);
  auto base = std::make_shared<TableCategory>(
      category_from_json(doc.payload, "payload"));
  ValidationReport rep = validate_category(*base);
  emit(out, Json{{"record", "stage"}, {"name", "input"}, {"ok", rep.ok()}});
  if (!rep.ok())
    return finish(out, "beck-check", rep, Json{{"result", "E !≅ input"}});

  const SplitFork fork = canonical_split_pair(base);
  const ValidationReport fork_rep = validate_split_fork(fork, opt.budget);
  rep.merge(fork_rep);
  emit(out,
       Json{{"record", "stage"}, {"name", "fork"}, {"ok", fork_rep.ok()}});
  if (!fork_rep.ok())
    return finish(out, "beck-check", rep, Json{{"result", "E !≅ input"}});

  const Transport t = transport_structure(fork);
  const ValidationReport e_rep = validate_category(*t.e);
  rep.merge(e_rep);
  emit(out,
       Json{{"record", "stage"}, {"name", "transport"}, {"ok", e_rep.ok()}});

  const ValidationReport h_rep = validate_functor(t.h, opt.budget);
  rep.merge(h_rep);
  emit(out,
       Json{{"record", "stage"}, {"name", "quotient"}, {"ok", h_rep.ok()}});

  ValidationReport cmp_rep = validate_functor(t.comparison, opt.budget);
  const IsoVerdict iso = is_iso(t.comparison, opt.budget);
  if (!iso.conclusive_iso())
    cmp_rep.add("transport.compare",
                "comparison is not an isomorphism: " + iso.witness);
  rep.merge(cmp_rep);
  emit(out, Json{{"record", "stage"},
                 {"name", "comparison"},
                 {"ok", cmp_rep.ok()}});

  const ValidationReport resplit_rep = resplit_in_pol(fork, t, opt.budget);
  rep.merge(resplit_rep);
  emit(out, Json{{"record", "stage"},
                 {"name", "resplit"},
                 {"ok", resplit_rep.ok()}});

  return finish(out, "beck-check", rep,
                Json{{"result", rep.ok() ? "E ≅ input" : "E !≅ input"}});
}

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"polygraphs, omega-category tables and their resolutions"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("file", opt.file, "input document")->required();
    sub->add_option("--budget", opt.budget,
                    "size bound for enumerated cells and generators");
    sub->add_option("--dim", opt.dim,
                    "top dimension (default: input maximum)");
  };
  CLI::App* validate = app.add_subcommand(
      "validate", "check a document's structural and equational laws");
  CLI::App* free_cmd = app.add_subcommand(
      "free", "enumerate cells of the free category on a polygraph");
  CLI::App* resolve = app.add_subcommand(
      "resolve", "export the budgeted resolution of a category");
  CLI::App* core = app.add_subcommand(
      "core", "export the globular core of a polygraph or resolution");
  CLI::App* phi = app.add_subcommand(
      "phi-check", "verify the core / cell bijection for a category");
  CLI::App* lift = app.add_subcommand(
      "lift", "emit the lifted generator mapping of a functor or map");
  CLI::App* coeq = app.add_subcommand(
      "coeq", "run a fork document through splitting and transport");
  CLI::App* beck = app.add_subcommand(
      "beck-check", "run the full pipeline on a category document");
  for (CLI::App* sub :
       {validate, free_cmd, resolve, core, phi, lift, coeq, beck})
    add_common(sub);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(err, Json{{"record", "error"},
                   {"code", "parse.usage"},
                   {"message", e.what()}});
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (free_cmd->parsed()) return cmd_free(opt, out);
    if (resolve->parsed()) return cmd_resolve(opt, out);
    if (core->parsed()) return cmd_core(opt, out);
    if (phi->parsed()) return cmd_phi_check(opt, out);
    if (lift->parsed()) return cmd_lift(opt, out);
    if (coeq->parsed()) return cmd_coeq(opt, out);
    if (beck->parsed()) return cmd_beck_check(opt, out);
  } catch (const PolycatError& e) {
    const bool malformed = e.code().rfind("parse.", 0) == 0;
    emit(err, Json{{"record", "error"},
                   {"code", e.code()},
                   {"message", e.what()}});
    return malformed ? 2 : 1;
  }
  emit(err, Json{{"record", "error"},
                 {"code", "parse.usage"},
                 {"message", "no subcommand selected"}});
  return 2;
}

}  // namespace polycat::cli
