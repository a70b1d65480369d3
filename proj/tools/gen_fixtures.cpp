// Regenerates the document corpus under fixtures/. Usage:
//   gen_fixtures [output-dir]
// Every file is written through the canonical serializer, so the corpus is
// byte-stable under parse + serialize.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "polycat/document.hpp"
#include "polycat/fixtures.hpp"
#include "polycat/term.hpp"

using namespace polycat;
namespace fx = polycat::fixtures;

namespace {

void write_doc(const std::filesystem::path& dir, const std::string& name,
               const std::string& kind, const Json& payload) {
  const std::filesystem::path path = dir / (name + "." + kind + ".json");
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    std::exit(1);
  }
  out << serialize_document(kind, payload);
  std::cout << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  write_doc(dir, "fix1", "category", category_to_json(fx::terminal2()));
  write_doc(dir, "fix2", "category", category_to_json(fx::walking_arrow()));
  write_doc(dir, "fix3", "category",
            category_to_json(fx::idempotent_monoid()));
  write_doc(dir, "zmod3", "category", category_to_json(fx::zmod3()));
  write_doc(dir, "two_cell", "category",
            category_to_json(fx::walking_two_cell()));

  write_doc(dir, "arrow", "globset", globset_to_json(fx::arrow_globset()));
  write_doc(dir, "two_cell", "globset",
            globset_to_json(fx::two_cell_globset()));

  write_doc(dir, "loop", "polygraph",
            polygraph_to_json(fx::loop_contraction()));
  write_doc(dir, "two_strand", "polygraph",
            polygraph_to_json(fx::two_strand()));

  // The collapse of the walking arrow onto the terminal category.
  FunctorDoc collapse;
  collapse.dom = fx::walking_arrow();
  collapse.cod = fx::terminal2();
  collapse.map.resize(2);
  collapse.map[0] = {{"x", "*"}, {"y", "*"}};
  collapse.map[1] = {{"idx", "id(*)"}, {"idy", "id(*)"}, {"f", "id(*)"}};
  write_doc(dir, "collapse", "functor", functor_to_json(collapse));

  GlobularMap ident;
  ident.dom = fx::two_cell_globset();
  ident.cod = fx::two_cell_globset();
  ident.map.resize(3);
  for (int n = 0; n <= 2; ++n)
    for (const auto& c : ident.dom.cells[n]) ident.map[n][c] = c;
  write_doc(dir, "two_cell_id", "globmap", globmap_to_json(ident));

  PolyMorphismDoc loop_id;
  loop_id.dom = fx::loop_contraction();
  loop_id.cod = fx::loop_contraction();
  loop_id.map.resize(3);
  for (int n = 0; n <= 2; ++n)
    for (const auto& g : loop_id.dom.gens[n]) loop_id.map[n][g] = g;
  write_doc(dir, "loop_id", "polymorphism", polymorphism_to_json(loop_id));

  // The interchange composite of the two strands.
  const TermPtr interchange = Term::make_comp(
      1,
      Term::make_comp(0, Term::make_gen("al"),
                      Term::make_id(Term::make_gen("v"))),
      Term::make_comp(0, Term::make_id(Term::make_gen("u")),
                      Term::make_gen("be")));
  write_doc(dir, "interchange", "term", term_doc_to_json(interchange));

  write_doc(dir, "fix1_canonical", "fork",
            fork_to_json({"canonical", fx::terminal2()}));
  write_doc(dir, "fix2_canonical", "fork",
            fork_to_json({"canonical", fx::walking_arrow()}));
  write_doc(dir, "fix3_degenerate", "fork",
            fork_to_json({"degenerate", fx::idempotent_monoid()}));
  return 0;
}
