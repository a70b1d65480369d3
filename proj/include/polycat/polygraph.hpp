#pragma once

// Polygraphs: generator names per dimension, each generator above dimension 0
// attached along a parallel pair of normal cells one dimension down.
// `Polygraph` is the finite explicit form; `LazyPolygraph` is the interface
// shared with budget-enumerated infinite polygraphs (resolutions), and
// `PolyMorphism` maps generators to generators dimensionwise.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polycat/normal_form.hpp"
#include "polycat/report.hpp"

namespace polycat {

struct AttachedGen {
  NormalCell src;
  NormalCell tgt;
};

struct Polygraph {
  int max_dim = 0;
  std::vector<std::vector<std::string>> gens;              // [n]
  std::vector<std::map<std::string, AttachedGen>> attach;  // [n], n >= 1

  Polygraph() : gens(1), attach(1) {}
  explicit Polygraph(int dim)
      : max_dim(dim), gens(dim + 1), attach(dim + 1) {}

  bool has_gen(int n, const std::string& g) const {
    if (n < 0 || n > max_dim) return false;
    for (const auto& x : gens[n])
      if (x == g) return true;
    return false;
  }

  const AttachedGen& attached(int n, const std::string& g) const {
    if (n < 1 || n > max_dim)
      throw PolycatError("malformed.attach",
                         "no attachments at dimension " + std::to_string(n));
    auto it = attach[n].find(g);
    if (it == attach[n].end())
      throw PolycatError("malformed.attach",
                         "no attachment for generator " + g);
    return it->second;
  }
};

class LazyPolygraph {
 public:
  virtual ~LazyPolygraph() = default;

  // Largest dimension that may carry generators.
  virtual int max_dim() const = 0;
  virtual bool is_finite() const = 0;

  virtual bool contains(int n, const std::string& g) const = 0;

  // All n-generators whose attachment boundaries have canonical size at most
  // `budget`, in a deterministic order; finite polygraphs ignore the budget.
  virtual std::vector<std::string> enumerate_gens(int n, int budget) const = 0;

  virtual AttachedGen attach_of(int n, const std::string& g) const = 0;
};

class FinitePolygraphView final : public LazyPolygraph {
 public:
  explicit FinitePolygraphView(Polygraph p) : p_(std::move(p)) {}

  int max_dim() const override { return p_.max_dim; }
  bool is_finite() const override { return true; }
  bool contains(int n, const std::string& g) const override {
    return p_.has_gen(n, g);
  }
  std::vector<std::string> enumerate_gens(int n, int) const override {
    if (n < 0 || n > p_.max_dim) return {};
    return p_.gens[n];
  }
  AttachedGen attach_of(int n, const std::string& g) const override {
    return p_.attached(n, g);
  }

  const Polygraph& data() const { return p_; }

 private:
  Polygraph p_;
};

inline std::shared_ptr<const LazyPolygraph> wrap_polygraph(Polygraph p) {
  return std::make_shared<FinitePolygraphView>(std::move(p));
}

// Dimension-respecting map of generators. The map function may memoize
// internally; it must be deterministic.
struct PolyMorphism {
  std::shared_ptr<const LazyPolygraph> dom;
  std::shared_ptr<const LazyPolygraph> cod;
  std::function<std::string(int, const std::string&)> map;

  std::string apply(int n, const std::string& g) const { return map(n, g); }
};

inline PolyMorphism identity_poly_morphism(
    std::shared_ptr<const LazyPolygraph> p) {
  return {p, p, [](int, const std::string& g) { return g; }};
}

inline PolyMorphism compose_poly_morphisms(const PolyMorphism& f,
                                           const PolyMorphism& g) {
  if (f.cod.get() != g.dom.get())
    throw PolycatError("malformed.compose",
                       "morphism codomain/domain mismatch");
  auto fm = f.map;
  auto gm = g.map;
  return {f.dom, g.cod,
          [fm, gm](int n, const std::string& c) { return gm(n, fm(n, c)); }};
}

}  // namespace polycat
