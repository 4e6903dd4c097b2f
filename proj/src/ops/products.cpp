#include <set>

#include "geoforge/error.hpp"
#include "geoforge/ops.hpp"

namespace geoforge {
namespace {

// Subgroup of a product group generated by the factors' subgroups, placed
// coordinatewise.
GroupPtr product_subgroup(const GroupPtr& g, const std::vector<const Group*>& parts) {
  const Element id = g->identity();
  std::vector<Element> gens;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& x : parts[k]->generator_elements()) {
      std::vector<Element> coords(id.parts().begin(), id.parts().end());
      coords[k] = x;
      gens.push_back(Element::tuple(std::move(coords)));
    }
  return generated_by(g->arithmetic_ptr(), gens);
}

CosetSystem product_of(const std::vector<CosetSystem>& systems, std::vector<std::string> types) {
  std::vector<GroupPtr> factors;
  for (const auto& s : systems) factors.push_back(s.group());
  auto g = direct_product_group(factors);
  std::vector<GroupPtr> parabolics;
  for (std::size_t k = 0; k < systems.size(); ++k)
    for (std::size_t i = 0; i < systems[k].rank(); ++i) {
      std::vector<const Group*> parts;
      for (std::size_t m = 0; m < systems.size(); ++m)
        parts.push_back(m == k ? systems[k].maximal(i).get() : systems[m].group().get());
      parabolics.push_back(product_subgroup(g, parts));
    }
  return CosetSystem(g, std::move(types), std::move(parabolics));
}

}  // namespace

GroupPtr direct_product_group(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "direct product of no groups");
  std::vector<ArithmeticPtr> ariths;
  std::vector<Element> ids;
  std::set<std::string> labels;
  bool clash = false;
  for (const auto& f : factors) {
    ariths.push_back(f->arithmetic_ptr());
    ids.push_back(f->identity());
    for (const auto& g : f->generators()) clash |= !labels.insert(g.label).second;
  }
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& g : factors[k]->generators()) {
      auto coords = ids;
      coords[k] = g.element;
      gens.push_back({clash ? g.label + "_" + std::to_string(k + 1) : g.label, Element::tuple(std::move(coords))});
    }
  return Group::make(product_arithmetic(std::move(ariths)), std::move(gens));
}

CosetSystem direct_product(const CosetSystem& alpha, const CosetSystem& beta) {
  std::vector<std::string> types = alpha.types();
  std::set<std::string> seen(types.begin(), types.end());
  for (const auto& t : beta.types()) {
    if (seen.count(t)) fail(ErrorCode::TypeLabelCollision, "type '" + t + "' occurs in both factors");
    types.push_back(t);
  }
  return product_of({alpha, beta}, std::move(types));
}

CosetSystem direct_power(const CosetSystem& alpha, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty index set");
  std::vector<std::string> types;
  for (std::size_t w = 1; w <= n; ++w)
    for (const auto& t : alpha.types()) types.push_back("(" + t + "," + std::to_string(w) + ")");
  return product_of(std::vector<CosetSystem>(n, alpha), std::move(types));
}

}  // namespace geoforge
