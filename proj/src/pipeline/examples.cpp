#include "geoforge/examples.hpp"

#include "geoforge/error.hpp"

namespace geoforge::examples {
namespace {

Permutation P(const std::string& text, std::size_t degree) { return parse_permutation(text, degree); }

CosetSystem system_of(const GroupPtr& g, const std::vector<std::vector<Permutation>>& parts) {
  std::vector<std::string> types;
  std::vector<GroupPtr> subs;
  for (const auto& p : parts) {
    types.push_back(std::to_string(types.size()));
    subs.push_back(generated_by(g->arithmetic_ptr(), std::vector<Element>(p.begin(), p.end())));
  }
  return CosetSystem(g, std::move(types), std::move(subs));
}

GroupPtr perms(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(P(c, degree));
  return Group::permutations(degree, gens);
}

}  // namespace

GeneratorSystem simplex(std::size_t n) {
  std::vector<Permutation> rhos;
  for (std::size_t i = 1; i < n; ++i) rhos.push_back(Permutation::from_transpositions(n, {{i, i + 1}}));
  return generator_system(n, rhos);
}

CosetSystem tetrahedron_system() { return cgroup_system(tetrahedron()); }

CosetSystem rank1(const GroupPtr& g, const std::string& type) {
  return CosetSystem(g, {type}, {Group::trivial(g->arithmetic_ptr())});
}

Twist tetrahedron_twist(std::vector<std::size_t> reps) {
  auto alpha = tetrahedron_system();
  auto b = Group::permutations(4, std::vector<Generator>{{"tau", P("(1,4)(2,3)", 4)}});
  return twist(alpha, rank1(b, "tau"), validate(ActionSpec::conjugation(b, alpha.group())), std::move(reps));
}

CosetSystem elementary(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Permutation::from_transpositions(2 * n, {{2 * i + 1, 2 * i + 2}}));
  return cgroup_system(generator_system(2 * n, gens));
}

Permutation block_swap(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (auto [i, j] : pairs) {
    swaps.emplace_back(2 * i + 1, 2 * j + 1);
    swaps.emplace_back(2 * i + 2, 2 * j + 2);
  }
  return Permutation::from_transpositions(2 * n, swaps);
}

BlockAction block_action() {
  auto alpha = elementary(7);
  auto b7 = block_swap(7, {{1, 3}, {2, 4}});
  auto b8 = block_swap(7, {{3, 5}, {4, 6}});
  auto beta = cgroup_system(generator_system(14, {b7, b8}, {"7", "8"}));
  auto phi = validate(ActionSpec::conjugation(beta.group(), alpha.group()));
  return {alpha, beta, phi};
}

Twist c2_wreath(std::size_t r) {
  auto c2 = Group::permutations(2, std::vector<Generator>{{"a", P("(1,2)", 2)}});
  std::vector<Permutation> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < r; ++i) {
    gens.push_back(Permutation::from_transpositions(r, {{i, i + 1}}));
    labels.push_back(std::to_string(i));
  }
  auto beta = cgroup_system(generator_system(r, gens, labels));
  return wreath(rank1(c2, "0"), beta, gens, {0});
}

GeneratorSystem c2_wreath_generators(const Twist& w) {
  const auto& g = w.system.group();
  const Element id = g->identity();
  std::vector<Element> coords(id.first().parts().begin(), id.first().parts().end());
  coords.at(0) = P("(1,2)", 2);
  std::vector<Generator> rhos{{"0", Element::pair(Element::tuple(coords), id.second())}};
  for (const auto& b : w.beta.group()->generators()) rhos.push_back({b.label, Element::pair(id.first(), b.element)});
  return generator_system(Group::make(g->arithmetic_ptr(), rhos));
}

std::vector<Permutation> m22() {
  return {
      P("(3,15)(4,16)(5,9)(6,19)(8,18)(10,17)(14,20)", 22),
      P("(1,3)(2,19)(4,5)(6,22)(7,18)(8,12)(9,16)(10,21)(11,17)(13,15)(14,20)", 22),
      P("(1,7)(2,12)(5,8)(6,20)(9,18)(11,22)(13,21)(14,19)", 22),
  };
}

std::vector<NamedSystem> fixture_systems() {
  std::vector<NamedSystem> out;
  auto add = [&](std::string name, CosetSystem s) { out.push_back({std::move(name), std::move(s), false}); };
  add("tetrahedron", tetrahedron_system());
  add("triangle", cgroup_system(simplex(3)));
  add("4-simplex", cgroup_system(simplex(5)));
  for (const auto& [id, r] : std::vector<std::pair<std::string, std::size_t>>{
           {"T9-1", 3}, {"T9-1", 4}, {"T9-2", 3}, {"T5-13", 3}, {"T5-13", 4}, {"T5-14", 3}, {"T5-14", 4}})
    add(id + "(" + std::to_string(r) + ")", cgroup_system(builtin_family(id, r)));
  add("tetrahedron-twist", tetrahedron_twist().system);
  {
    auto ex = block_action();
    add("block-action-twist", twist(ex.alpha, ex.beta, ex.phi, {0, 1, 2}).system);
  }
  add("c2-wreath(3)", c2_wreath(3).system);
  add("self-dual-4-simplex", self_dual_twist(simplex(5), {0, 2}).twist.system);
  add("self-dual-square", self_dual_twist(generator_system(4, {P("(2,4)", 4), P("(1,2)(3,4)", 4)})).twist.system);
  {
    auto seg = rank1(Group::permutations(2, std::vector<Generator>{{"s", P("(1,2)", 2)}}), "s");
    add("tetrahedron-x-segment", direct_product(tetrahedron_system(), seg));
  }
  add("halved-tetrahedron", cgroup_system(halve(tetrahedron(), 2, 1).system));

  auto s4 = perms(4, {"(1,2)", "(2,3)", "(3,4)"});
  add("s4-transpositions", system_of(s4, {{P("(1,2)", 4)}, {P("(3,4)", 4)}, {P("(1,3)", 4)}}));
  add("s4-rank2", system_of(s4, {{P("(1,2)", 4), P("(2,3)", 4)}, {P("(3,4)", 4)}}));
  add("c4-unconnected", system_of(perms(4, {"(1,2,3,4)"}), {{}, {P("(1,3)(2,4)", 4)}}));

  auto bad = [&](std::string name, CosetSystem s) { out.push_back({std::move(name), std::move(s), true}); };
  bad("klein-in-s4", system_of(s4, {{P("(1,2)(3,4)", 4)}, {P("(1,3)(2,4)", 4)}, {P("(1,4)(2,3)", 4)}}));
  auto klein = perms(4, {"(1,2)", "(3,4)"});
  bad("klein-diagonal", system_of(klein, {{P("(1,2)", 4)}, {P("(3,4)", 4)}, {P("(1,2)(3,4)", 4)}}));
  bad("s4-mixed", system_of(s4, {{P("(2,3,4)", 4)}, {P("(1,3,4,2)", 4)}, {P("(1,2,3,4)", 4), P("(1,4)(2,3)", 4)}}));
  bad("s4-cycles", system_of(s4, {{P("(1,2,3)", 4)}, {P("(2,3,4)", 4)}, {P("(1,4,3,2)", 4)}}));
  bad("s4-s3-v", system_of(s4, {{P("(1,3)", 4), P("(2,3)", 4)}, {P("(1,4)(2,3)", 4)}, {P("(1,4,2)", 4)}}));
  return out;
}

}  // namespace geoforge::examples
