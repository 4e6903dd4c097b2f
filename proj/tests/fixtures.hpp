#pragma once

#include <string>
#include <vector>

#include "geoforge/cgroups.hpp"
#include "geoforge/cosetgeom.hpp"
#include "geoforge/group.hpp"

namespace fx {

inline geoforge::Permutation P(const std::string& text, std::size_t degree) {
  return geoforge::parse_permutation(text, degree);
}

inline geoforge::GroupPtr sym4() {
  return geoforge::Group::permutations(
      4, std::vector<geoforge::Generator>{{"r0", P("(1,2)", 4)}, {"r1", P("(2,3)", 4)}, {"r2", P("(3,4)", 4)}});
}

inline geoforge::GroupPtr sub(const geoforge::GroupPtr& g, const std::vector<geoforge::Element>& gens) {
  return geoforge::generated_by(g->arithmetic_ptr(), gens);
}

// The {4,12} polytope for Aut(M22).
inline std::vector<geoforge::Permutation> m22() {
  return {
      P("(3,15)(4,16)(5,9)(6,19)(8,18)(10,17)(14,20)", 22),
      P("(1,3)(2,19)(4,5)(6,22)(7,18)(8,12)(9,16)(10,21)(11,17)(13,15)(14,20)", 22),
      P("(1,7)(2,12)(5,8)(6,20)(9,18)(11,22)(13,21)(14,19)", 22),
  };
}

inline geoforge::GeneratorSystem tetrahedron() {
  return geoforge::generator_system(4, {P("(1,2)", 4), P("(2,3)", 4), P("(3,4)", 4)});
}

inline geoforge::CosetSystem tetrahedron_system() { return geoforge::cgroup_system(tetrahedron()); }

inline geoforge::CosetSystem system_of(const geoforge::GroupPtr& g, const std::vector<std::vector<geoforge::Element>>& parts,
                                       std::vector<std::string> types = {}) {
  if (types.empty())
    for (std::size_t i = 0; i < parts.size(); ++i) types.push_back(std::to_string(i));
  std::vector<geoforge::GroupPtr> subs;
  for (const auto& p : parts) subs.push_back(sub(g, p));
  return geoforge::CosetSystem(g, std::move(types), std::move(subs));
}

// Sym(4) with G_0 = <(1,2)>, G_1 = <(3,4)>, G_2 = <(1,3)>: flag-transitive
// (all pairwise intersections are trivial) but not residually connected.
inline geoforge::CosetSystem transpositions_s4() {
  auto g = sym4();
  return system_of(g, {{P("(1,2)", 4)}, {P("(3,4)", 4)}, {P("(1,3)", 4)}});
}

// Five systems that are not flag-transitive.
inline std::vector<geoforge::CosetSystem> ft_failures() {
  std::vector<geoforge::CosetSystem> out;
  auto s4 = sym4();
  out.push_back(system_of(s4, {{P("(1,2)(3,4)", 4)}, {P("(1,3)(2,4)", 4)}, {P("(1,4)(2,3)", 4)}}));
  auto klein = geoforge::Group::permutations(4, std::vector<geoforge::Permutation>{P("(1,2)", 4), P("(3,4)", 4)});
  out.push_back(system_of(klein, {{P("(1,2)", 4)}, {P("(3,4)", 4)}, {P("(1,2)(3,4)", 4)}}));
  out.push_back(system_of(s4, {{P("(2,3,4)", 4)}, {P("(1,3,4,2)", 4)}, {P("(1,2,3,4)", 4), P("(1,4)(2,3)", 4)}}));
  out.push_back(system_of(s4, {{P("(1,2,3)", 4)}, {P("(2,3,4)", 4)}, {P("(1,4,3,2)", 4)}}));
  out.push_back(system_of(s4, {{P("(1,3)", 4), P("(2,3)", 4)}, {P("(1,4)(2,3)", 4)}, {P("(1,4,2)", 4)}}));
  return out;
}

inline geoforge::CosetSystem ft_failure() { return std::move(ft_failures().front()); }

}  // namespace fx
