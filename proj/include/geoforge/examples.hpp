#pragma once

#include <string>
#include <vector>

#include "geoforge/cgroups.hpp"
#include "geoforge/ops.hpp"

namespace geoforge::examples {

/// Sym(n) with rho_i = (i+1, i+2), labels "0".."n-2".
GeneratorSystem simplex(std::size_t n);
inline GeneratorSystem tetrahedron() { return simplex(4); }
CosetSystem tetrahedron_system();

/// (G, (H)) with H trivial, the type labelled `type`.
CosetSystem rank1(const GroupPtr& g, const std::string& type);

/// Tetrahedron twisted by <tau>, tau = (1,4)(2,3) acting by conjugation.
Twist tetrahedron_twist(std::vector<std::size_t> reps = {0, 1});

/// (C_2)^n on 2n points, a_i = (2i+1, 2i+2), A_i = <a_j : j != i>.
CosetSystem elementary(std::size_t n);
/// Conjugation swapping a_i and a_j for each pair.
Permutation block_swap(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

struct BlockAction {
  CosetSystem alpha;  // (C_2)^7
  CosetSystem beta;   // <b_7, b_8> = Sym(3), types "7", "8"
  ActionPtr phi;
};
BlockAction block_action();

/// C_2 wr Sym(r) as the wreath of (C_2, {e}) by the Sym(r) string system.
Twist c2_wreath(std::size_t r);
/// rho_0 = (flip of the first coordinate, e), rho_i = (e, (i, i+1)).
GeneratorSystem c2_wreath_generators(const Twist& w);

/// Degree-22 generators of the {4,12} polytope of Aut(M22).
std::vector<Permutation> m22();

struct NamedSystem {
  std::string name;
  CosetSystem system;
  bool designed_failure = false;  // built not to be flag-transitive
};
/// Constructions used throughout, then five systems that are not
/// flag-transitive.
std::vector<NamedSystem> fixture_systems();

}  // namespace geoforge::examples
