#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "geoforge/cosetgeom.hpp"

namespace geoforge {

/// A group with an ordered list of generating involutions rho_0..rho_{r-1}.
/// The group's generators are exactly the involutions, in order.
struct GeneratorSystem {
  GroupPtr group;

  std::size_t rank() const { return group->generators().size(); }
  const Element& rho(std::size_t i) const { return group->generators().at(i).element; }
  const std::string& label(std::size_t i) const { return group->generators().at(i).label; }
  std::vector<Element> rhos() const { return group->generator_elements(); }
};

/// Labels default to "0".."r-1". Throws InvalidArgument if some generator is
/// not an involution.
GeneratorSystem generator_system(std::size_t degree, const std::vector<Permutation>& rhos,
                                 std::vector<std::string> labels = {});
GeneratorSystem generator_system(GroupPtr group);

CheckReport check_string_property(const GeneratorSystem& s);

enum class IpMode { Full, Reduced2E16 };
/// Full: <M> n <N> = <M n N> for all M, N. Reduced: G_0 and G_{r-1} are
/// C-groups and G_0 n G_{r-1} = <rho_1..rho_{r-2}>; non-string systems fall
/// back to the full check.
CheckReport check_intersection_property(const GeneratorSystem& s, IpMode mode = IpMode::Full);

struct CoxeterDiagram {
  std::vector<std::string> nodes;
  /// (i, j) with i < j -> o(rho_i rho_j), only for orders >= 3.
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> edges;
  bool linear = true;

  std::string to_string() const;
};

CoxeterDiagram coxeter_diagram(const GeneratorSystem& s);
/// Path forest test: every node has at most two neighbors and there is no cycle.
bool is_linear(std::size_t nodes, const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& edges);

struct PermRepGraph {
  std::size_t vertices = 0;
  /// (a, b, label index), 1-based vertices, a < b.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
  std::size_t labels = 0;
};

PermRepGraph permrep_graph_of(const GeneratorSystem& s);
/// "n=<vertices>" then one line per label "<i>: a-b a-b ...".
std::string emit_permrep(const PermRepGraph& g);
GeneratorSystem parse_permrep_graph(const std::string& text);

/// Families "T9-1", "T9-2", "T5-13", "T5-14", "T5-15", "T5-16" on 2r points.
GeneratorSystem builtin_family(const std::string& id, std::size_t r);
std::vector<std::string> builtin_family_ids();

/// Gamma(G, (<S \ {rho_i}>)) over types given by the generator labels.
CosetSystem cgroup_system(const GeneratorSystem& s);

struct Halving {
  GeneratorSystem system;
  std::uint64_t order = 0;           // order of the new generated group
  std::uint64_t original_order = 0;  // order of <S>
};

/// Replaces rho_a by rho_a rho_b rho_a.
Halving halve(const GeneratorSystem& s, std::size_t a, std::size_t b);

/// Involution search for rank-3 polytopes: t commutes with inv_1,
/// o(inv_0 t) >= 3, o(inv_0 inv_1) odd, <t, inv_0, inv_1> = G and the
/// intersection property holds. Returns (t, inv_0, inv_1) as rho_0..rho_2.
/// Throws NotFound when no triple qualifies.
GeneratorSystem search_rank3_polytope(const GroupPtr& g, const Element& t);

}  // namespace geoforge
