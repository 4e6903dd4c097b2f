#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geoforge/cosetgeom.hpp"

namespace geoforge {

/// An explicit incidence geometry: typed elements and a symmetric incidence
/// relation between elements of distinct types.
struct Geometry {
  std::vector<std::string> types;
  std::vector<std::uint32_t> type_of;
  std::vector<std::string> names;
  /// Sorted neighbor lists; never contains the element itself.
  std::vector<std::vector<std::uint32_t>> adjacency;

  std::size_t size() const noexcept { return type_of.size(); }
  bool incident(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::size_t> counts() const;
  std::size_t incidence_count() const;

  /// Appends an element and returns its id.
  std::uint32_t add(std::uint32_t type, std::string name);
  void connect(std::uint32_t a, std::uint32_t b);
  /// Sorts and dedups adjacency lists.
  void finish();
};

/// A geometry built from a coset system, keeping the link back to cosets.
struct Materialized {
  std::shared_ptr<const CosetTables> tables;
  Geometry geometry;
  /// Element id -> canonical representative (minimum of the coset).
  std::vector<Element> representatives;
  /// Element id -> coset label in tables->labels(type).
  std::vector<std::uint32_t> coset_label;
  /// Per type, coset label -> element id.
  std::vector<std::vector<std::uint32_t>> element_of_label;

  /// Image of element `e` under left multiplication by g.
  std::uint32_t act(const Element& g, std::uint32_t e) const;
};

/// Elements are the left cosets of every G_i; incident iff they intersect.
/// Throws CapExceeded when the element count exceeds caps().geometry.
Materialized materialize(const CosetSystem& sys);
inline Geometry materialize_geometry(const CosetSystem& sys) { return materialize(sys).geometry; }

/// xG_i meets yG_j, by enumerating the smaller of G_i, G_j.
bool cosets_intersect(const CosetSystem& sys, std::size_t i, const Element& x, std::size_t j, const Element& y);

struct DirectReport {
  bool is_geometry = false;
  bool connected = false;
  bool residually_connected = false;
  bool firm = false;
  bool thin = false;
  std::uint64_t chamber_count = 0;
};

/// All flags with the given type set, as sorted element lists.
std::vector<std::vector<std::uint32_t>> flags_of_type(const Geometry& geo, TypeSet types);
std::vector<std::vector<std::uint32_t>> chambers(const Geometry& geo);
DirectReport check_geometry_direct(const Geometry& geo);

/// Number of G-orbits on chambers, G acting by left multiplication.
std::uint64_t chamber_orbits(const Materialized& m);
/// Number of G-orbits on the flags of each type subset, indexed by TypeSet.
std::vector<std::uint64_t> flag_orbit_counts(const Materialized& m);

/// Colored isomorphism g1 -> g2 (element id map). `type_map[t]` fixes the
/// image of type t; without it every count-preserving type bijection is tried.
std::optional<std::vector<std::uint32_t>> colored_isomorphic(
    const Geometry& g1, const Geometry& g2, const std::optional<std::vector<std::uint32_t>>& type_map = std::nullopt);

/// The 3-cube: vertices, edges and faces as types "0", "1", "2".
Geometry cube_reference();
/// Disjoint union with every cross-component pair incident.
Geometry join(const std::vector<Geometry>& geos);

std::string export_dot(const Geometry& geo);
std::string export_json(const Geometry& geo);
Geometry import_json(const std::string& text);

}  // namespace geoforge
