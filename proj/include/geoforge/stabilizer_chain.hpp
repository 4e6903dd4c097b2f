#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geoforge/permutation.hpp"

namespace geoforge {

/// Base and strong generating set of a permutation group, built by the
/// deterministic Schreier-Sims algorithm. New base points are the first point
/// moved by the generator that forces a new level.
class StabilizerChain {
 public:
  struct Level {
    std::size_t base = 0;                  // 0-based base point
    std::vector<Permutation> generators;   // strong generators fixing earlier base points
    std::vector<std::size_t> orbit;        // basic orbit, in discovery order
    // transversal[p] maps base to p; empty when p is outside the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  /// Residue after sifting and the level where sifting stopped
  /// (levels().size() when it ran through every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from = 0) const;
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<std::size_t> base() const;

 private:
  void add_generator(std::size_t level, const Permutation& g);
  void rebuild_orbit(Level& level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace geoforge
