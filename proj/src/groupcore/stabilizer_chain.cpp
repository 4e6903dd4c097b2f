#include "geoforge/stabilizer_chain.hpp"

#include <limits>

#include "geoforge/error.hpp"

namespace geoforge {

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree)
      fail(ErrorCode::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) +
                                          " in a group of degree " + std::to_string(degree));
    auto [residue, level] = sift(g);
    if (!residue.is_identity()) add_generator(0, g);
  }
}

void StabilizerChain::rebuild_orbit(Level& level) {
  level.orbit.assign(1, level.base);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base] = Permutation(degree_);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    std::size_t p = level.orbit[i];
    for (const auto& s : level.generators) {
      std::size_t q = s[p];
      if (!level.transversal[q]) {
        level.transversal[q] = *level.transversal[p] * s;
        level.orbit.push_back(q);
      }
    }
  }
}

void StabilizerChain::add_generator(std::size_t l, const Permutation& g) {
  if (l == levels_.size()) {
    Level fresh;
    fresh.base = g.first_moved_point();
    levels_.push_back(std::move(fresh));
  }
  levels_[l].generators.push_back(g);
  rebuild_orbit(levels_[l]);

  // Every Schreier generator of this level must lie in the next level's group.
  for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
    for (std::size_t si = 0; si < levels_[l].generators.size(); ++si) {
      const Level& level = levels_[l];
      std::size_t beta = level.orbit[oi];
      const Permutation& s = level.generators[si];
      std::size_t image = s[beta];
      Permutation schreier = *level.transversal[beta] * s * level.transversal[image]->inverse();
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(schreier, l + 1);
      if (!residue.is_identity()) add_generator(l + 1, residue);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g, std::size_t from) const {
  Permutation h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    std::size_t beta = h[level.base];
    if (!level.transversal[beta]) return {h, i};
    h = h * level.transversal[beta]->inverse();
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

std::uint64_t StabilizerChain::order() const {
  unsigned __int128 total = 1;
  for (const auto& level : levels_) {
    total *= level.orbit.size();
    if (total > std::numeric_limits<std::uint64_t>::max())
      throw CapExceeded("group order exceeds 64 bits", std::numeric_limits<std::uint64_t>::max(), 0);
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::size_t> StabilizerChain::base() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

}  // namespace geoforge
