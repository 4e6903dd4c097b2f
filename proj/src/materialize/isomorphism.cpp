#include <algorithm>
#include <map>
#include <numeric>

#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

namespace geoforge {
namespace {

// Joint color refinement: returns false when class sizes diverge.
bool refine(const Geometry& g1, const Geometry& g2, std::vector<std::uint32_t>& c1, std::vector<std::uint32_t>& c2) {
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> palette;
    auto recolor = [&](const Geometry& g, const std::vector<std::uint32_t>& c) {
      std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> sig(g.size());
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        sig[v].first = c[v];
        for (auto w : g.adjacency[v]) sig[v].second.push_back(c[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      return sig;
    };
    auto s1 = recolor(g1, c1);
    auto s2 = recolor(g2, c2);
    for (const auto& s : s1) palette.emplace(s, 0);
    for (const auto& s : s2) palette.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [key, value] : palette) value = next++;
    std::vector<std::size_t> size1(next, 0), size2(next, 0);
    for (std::uint32_t v = 0; v < g1.size(); ++v) ++size1[c1[v] = palette.at(s1[v])];
    for (std::uint32_t v = 0; v < g2.size(); ++v) ++size2[c2[v] = palette.at(s2[v])];
    if (size1 != size2) return false;
    if (next == classes) return true;
    classes = next;
  }
  return true;
}

class Matcher {
 public:
  Matcher(const Geometry& g1, const Geometry& g2, std::vector<std::uint32_t> c1, std::vector<std::uint32_t> c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)) {
    const std::size_t n = g1.size();
    map_.assign(n, unset);
    used_.assign(n, false);
    // Visit vertices so that each one after the first in a component has an
    // already-placed neighbor.
    std::vector<bool> placed(n, false);
    for (std::uint32_t root = 0; root < n; ++root) {
      if (placed[root]) continue;
      placed[root] = true;
      std::size_t head = order_.size();
      order_.push_back(root);
      anchor_.push_back(unset);
      while (head < order_.size()) {
        auto v = order_[head++];
        for (auto w : g1.adjacency[v])
          if (!placed[w]) {
            placed[w] = true;
            order_.push_back(w);
            anchor_.push_back(v);
          }
      }
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const auto v = order_[depth];
    auto attempt = [&](std::uint32_t w) {
      if (used_[w] || c2_[w] != c1_[v]) return false;
      for (std::size_t k = 0; k < depth; ++k) {
        const auto u = order_[k];
        if (g1_.incident(v, u) != g2_.incident(w, map_[u])) return false;
      }
      map_[v] = w;
      used_[w] = true;
      if (run(depth + 1)) return true;
      map_[v] = unset;
      used_[w] = false;
      return false;
    };
    if (anchor_[depth] != unset) {
      for (auto w : g2_.adjacency[map_[anchor_[depth]]])
        if (attempt(w)) return true;
    } else {
      for (std::uint32_t w = 0; w < g2_.size(); ++w)
        if (attempt(w)) return true;
    }
    return false;
  }

  const std::vector<std::uint32_t>& mapping() const { return map_; }

 private:
  static constexpr auto unset = static_cast<std::uint32_t>(-1);
  const Geometry& g1_;
  const Geometry& g2_;
  std::vector<std::uint32_t> c1_, c2_;
  std::vector<std::uint32_t> map_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> anchor_;
};

std::optional<std::vector<std::uint32_t>> try_types(const Geometry& g1, const Geometry& g2,
                                                    const std::vector<std::uint32_t>& type_map) {
  std::vector<std::uint32_t> c1(g1.size()), c2(g2.size());
  for (std::uint32_t v = 0; v < g1.size(); ++v) c1[v] = type_map[g1.type_of[v]];
  for (std::uint32_t v = 0; v < g2.size(); ++v) c2[v] = g2.type_of[v];
  if (!refine(g1, g2, c1, c2)) return std::nullopt;
  Matcher m(g1, g2, std::move(c1), std::move(c2));
  if (!m.run()) return std::nullopt;
  return m.mapping();
}

}  // namespace

std::optional<std::vector<std::uint32_t>> colored_isomorphic(const Geometry& g1, const Geometry& g2,
                                                             const std::optional<std::vector<std::uint32_t>>& type_map) {
  if (g1.size() > 10'000 || g2.size() > 10'000) throw CapExceeded("isomorphism search", 10'000, g1.size());
  if (g1.size() != g2.size() || g1.types.size() != g2.types.size()) return std::nullopt;
  if (g1.incidence_count() != g2.incidence_count()) return std::nullopt;
  const auto n1 = g1.counts();
  const auto n2 = g2.counts();
  if (type_map) {
    if (type_map->size() != g1.types.size())
      fail(ErrorCode::InvalidArgument, "type bijection has the wrong length");
    return try_types(g1, g2, *type_map);
  }
  std::vector<std::uint32_t> perm(g1.types.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool counts_match = true;
    for (std::size_t t = 0; t < perm.size(); ++t) counts_match = counts_match && n1[t] == n2[perm[t]];
    if (!counts_match) continue;
    if (auto m = try_types(g1, g2, perm)) return m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace geoforge
