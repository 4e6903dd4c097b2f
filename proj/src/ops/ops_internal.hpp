#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/group.hpp"

namespace geoforge::detail {

/// f(e) = identity, f(x s) = step(f(x), s) over the Cayley graph of g. With
/// `check`, a second path to the same element must agree.
template <class V, class Step>
std::unordered_map<Element, V, ElementHash> bfs_table(const Group& g, V identity, Step step, bool check,
                                                      const std::string& what) {
  const auto& gens = g.generators();
  std::unordered_map<Element, V, ElementHash> table;
  std::vector<Element> queue{g.identity()};
  table.emplace(g.identity(), std::move(identity));
  const std::uint64_t cap = caps().closure;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element y = g.multiply(x, gens[s].element);
      V fy = step(table.at(x), s);
      auto it = table.find(y);
      if (it == table.end()) {
        table.emplace(y, std::move(fy));
        if (table.size() > cap) throw CapExceeded(what, cap, table.size());
        queue.push_back(std::move(y));
      } else if (check && it->second != fy) {
        fail(ErrorCode::NotAHomomorphism, what + ": two words for " + y.to_string() + " act differently");
      }
    }
  }
  return table;
}

}  // namespace geoforge::detail
