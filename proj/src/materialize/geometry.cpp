#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

namespace geoforge {

bool Geometry::incident(std::uint32_t a, std::uint32_t b) const {
  const auto& adj = adjacency[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::size_t> Geometry::counts() const {
  std::vector<std::size_t> out(types.size(), 0);
  for (auto t : type_of) ++out[t];
  return out;
}

std::size_t Geometry::incidence_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency) total += adj.size();
  return total / 2;
}

std::uint32_t Geometry::add(std::uint32_t type, std::string name) {
  type_of.push_back(type);
  names.push_back(std::move(name));
  adjacency.emplace_back();
  return static_cast<std::uint32_t>(type_of.size() - 1);
}

void Geometry::connect(std::uint32_t a, std::uint32_t b) {
  if (a == b) return;
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

void Geometry::finish() {
  for (auto& adj : adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

std::uint32_t Materialized::act(const Element& g, std::uint32_t e) const {
  const std::uint32_t t = geometry.type_of[e];
  const std::size_t x = tables->left_multiply(g, coset_label[e]);
  return element_of_label[t][tables->labels(single_type(t))[x]];
}

Materialized materialize(const CosetSystem& sys) {
  const std::uint64_t cap = caps().geometry;
  std::uint64_t total = 0;
  for (const auto& p : sys.maximals()) total += sys.group()->order() / p->order();
  if (total > cap) throw CapExceeded("geometry elements", cap, total);

  Materialized m;
  auto tables = std::make_shared<CosetTables>(sys);
  m.tables = tables;
  auto& geo = m.geometry;
  geo.types = sys.types();
  const std::size_t n = tables->size();
  constexpr auto none = static_cast<std::uint32_t>(-1);
  m.element_of_label.assign(sys.rank(), std::vector<std::uint32_t>(n, none));
  for (std::size_t t = 0; t < sys.rank(); ++t) {
    const auto& label = tables->labels(single_type(t));
    for (std::size_t x = 0; x < n; ++x) {
      if (label[x] != x) continue;  // x is the minimum of its coset
      const auto& rep = tables->elements()[x];
      auto id = geo.add(static_cast<std::uint32_t>(t), sys.types()[t] + ":" + rep.to_string());
      m.representatives.push_back(rep);
      m.coset_label.push_back(static_cast<std::uint32_t>(x));
      m.element_of_label[t][x] = id;
    }
  }
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    const auto& li = tables->labels(single_type(i));
    for (std::size_t j = i + 1; j < sys.rank(); ++j) {
      const auto& lj = tables->labels(single_type(j));
      // xG_i meets yG_j iff some group element lies in both.
      for (std::size_t z = 0; z < n; ++z) geo.connect(m.element_of_label[i][li[z]], m.element_of_label[j][lj[z]]);
    }
  }
  geo.finish();
  return m;
}

bool cosets_intersect(const CosetSystem& sys, std::size_t i, const Element& x, std::size_t j, const Element& y) {
  // xG_i meets yG_j iff x^-1 y lies in G_i G_j.
  const auto& g = *sys.group();
  const auto& gi = *sys.maximal(i);
  const auto& gj = *sys.maximal(j);
  const Element d = g.multiply(g.inverse(x), y);
  if (gi.order() <= gj.order()) {
    for (const auto& h : gi.elements())
      if (gj.contains(g.multiply(g.inverse(h), d))) return true;
  } else {
    for (const auto& k : gj.elements())
      if (gi.contains(g.multiply(d, g.inverse(k)))) return true;
  }
  return false;
}

namespace {

void extend_flags(const Geometry& geo, const std::vector<std::uint32_t>& order, std::size_t depth,
                  std::vector<std::uint32_t>& flag, std::vector<std::vector<std::uint32_t>>& out) {
  if (depth == order.size()) {
    auto sorted = flag;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  const std::uint32_t t = order[depth];
  auto consider = [&](std::uint32_t e) {
    if (geo.type_of[e] != t) return;
    for (auto f : flag)
      if (!geo.incident(e, f)) return;
    flag.push_back(e);
    extend_flags(geo, order, depth + 1, flag, out);
    flag.pop_back();
  };
  if (flag.empty()) {
    for (std::uint32_t e = 0; e < geo.size(); ++e) consider(e);
  } else {
    for (auto e : geo.adjacency[flag.front()]) consider(e);
  }
}

bool connected_subgraph(const Geometry& geo, const std::vector<std::uint32_t>& vertices) {
  if (vertices.size() <= 1) return true;
  std::set<std::uint32_t> inside(vertices.begin(), vertices.end());
  std::set<std::uint32_t> seen{vertices.front()};
  std::deque<std::uint32_t> queue{vertices.front()};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : geo.adjacency[v])
      if (inside.count(w) && seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == inside.size();
}

TypeSet type_set_of(const Geometry& geo, const std::vector<std::uint32_t>& flag) {
  TypeSet s = 0;
  for (auto e : flag) s |= single_type(geo.type_of[e]);
  return s;
}

std::vector<std::uint32_t> residue(const Geometry& geo, const std::vector<std::uint32_t>& flag) {
  const TypeSet used = type_set_of(geo, flag);
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < geo.size(); ++e) {
    if (has_type(used, geo.type_of[e])) continue;
    bool ok = true;
    for (auto f : flag) ok = ok && geo.incident(e, f);
    if (ok) out.push_back(e);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::uint64_t orbit_count(const Materialized& m, const std::vector<std::vector<std::uint32_t>>& element_perms,
                          TypeSet types) {
  auto flags = flags_of_type(m.geometry, types);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t k = 0; k < flags.size(); ++k) index.emplace(flags[k], k);
  UnionFind uf(flags.size());
  std::uint64_t orbits = flags.size();
  for (const auto& perm : element_perms)
    for (std::size_t k = 0; k < flags.size(); ++k) {
      std::vector<std::uint32_t> image;
      for (auto e : flags[k]) image.push_back(perm[e]);
      std::sort(image.begin(), image.end());
      if (uf.unite(k, index.at(image))) --orbits;
    }
  return orbits;
}

std::vector<std::vector<std::uint32_t>> generator_perms(const Materialized& m) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& g : m.tables->system().group()->generators()) {
    std::vector<std::uint32_t> perm(m.geometry.size());
    for (std::uint32_t e = 0; e < m.geometry.size(); ++e) perm[e] = m.act(g.element, e);
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> flags_of_type(const Geometry& geo, TypeSet types) {
  std::vector<std::uint32_t> order;
  for (std::uint32_t t = 0; t < geo.types.size(); ++t)
    if (has_type(types, t)) order.push_back(t);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> flag;
  if (order.empty()) {
    out.emplace_back();
    return out;
  }
  extend_flags(geo, order, 0, flag, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> chambers(const Geometry& geo) {
  return flags_of_type(geo, single_type(geo.types.size()) - 1);
}

DirectReport check_geometry_direct(const Geometry& geo) {
  if (geo.types.size() > caps().rank_guard)
    fail(ErrorCode::RankGuard, "rank " + std::to_string(geo.types.size()) + " exceeds the rank guard");
  DirectReport r;
  const std::size_t rank = geo.types.size();
  const TypeSet all = single_type(rank) - 1;
  bool same_type_incidence = false;
  for (std::uint32_t e = 0; e < geo.size(); ++e)
    for (auto f : geo.adjacency[e]) same_type_incidence = same_type_incidence || geo.type_of[e] == geo.type_of[f];

  std::vector<std::vector<std::uint32_t>> every_flag;
  for (TypeSet s = 0; s <= all; ++s) {
    auto flags = flags_of_type(geo, s);
    every_flag.insert(every_flag.end(), flags.begin(), flags.end());
  }
  r.is_geometry = !same_type_incidence;
  r.residually_connected = true;
  r.firm = true;
  r.thin = true;
  for (const auto& flag : every_flag) {
    const std::size_t corank = rank - flag.size();
    if (corank == 0) {
      ++r.chamber_count;
      continue;
    }
    auto res = residue(geo, flag);
    if (res.empty()) r.is_geometry = false;
    if (corank >= 2 && !connected_subgraph(geo, res)) r.residually_connected = false;
    if (corank == 1) {
      r.firm = r.firm && res.size() >= 2;
      r.thin = r.thin && res.size() == 2;
    }
  }
  std::vector<std::uint32_t> everything(geo.size());
  std::iota(everything.begin(), everything.end(), 0);
  r.connected = connected_subgraph(geo, everything);
  return r;
}

std::uint64_t chamber_orbits(const Materialized& m) {
  return orbit_count(m, generator_perms(m), single_type(m.geometry.types.size()) - 1);
}

std::vector<std::uint64_t> flag_orbit_counts(const Materialized& m) {
  const std::size_t rank = m.geometry.types.size();
  if (rank > caps().rank_guard) fail(ErrorCode::RankGuard, "rank exceeds the rank guard");
  auto perms = generator_perms(m);
  std::vector<std::uint64_t> out(std::size_t{1} << rank, 1);
  for (TypeSet s = 1; s < out.size(); ++s) out[s] = orbit_count(m, perms, s);
  return out;
}

Geometry cube_reference() {
  Geometry geo;
  geo.types = {"0", "1", "2"};
  auto bits = [](unsigned v) {
    return std::to_string((v >> 2) & 1u) + std::to_string((v >> 1) & 1u) + std::to_string(v & 1u);
  };
  std::vector<std::uint32_t> vertex(8);
  for (unsigned v = 0; v < 8; ++v) vertex[v] = geo.add(0, "v" + bits(v));
  struct Edge {
    unsigned a, b;
    std::uint32_t id;
  };
  std::vector<Edge> edges;
  for (unsigned v = 0; v < 8; ++v)
    for (unsigned k = 0; k < 3; ++k) {
      unsigned w = v ^ (1u << k);
      if (w < v) continue;
      auto id = geo.add(1, "e" + bits(v) + "-" + bits(w));
      geo.connect(id, vertex[v]);
      geo.connect(id, vertex[w]);
      edges.push_back({v, w, id});
    }
  for (unsigned k = 0; k < 3; ++k)
    for (unsigned side = 0; side < 2; ++side) {
      auto id = geo.add(2, "f" + std::to_string(k) + std::to_string(side));
      auto on = [&](unsigned v) { return ((v >> k) & 1u) == side; };
      for (unsigned v = 0; v < 8; ++v)
        if (on(v)) geo.connect(id, vertex[v]);
      for (const auto& e : edges)
        if (on(e.a) && on(e.b)) geo.connect(id, e.id);
    }
  geo.finish();
  return geo;
}

Geometry join(const std::vector<Geometry>& geos) {
  Geometry out;
  std::set<std::string> seen;
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> component;
  for (const auto& g : geos) {
    const auto type_base = static_cast<std::uint32_t>(out.types.size());
    for (const auto& t : g.types) {
      if (!seen.insert(t).second) fail(ErrorCode::TypeLabelCollision, "type label '" + t + "' appears twice");
      out.types.push_back(t);
    }
    offset.push_back(static_cast<std::uint32_t>(out.size()));
    for (std::uint32_t e = 0; e < g.size(); ++e) {
      out.add(type_base + g.type_of[e], g.names[e]);
      component.push_back(static_cast<std::uint32_t>(offset.size() - 1));
    }
  }
  for (std::size_t c = 0; c < geos.size(); ++c)
    for (std::uint32_t e = 0; e < geos[c].size(); ++e)
      for (auto f : geos[c].adjacency[e])
        if (e < f) out.connect(offset[c] + e, offset[c] + f);
  for (std::uint32_t a = 0; a < out.size(); ++a)
    for (std::uint32_t b = a + 1; b < out.size(); ++b)
      if (component[a] != component[b]) out.connect(a, b);
  out.finish();
  return out;
}

}  // namespace geoforge
