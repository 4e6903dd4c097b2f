#include <chrono>
#include <map>
#include <set>

#include "geoforge/cosetgeom.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

namespace geoforge {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckReport start_report(std::string property, std::string method) {
  CheckReport r;
  r.property = std::move(property);
  r.method = std::move(method);
  return r;
}

std::vector<std::uint32_t> members(const CosetTables& t, TypeSet j) {
  const auto& label = t.labels(j);
  const std::uint32_t id = label[t.index_of(t.system().group()->identity())];
  std::vector<std::uint32_t> out;
  for (std::size_t x = 0; x < label.size(); ++x)
    if (label[x] == id) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

CheckReport ft_product(const CosetSystem& sys) {
  auto r = start_report("FT", "product");
  std::map<std::pair<std::size_t, std::size_t>, ElementSet> pair_products;
  auto pair_product = [&](std::size_t j, std::size_t i) -> const ElementSet& {
    auto key = std::make_pair(j, i);
    auto it = pair_products.find(key);
    if (it == pair_products.end())
      it = pair_products.emplace(key, product_set(*sys.maximal(j), *sys.maximal(i))).first;
    return it->second;
  };
  for (TypeSet j : subsets_of(sys.rank())) {
    if (type_count(j) < 2 || j == sys.all_types()) continue;
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      if (has_type(j, i)) continue;
      ElementSet lhs = product_set(*sys.parabolic(j), *sys.maximal(i));
      std::optional<ElementSet> rhs;
      for (std::size_t k = 0; k < sys.rank(); ++k) {
        if (!has_type(j, k)) continue;
        rhs = rhs ? rhs->intersection(pair_product(k, i)) : pair_product(k, i);
      }
      if (lhs == *rhs) continue;
      for (const auto& g : *rhs) {
        if (lhs.contains(g)) continue;
        r.pass = false;
        r.witness = {{"J", sys.format(j)}, {"i", sys.types()[i]}, {"g", g.to_string()}};
        r.witness_elements = {g};
        return r;
      }
    }
  }
  return r;
}

CheckReport ft_triple(const CosetSystem& sys) {
  auto r = start_report("FT", "triple");
  CosetTables tables(sys);
  const std::size_t n = tables.size();
  std::vector<TypeSet> subsets;
  for (TypeSet s : subsets_of(sys.rank()))
    if (s != 0) subsets.push_back(s);
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    const TypeSet j = subsets[a];
    const auto in_j = members(tables, j);
    for (std::size_t b = a; b < subsets.size(); ++b) {
      const TypeSet h = subsets[b];
      const auto& lh = tables.labels(h);
      for (std::size_t c = b; c < subsets.size(); ++c) {
        const TypeSet k = subsets[c];
        const auto& lk = tables.labels(k);
        // G_J, gG_H, hG_K with gG_H, hG_K meeting G_J and meeting each other.
        std::set<std::uint32_t> meet_h, meet_k;
        std::set<std::pair<std::uint32_t, std::uint32_t>> triple;
        for (auto x : in_j) {
          meet_h.insert(lh[x]);
          meet_k.insert(lk[x]);
          triple.emplace(lh[x], lk[x]);
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (!meet_h.count(lh[y]) || !meet_k.count(lk[y])) continue;
          if (triple.count({lh[y], lk[y]})) continue;
          const auto& g = tables.elements()[lh[y]];
          const auto& hh = tables.elements()[lk[y]];
          r.pass = false;
          r.witness = {{"J", sys.format(j)}, {"H", sys.format(h)}, {"K", sys.format(k)},
                       {"f", "e"},           {"g", g.to_string()}, {"h", hh.to_string()}};
          r.witness_elements = {g, hh};
          return r;
        }
      }
    }
  }
  return r;
}

CheckReport ft_geometry(const CosetSystem& sys) {
  auto r = start_report("FT", "geometry");
  auto m = materialize(sys);
  auto counts = flag_orbit_counts(m);
  nlohmann::ordered_json orbits = nlohmann::ordered_json::object();
  for (TypeSet s : subsets_of(sys.rank())) {
    if (s == 0) continue;
    orbits[sys.format(s)] = counts[s];
    if (counts[s] != 1 && r.pass) {
      r.pass = false;
      r.witness = {{"flag_type", sys.format(s)}, {"orbits", counts[s]}};
    }
  }
  r.details = {{"flag_orbits", orbits}, {"chamber_orbits", counts[sys.all_types()]}};
  return r;
}

std::uint64_t join_order(const CosetSystem& sys, const std::vector<TypeSet>& parts) {
  std::vector<GroupPtr> groups;
  for (TypeSet p : parts) groups.push_back(sys.parabolic(p));
  return join_subgroups(groups)->order();
}

CheckReport rc_generation(const CosetSystem& sys, bool pairs) {
  auto r = start_report("RC", pairs ? "RC2" : "RC1");
  for (TypeSet j : subsets_of(sys.rank())) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < sys.rank(); ++k)
      if (!has_type(j, k)) rest.push_back(k);
    if (rest.size() < 2) continue;
    const std::uint64_t want = sys.parabolic(j)->order();
    std::vector<std::vector<std::size_t>> families;
    if (pairs) {
      for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) families.push_back({rest[a], rest[b]});
    } else {
      families.push_back(rest);
    }
    for (const auto& fam : families) {
      std::vector<TypeSet> parts;
      for (auto k : fam) parts.push_back(j | single_type(k));
      const std::uint64_t got = join_order(sys, parts);
      if (got == want) continue;
      r.pass = false;
      nlohmann::ordered_json gen = nlohmann::ordered_json::array();
      for (auto k : fam) gen.push_back(sys.types()[k]);
      r.witness = {{"J", sys.format(j)}, {"generated_by", gen}, {"order", got}, {"expected", want}};
      return r;
    }
  }
  return r;
}

CheckReport rc_intersection(const CosetSystem& sys) {
  auto r = start_report("RC", "intersection");
  const auto subsets = subsets_of(sys.rank());
  // G^J = <G_I, G^j : j in J>; G^{} is taken to be G_I.
  std::map<TypeSet, GroupPtr> upper;
  for (TypeSet j : subsets) {
    std::vector<GroupPtr> parts{sys.borel()};
    for (std::size_t k = 0; k < sys.rank(); ++k)
      if (has_type(j, k)) parts.push_back(sys.minimal(k));
    upper[j] = j == 0 ? sys.borel() : join_subgroups(parts);
  }
  const std::uint64_t top = upper[sys.all_types()]->order();
  if (top != sys.group()->order()) {
    r.pass = false;
    r.witness = {{"J", sys.format(sys.all_types())}, {"order", top}, {"expected", sys.group()->order()}};
    return r;
  }
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      const TypeSet j = subsets[a], k = subsets[b];
      if ((j & k) == j || (j & k) == k) continue;  // nested pairs hold trivially
      auto meet = intersect(*upper[j], *upper[k]);
      const std::uint64_t want = upper[j & k]->order();
      if (meet->order() == want) continue;
      r.pass = false;
      r.witness = {{"J", sys.format(j)}, {"K", sys.format(k)}, {"order", meet->order()}, {"expected", want}};
      return r;
    }
  return r;
}

}  // namespace

std::string to_string(FtMethod m) {
  switch (m) {
    case FtMethod::Product: return "product";
    case FtMethod::Triple: return "triple";
    case FtMethod::Geometry: return "geometry";
  }
  return {};
}

std::string to_string(RcVariant v) {
  switch (v) {
    case RcVariant::RC1: return "RC1";
    case RcVariant::RC2: return "RC2";
    case RcVariant::Intersection: return "intersection";
  }
  return {};
}

CheckReport check_flag_transitive(const CosetSystem& sys, FtMethod method) {
  const auto start = Clock::now();
  CheckReport r;
  switch (method) {
    case FtMethod::Product: r = ft_product(sys); break;
    case FtMethod::Triple: r = ft_triple(sys); break;
    case FtMethod::Geometry: r = ft_geometry(sys); break;
  }
  r.ms = elapsed_ms(start);
  return r;
}

CheckReport check_residually_connected(const CosetSystem& sys, RcVariant variant) {
  const auto start = Clock::now();
  CheckReport r = variant == RcVariant::Intersection ? rc_intersection(sys)
                                                     : rc_generation(sys, variant == RcVariant::RC2);
  r.ms = elapsed_ms(start);
  return r;
}

std::pair<CheckReport, CheckReport> check_firm_thin(const CosetSystem& sys, bool waive_ft) {
  const auto start = Clock::now();
  auto firm = start_report("FIRM", "index");
  auto thin = start_report("THIN", "index");
  bool conditional = waive_ft;
  if (!waive_ft) conditional = !check_flag_transitive(sys, FtMethod::Product).pass;
  firm.conditional = thin.conditional = conditional;
  const std::uint64_t borel = sys.borel()->order();
  nlohmann::ordered_json indices = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    const std::uint64_t index = sys.minimal(i)->order() / borel;
    indices[sys.types()[i]] = index;
    if (index < 2 && firm.pass) {
      firm.pass = false;
      firm.witness = {{"type", sys.types()[i]}, {"index", index}};
    }
    if (index != 2 && thin.pass) {
      thin.pass = false;
      thin.witness = {{"type", sys.types()[i]}, {"index", index}};
    }
  }
  firm.details = thin.details = {{"indices", indices}};
  firm.ms = thin.ms = elapsed_ms(start);
  return {firm, thin};
}

CheckReport check_product_of_intersections(const CosetSystem& sys) {
  const auto start = Clock::now();
  auto r = start_report("product-of-intersections", "tables");
  CosetTables tables(sys);
  const auto subsets = subsets_of(sys.rank());
  std::map<TypeSet, std::vector<std::uint32_t>> inside;
  for (TypeSet s : subsets) inside[s] = members(tables, s);
  for (TypeSet j : subsets) {
    const auto& in_j = inside[j];
    for (std::size_t b = 0; b < subsets.size() && r.pass; ++b)
      for (std::size_t c = b; c < subsets.size(); ++c) {
        const TypeSet h = subsets[b], k = subsets[c];
        // x in G_H G_K iff xG_K meets G_H.
        const auto& lk = tables.labels(k);
        std::set<std::uint32_t> hk;
        for (auto y : inside[h]) hk.insert(lk[y]);
        // x in (G_J n G_H)(G_J n G_K) iff xG_{JuK} meets G_{JuH}.
        const auto& ljk = tables.labels(j | k);
        std::set<std::uint32_t> lhs;
        for (auto y : inside[j | h]) lhs.insert(ljk[y]);
        for (auto x : in_j) {
          const bool in_rhs = hk.count(lk[x]) > 0;
          const bool in_lhs = lhs.count(ljk[x]) > 0;
          if (in_rhs == in_lhs) continue;
          const auto& g = tables.elements()[x];
          r.pass = false;
          r.witness = {{"J", sys.format(j)}, {"H", sys.format(h)}, {"K", sys.format(k)}, {"g", g.to_string()}};
          r.witness_elements = {g};
          break;
        }
        if (!r.pass) break;
      }
    if (!r.pass) break;
  }
  r.ms = elapsed_ms(start);
  return r;
}

}  // namespace geoforge
