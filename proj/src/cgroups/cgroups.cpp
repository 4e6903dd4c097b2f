#include "geoforge/cgroups.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"

namespace geoforge {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GroupPtr generated(const GeneratorSystem& s, TypeSet m) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (has_type(m, i)) gens.push_back(s.rho(i));
  return generated_by(s.group->arithmetic_ptr(), gens);
}

nlohmann::ordered_json label_list(const GeneratorSystem& s, TypeSet m) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (has_type(m, i)) out.push_back(s.label(i));
  return out;
}

GeneratorSystem sub_system(const GeneratorSystem& s, std::size_t from, std::size_t to) {
  std::vector<Generator> gens(s.group->generators().begin() + static_cast<std::ptrdiff_t>(from),
                              s.group->generators().begin() + static_cast<std::ptrdiff_t>(to));
  return GeneratorSystem{Group::make(s.group->arithmetic_ptr(), std::move(gens))};
}

CheckReport ip_full(const GeneratorSystem& s) {
  CheckReport r;
  r.property = "intersection";
  r.method = "full";
  const std::size_t rank = s.rank();
  const auto subsets = subsets_of(rank);
  std::map<TypeSet, GroupPtr> cache;
  auto sub = [&](TypeSet m) -> const GroupPtr& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, generated(s, m)).first;
    return it->second;
  };
  // Pairs in increasing |M| + |N|; nested pairs hold trivially.
  std::vector<std::pair<TypeSet, TypeSet>> pairs;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      TypeSet m = subsets[a], n = subsets[b];
      if ((m & n) == m || (m & n) == n) continue;
      pairs.emplace_back(m, n);
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return type_count(x.first) + type_count(x.second) < type_count(y.first) + type_count(y.second);
  });
  for (const auto& [m, n] : pairs) {
    const auto& gm = sub(m);
    const auto& gn = sub(n);
    auto meet = intersect(*gm, *gn);
    const auto& inner = sub(m & n);
    if (meet->order() == inner->order()) continue;
    r.pass = false;
    r.witness = {{"M", label_list(s, m)}, {"N", label_list(s, n)}};
    for (const auto& g : meet->elements())
      if (!inner->contains(g)) {
        r.witness["g"] = g.to_string();
        r.witness_elements = {g};
        break;
      }
    return r;
  }
  return r;
}

CheckReport ip_reduced(const GeneratorSystem& s) {
  const std::size_t rank = s.rank();
  if (rank < 3) fail(ErrorCode::RankTooSmall, "reduced intersection check needs rank >= 3");
  if (!check_string_property(s).pass) {
    auto r = ip_full(s);
    r.method = "full (not a string group)";
    return r;
  }
  CheckReport r;
  r.property = "intersection";
  r.method = "reduced2E16";
  auto first = sub_system(s, 1, rank);      // G_0
  auto last = sub_system(s, 0, rank - 1);   // G_{r-1}
  for (const auto* part : {&first, &last}) {
    auto sub = part->rank() >= 3 ? ip_reduced(*part) : ip_full(*part);
    if (!sub.pass) {
      r.pass = false;
      r.witness = {{"subgroup", part == &first ? "G_0" : "G_{r-1}"}, {"failure", sub.witness}};
      return r;
    }
  }
  auto meet = intersect(*first.group, *last.group);
  auto middle = generated(s, (single_type(rank - 1) - 1) & ~TypeSet{1});
  r.details = {{"G_0 n G_{r-1}", meet->order()}, {"middle", middle->order()}};
  if (meet->order() != middle->order()) {
    r.pass = false;
    r.witness = {{"G_0 n G_{r-1}", meet->order()}, {"expected", middle->order()}};
    for (const auto& g : meet->elements())
      if (!middle->contains(g)) {
        r.witness["g"] = g.to_string();
        r.witness_elements = {g};
        break;
      }
  }
  return r;
}

Permutation flip_all(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t k = 1; k <= r; ++k) swaps.emplace_back(2 * k - 1, 2 * k);
  return Permutation::from_transpositions(2 * r, swaps);
}

// (2i-1,2i+1)(2i,2i+2)
Permutation plain_step(std::size_t r, std::size_t i) {
  return Permutation::from_transpositions(2 * r, {{2 * i - 1, 2 * i + 1}, {2 * i, 2 * i + 2}});
}

// Signed variant: swaps (i,e) with (i+1,-e) and flips every other pair.
Permutation signed_step(std::size_t r, std::size_t i) {
  std::vector<std::pair<std::size_t, std::size_t>> swaps{{2 * i - 1, 2 * i + 2}, {2 * i, 2 * i + 1}};
  for (std::size_t k = 1; k <= r; ++k)
    if (k != i && k != i + 1) swaps.emplace_back(2 * k - 1, 2 * k);
  return Permutation::from_transpositions(2 * r, swaps);
}

}  // namespace

GeneratorSystem generator_system(std::size_t degree, const std::vector<Permutation>& rhos,
                                 std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < rhos.size(); ++i) labels.push_back(std::to_string(i));
  if (labels.size() != rhos.size()) fail(ErrorCode::InvalidArgument, "one label per generator is required");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < rhos.size(); ++i) gens.push_back({labels[i], rhos[i]});
  return generator_system(Group::permutations(degree, std::move(gens)));
}

GeneratorSystem generator_system(GroupPtr group) {
  for (const auto& g : group->generators())
    if (group->element_order(g.element) != 2)
      fail(ErrorCode::InvalidArgument, "generator " + g.label + " = " + g.element.to_string() +
                                           " is not an involution");
  return GeneratorSystem{std::move(group)};
}

CheckReport check_string_property(const GeneratorSystem& s) {
  const auto start = Clock::now();
  CheckReport r;
  r.property = "string";
  r.method = "commuting";
  for (std::size_t i = 0; i < s.rank() && r.pass; ++i)
    for (std::size_t j = i + 2; j < s.rank(); ++j) {
      Element p = s.group->multiply(s.rho(i), s.rho(j));
      if (s.group->multiply(p, p) == s.group->identity()) continue;
      r.pass = false;
      r.witness = {{"i", s.label(i)}, {"j", s.label(j)}, {"order", s.group->element_order(p)}};
      break;
    }
  r.ms = elapsed_ms(start);
  return r;
}

CheckReport check_intersection_property(const GeneratorSystem& s, IpMode mode) {
  const auto start = Clock::now();
  CheckReport r = mode == IpMode::Full ? ip_full(s) : ip_reduced(s);
  r.ms = elapsed_ms(start);
  return r;
}

bool is_linear(std::size_t nodes, const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& edges) {
  std::vector<std::size_t> degree(nodes, 0);
  std::vector<std::size_t> parent(nodes);
  for (std::size_t k = 0; k < nodes; ++k) parent[k] = k;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [e, label] : edges) {
    if (++degree[e.first] > 2 || ++degree[e.second] > 2) return false;
    auto a = find(e.first), b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

CoxeterDiagram coxeter_diagram(const GeneratorSystem& s) {
  CoxeterDiagram d;
  for (std::size_t i = 0; i < s.rank(); ++i) d.nodes.push_back(s.label(i));
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = i + 1; j < s.rank(); ++j) {
      auto o = s.group->element_order(s.group->multiply(s.rho(i), s.rho(j)));
      if (o >= 3) d.edges[{i, j}] = o;
    }
  d.linear = is_linear(d.nodes.size(), d.edges);
  return d;
}

std::string CoxeterDiagram::to_string() const {
  std::ostringstream os;
  os << "nodes " << nodes.size() << ";";
  for (const auto& [e, label] : edges) os << " " << nodes[e.first] << "-" << label << "-" << nodes[e.second];
  os << (linear ? " (linear)" : " (non-linear)");
  return os.str();
}

PermRepGraph permrep_graph_of(const GeneratorSystem& s) {
  PermRepGraph g;
  g.vertices = s.group->arithmetic().degree();
  g.labels = s.rank();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const auto& p = s.rho(i).perm();
    for (std::size_t a = 1; a <= p.degree(); ++a) {
      std::size_t b = p.image(a);
      if (a < b) g.edges.emplace_back(a, b, i);
    }
  }
  return g;
}

std::string emit_permrep(const PermRepGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertices << "\n";
  for (std::size_t i = 0; i < g.labels; ++i) {
    os << i << ":";
    for (const auto& [a, b, l] : g.edges)
      if (l == i) os << " " << a << "-" << b;
    os << "\n";
  }
  return os.str();
}

GeneratorSystem parse_permrep_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> edges;
  auto parse_int = [&](const std::string& tok) -> std::size_t {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
    return std::stoul(tok);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_n) {
      auto eq = line.find('=');
      if (eq == std::string::npos || line.substr(0, eq) != "n")
        fail(ErrorCode::ParseError, "line 1: expected 'n=<vertices>'");
      n = parse_int(line.substr(eq + 1));
      have_n = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": missing ':'");
    std::size_t label = parse_int(line.substr(0, colon));
    if (edges.count(label)) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": label repeated");
    auto& list = edges[label];
    std::istringstream toks(line.substr(colon + 1));
    std::string tok;
    while (toks >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad edge '" + tok + "'");
      std::size_t a = parse_int(tok.substr(0, dash)), b = parse_int(tok.substr(dash + 1));
      if (a < 1 || a > n || b < 1 || b > n)
        fail(ErrorCode::PointOutOfRange, "edge " + tok + " leaves 1.." + std::to_string(n));
      list.emplace_back(a, b);
    }
  }
  if (!have_n) fail(ErrorCode::ParseError, "empty permutation representation graph");
  std::vector<Permutation> rhos;
  std::size_t expected = 0;
  for (const auto& [label, list] : edges) {
    if (label != expected++) fail(ErrorCode::ParseError, "labels must be 0,1,2,... without gaps");
    std::vector<bool> used(n + 1, false);
    for (const auto& [a, b] : list) {
      if (a == b || used[a] || used[b])
        fail(ErrorCode::NotAMatching, "edges labeled " + std::to_string(label) + " do not form a matching");
      used[a] = used[b] = true;
    }
    rhos.push_back(Permutation::from_transpositions(n, list));
  }
  return generator_system(n, rhos);
}

std::vector<std::string> builtin_family_ids() { return {"T9-1", "T9-2", "T5-13", "T5-14", "T5-15", "T5-16"}; }

GeneratorSystem builtin_family(const std::string& id, std::size_t r) {
  auto ids = builtin_family_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) fail(ErrorCode::UnknownFamily, "unknown family '" + id + "'");
  if (r < 3) fail(ErrorCode::RankTooSmall, "family " + id + " needs r >= 3");
  const bool signed_steps = id == "T9-2" || id == "T5-15" || id == "T5-16";
  std::vector<Permutation> rhos;
  if (id == "T9-1" || id == "T9-2") {
    rhos.push_back(flip_all(r));
  } else if (id == "T5-13" || id == "T5-15") {
    rhos.push_back(Permutation::from_transpositions(2 * r, {{1, 2}}));
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    for (std::size_t k = 2; k <= r; ++k) swaps.emplace_back(2 * k - 1, 2 * k);
    rhos.push_back(Permutation::from_transpositions(2 * r, swaps));
  }
  for (std::size_t i = 1; i < r; ++i) rhos.push_back(signed_steps ? signed_step(r, i) : plain_step(r, i));
  return generator_system(2 * r, rhos);
}

CosetSystem cgroup_system(const GeneratorSystem& s) {
  std::vector<std::string> types;
  std::vector<GroupPtr> parabolics;
  const TypeSet all = single_type(s.rank()) - 1;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    types.push_back(s.label(i));
    parabolics.push_back(generated(s, all & ~single_type(i)));
  }
  return CosetSystem(s.group, std::move(types), std::move(parabolics));
}

Halving halve(const GeneratorSystem& s, std::size_t a, std::size_t b) {
  if (a == b || a >= s.rank() || b >= s.rank()) fail(ErrorCode::InvalidArgument, "halve needs two distinct generator indices");
  auto gens = s.group->generators();
  const auto& g = *s.group;
  gens[a].element = g.multiply(g.multiply(s.rho(a), s.rho(b)), s.rho(a));
  Halving h;
  h.system = generator_system(Group::make(s.group->arithmetic_ptr(), std::move(gens)));
  h.order = h.system.group->order();
  h.original_order = s.group->order();
  return h;
}

GeneratorSystem search_rank3_polytope(const GroupPtr& g, const Element& t) {
  const std::uint64_t cap = caps().involutions;
  if (g->order() > cap) throw CapExceeded("involution enumeration", cap, g->order());
  if (!g->contains(t) || g->element_order(t) != 2)
    fail(ErrorCode::InvalidArgument, "t = " + t.to_string() + " is not an involution of the group");
  std::vector<Element> invs;
  for (const auto& x : g->elements())
    if (g->element_order(x) == 2) invs.push_back(x);
  const std::uint64_t order = g->order();
  auto o = [&](const Element& x, const Element& y) { return g->element_order(g->multiply(x, y)); };
  for (const auto& inv1 : invs) {
    if (o(inv1, t) != 2) continue;
    for (const auto& inv0 : invs) {
      if (o(inv0, t) < 3 || o(inv0, inv1) % 2 == 0) continue;
      std::vector<Generator> gens{{"0", t}, {"1", inv0}, {"2", inv1}};
      auto k = Group::make(g->arithmetic_ptr(), gens);
      if (k->order() != order) continue;
      GeneratorSystem s{k};
      if (check_intersection_property(s, IpMode::Full).pass) return s;
    }
  }
  fail(ErrorCode::NotFound, "no polytope triple through t = " + t.to_string());
}

}  // namespace geoforge
