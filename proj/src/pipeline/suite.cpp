#include <chrono>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "geoforge/error.hpp"
#include "geoforge/examples.hpp"
#include "geoforge/materialize.hpp"
#include "geoforge/pipeline.hpp"
#include "geoforge/streetlight.hpp"

namespace geoforge {
namespace {

using json = nlohmann::ordered_json;

struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 25) failures.push_back(what);
  }
};

TypeSet mask(std::initializer_list<std::size_t> types) {
  TypeSet m = 0;
  for (auto t : types) m |= single_type(t);
  return m;
}

std::vector<std::size_t> maximal_orders(const CosetSystem& s) {
  std::vector<std::size_t> out;
  for (const auto& p : s.maximals()) out.push_back(p->order());
  return out;
}

std::uint64_t factorial(std::size_t r) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= r; ++k) f *= k;
  return f;
}

void tetrahedron_twist_criterion(Probe& p) {
  auto t = examples::tetrahedron_twist({0, 1});
  p.expect(maximal_orders(t.system) == std::vector<std::size_t>{4, 8, 6}, "parabolic orders are not (4, 8, 6)");
  auto m = materialize(t.system);
  p.expect(m.geometry.counts() == std::vector<std::size_t>{12, 6, 8}, "element counts are not (12, 6, 8)");
  p.expect(chambers(m.geometry).size() == 48, "chamber count is not 48");
  p.expect(check_flag_transitive(t.system, FtMethod::Product).pass, "FT fails");
  p.expect(check_residually_connected(t.system, RcVariant::RC1).pass, "RC1 fails");
  p.expect(check_firm_thin(t.system).second.pass, "THIN fails");
  p.expect(colored_isomorphic(m.geometry, cube_reference()).has_value(), "not isomorphic to the cube");
}

void orbit_tables_criterion(Probe& p) {
  auto ex = examples::block_action();
  p.expect(ex.beta.group()->order() == 6, "B is not of order 6");
  auto k = validate_action(ex.phi, ex.alpha);
  p.expect(k.orbits() == std::vector<TypeSet>{mask({0}), mask({1, 3, 5}), mask({2, 4, 6})}, "orbits differ");
  auto t = orbit_table(k, ex.beta, mask({1, 3, 5}), 1);
  const TypeSet b7 = 1, b8 = 2;
  p.expect(t.at(0) == mask({1}), "O_{} != {1}");
  p.expect(t.at(b8) == mask({1}), "O_{8} != {1}");
  p.expect(t.at(b7) == mask({1, 3}), "O_{7} != {1,3}");
  p.expect(t.at(b7 | b8) == mask({1, 3, 5}), "O_{7,8} != {1,3,5}");
  for (const auto& reps : {std::vector<std::size_t>{0, 1, 2}, std::vector<std::size_t>{0, 1, 6}})
    for (std::size_t o = 0; o < 3; ++o)
      p.expect(!orbit_table(k, ex.beta, k.orbits()[o], reps[o]).ipo_violation(),
               "IPO fails for representative " + std::to_string(reps[o]));
}

void families_criterion(Probe& p) {
  for (const std::string id : {"T9-1", "T9-2", "T5-13"})
    for (std::size_t r : {3, 4, 5}) {
      std::string tag = id + "(" + std::to_string(r) + ")";
      auto s = builtin_family(id, r);
      std::uint64_t expect = id == "T5-13" ? (std::uint64_t{1} << r) * factorial(r) : 2 * factorial(r);
      p.expect(s.group->order() == expect, tag + ": wrong order");
      p.expect(check_string_property(s).pass, tag + ": string property fails");
      p.expect(check_intersection_property(s).pass, tag + ": intersection property fails");
      if (id != "T5-13") continue;
      // the wreath construction, mapped onto the family by rho_i -> rho_i
      auto w = examples::c2_wreath(r);
      auto gens = examples::c2_wreath_generators(w);
      p.expect(gens.group->order() == w.system.group()->order(), tag + ": wreath generators do not generate");
      Homomorphism h(gens.group, s.group->arithmetic_ptr(), s.rhos());
      p.expect(h.is_injective(), tag + ": map onto the family is not injective");
      auto fam = cgroup_system(s);
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Element> image;
        for (const auto& x : w.system.maximal(i)->elements()) image.push_back(h(x));
        p.expect(ElementSet(image) == fam.maximal(i)->elements(),
                 tag + ": parabolic " + std::to_string(i) + " differs from the wreath parabolic");
      }
    }
  auto t4 = builtin_family("T5-14", 4);
  p.expect(t4.group->order() == 384, "T5-14(4): wrong order");
  p.expect(check_string_property(t4).pass && check_intersection_property(t4).pass, "T5-14(4) is not a string C-group");
  auto t3 = builtin_family("T5-14", 3);
  p.expect(t3.group->order() == 24, "T5-14(3): wrong order");
  p.expect(check_intersection_property(t3, IpMode::Reduced2E16).pass, "T5-14(3): reduced check fails");
  auto sys = cgroup_system(t3);
  auto rho1 = generated_by(t3.group->arithmetic_ptr(), {t3.rho(1)});
  p.expect(same_subgroup(*intersect(*sys.maximal(0), *sys.maximal(2)), *rho1), "T5-14(3): G_0 n G_2 != <rho_1>");
}

void checker_equivalence_criterion(Probe& p) {
  auto fixtures = examples::fixture_systems();
  p.expect(fixtures.size() >= 20, "fewer than 20 fixtures");
  std::size_t failures = 0;
  for (const auto& f : fixtures) {
    bool ft[3], rc[3];
    int k = 0;
    for (auto m : {FtMethod::Product, FtMethod::Triple, FtMethod::Geometry}) ft[k++] = check_flag_transitive(f.system, m).pass;
    k = 0;
    for (auto v : {RcVariant::RC1, RcVariant::RC2, RcVariant::Intersection})
      rc[k++] = check_residually_connected(f.system, v).pass;
    p.expect(ft[0] == ft[1] && ft[1] == ft[2], f.name + ": FT methods disagree");
    p.expect(rc[0] == rc[1] && rc[1] == rc[2], f.name + ": RC variants disagree");
    p.expect(check_product_of_intersections(f.system).pass == ft[0], f.name + ": product of intersections vs FT");
    if (f.designed_failure) {
      ++failures;
      p.expect(!ft[0], f.name + ": designed failure is flag-transitive");
    }
  }
  p.expect(failures >= 5, "fewer than 5 designed failures");
}

void parabolic_oracle_criterion(Probe& p) {
  auto run = [&](const std::string& tag, const Twist& t) {
    for (TypeSet j : subsets_of(t.system.rank()))
      p.expect(same_subgroup(*t.system.parabolic(j), *twist_parabolic_formula(t, j)),
               tag + ": parabolic " + t.system.format(j) + " differs from the formula");
  };
  run("tetrahedron twist", examples::tetrahedron_twist());
  run("wreath(3)", examples::c2_wreath(3));
  run("wreath(4)", examples::c2_wreath(4));
}

void m22_criterion(Probe& p) {
  auto s = generator_system(22, examples::m22());
  const auto& g = *s.group;
  p.expect(g.order() == 887040, "order is not 887040");
  p.expect(g.element_order(g.multiply(s.rho(0), s.rho(1))) == 4, "o(rho0 rho1) != 4");
  p.expect(g.element_order(g.multiply(s.rho(1), s.rho(2))) == 12, "o(rho1 rho2) != 12");
  p.expect(check_intersection_property(s).pass, "intersection property fails");
  auto h = halve(s, 2, 1);
  p.expect(h.order == 887040, "halving changes the order");
  p.expect(!coxeter_diagram(h.system).linear, "halved diagram is linear");
}

void self_dual_criterion(Probe& p) {
  auto s5 = examples::simplex(5);
  auto d = self_dual_twist(s5);
  const auto& sys = d.twist.system;
  p.expect(sys.rank() == 3, "rank is not 3");
  p.expect(sys.group()->order() == 240, "order is not 240");
  p.expect(check_flag_transitive(sys, FtMethod::Product).pass, "FT fails");
  p.expect(check_residually_connected(sys, RcVariant::RC1).pass, "RC fails");
  p.expect(check_firm_thin(sys).second.pass, "THIN fails");
  // recorded from the enumeration over representatives (0|3, 1|2)
  static const std::map<std::vector<std::size_t>, std::string> frozen{
      {{0, 1}, "nodes 3; 0-3-1 0-4-tau 1-6-tau (non-linear)"},
      {{3, 1}, "nodes 3; 3-4-tau 1-6-tau (linear)"},
      {{0, 2}, "nodes 3; 0-4-tau 2-6-tau (linear)"},
      {{3, 2}, "nodes 3; 3-3-2 3-4-tau 2-6-tau (non-linear)"},
  };
  bool linear = false;
  auto choices = self_dual_choices(s5);
  p.expect(choices.size() == frozen.size(), "unexpected number of representative choices");
  for (const auto& c : choices) {
    linear |= c.diagram.linear;
    auto it = frozen.find(c.twist.representatives);
    p.expect(it != frozen.end() && it->second == c.diagram.to_string(), "diagram changed: " + c.diagram.to_string());
  }
  p.expect(linear, "no representative choice gives a linear diagram");
}

void join_criterion(Probe& p) {
  auto tet = examples::tetrahedron_system();
  auto seg = examples::rank1(Group::permutations(2, std::vector<Generator>{{"s", parse_permutation("(1,2)", 2)}}), "s");
  auto tri = cgroup_system(generator_system(3, {parse_permutation("(1,2)", 3), parse_permutation("(2,3)", 3)}, {"p", "q"}));
  auto c3 = examples::rank1(Group::permutations(3, std::vector<Generator>{{"c", parse_permutation("(1,2,3)", 3)}}), "c");
  std::vector<std::pair<CosetSystem, CosetSystem>> pairs{{tet, seg}, {tri, c3}, {seg, tri}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto lhs = materialize_geometry(direct_product(pairs[k].first, pairs[k].second));
    auto rhs = join({materialize_geometry(pairs[k].first), materialize_geometry(pairs[k].second)});
    std::vector<std::uint32_t> id(lhs.types.size());
    for (std::uint32_t t = 0; t < id.size(); ++t) id[t] = t;
    p.expect(colored_isomorphic(lhs, rhs, id).has_value(), "pair " + std::to_string(k + 1) + " is not a join");
  }
}

void streetlight_criterion(Probe& p) {
  using namespace street;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<Pos> pos(-8, 8);
  auto random_config = [&] {
    std::vector<Pos> on;
    for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k) on.push_back(pos(rng));
    return LampConfig(std::move(on));
  };
  for (int k = 0; k < 1000; ++k) {
    Uncertain u(random_config(), pos(rng));
    // candidates: the known part with up to two lamps toggled around the support
    std::vector<Pos> pts;
    for (Pos q = -10; q <= 10; ++q) pts.push_back(q);
    std::set<State> candidates{State{u.known}};
    for (Pos a : pts) {
      candidates.insert(State{u.known.toggled(a)});
      for (Pos b : pts) candidates.insert(State{u.known.toggled(a).toggled(b)});
    }
    std::size_t count = 0;
    for (const auto& s : candidates) count += incident(s, u);
    p.expect(count == 2, "an uncertainty has " + std::to_string(count) + " incident states");
  }
  // BFS over the window [-3, 5] from the empty street
  std::map<StreetElement, std::size_t> dist{{State{}, 0}};
  std::queue<StreetElement> q;
  q.push(State{});
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    std::vector<StreetElement> next;
    if (auto s = std::get_if<State>(&x)) {
      for (const auto& u : uncertainties_in_window(*s, -3, 5)) next.emplace_back(u);
    } else {
      auto [off, on] = resolve(std::get<Uncertain>(x));
      next = {off, on};
    }
    for (const auto& y : next)
      if (dist.emplace(y, dist[x] + 1).second) q.push(y);
  }
  for (unsigned bits = 0; bits < (1u << 9); ++bits) {
    if (__builtin_popcount(bits) > 4) continue;
    std::vector<Pos> on;
    for (Pos k = 0; k < 9; ++k)
      if (bits >> k & 1) on.push_back(k - 3);
    State target{LampConfig(on)};
    auto path = street_path(State{}, target);
    std::string tag = "F = " + target.config.to_string();
    p.expect(path.size() == 2 * on.size(), tag + ": path length");
    p.expect(dist.at(target) == path.size(), tag + ": path is not minimal");
    StreetElement prev = State{};
    for (const auto& e : path) {
      p.expect(incident(prev, e), tag + ": consecutive elements not incident");
      prev = e;
    }
    p.expect(prev == StreetElement(target), tag + ": path does not end at F");
  }
  const auto a = LamplighterElement::a(), t = LamplighterElement::t();
  std::uniform_int_distribution<Pos> shift(-50, 50);
  for (int k = 0; k < 1000; ++k) {
    p.expect(ll_mul(a, a) == LamplighterElement::identity(), "a^2 != e");
    Pos m = shift(rng), n = shift(rng);
    if (m == n) ++n;
    auto am = ll_mul(ll_mul(ll_pow(t, m), a), ll_pow(t, -m));
    auto an = ll_mul(ll_mul(ll_pow(t, n), a), ll_pow(t, -n));
    p.expect(am == LamplighterElement{{m}, 0}, "t^m a t^-m is not a toggle at m");
    p.expect(ll_mul(am, an) == ll_mul(an, am), "toggles at distinct positions do not commute");
  }
}

// Full intersection property from raw subgroup intersections.
bool raw_intersection_property(const GeneratorSystem& s) {
  std::vector<GroupPtr> sub(8);
  for (TypeSet m = 0; m < 8; ++m) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < 3; ++i)
      if (m >> i & 1) gens.push_back(s.rho(i));
    sub[m] = generated_by(s.group->arithmetic_ptr(), gens);
  }
  for (TypeSet m = 0; m < 8; ++m)
    for (TypeSet n = 0; n < 8; ++n)
      if (sub[m]->elements().intersection(sub[n]->elements()) != sub[m & n]->elements()) return false;
  return true;
}

void search_criterion(Probe& p) {
  static const std::map<std::size_t, std::vector<std::string>> frozen{
      {5, {"(1,2)", "(2,4)(3,5)", "(1,2)(4,5)"}},
      {6, {"(1,2)", "(2,3)(4,5)", "(3,4)(5,6)"}},
  };
  for (std::size_t n : {5, 6}) {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < n; ++i) gens.push_back(Permutation::from_transpositions(n, {{i, i + 1}}));
    auto g = Group::permutations(n, gens);
    std::string tag = "Sym(" + std::to_string(n) + ")";
    try {
      auto s = search_rank3_polytope(g, parse_permutation("(1,2)", n));
      std::vector<Permutation> triple;
      std::vector<std::string> texts;
      for (const auto& r : s.rhos()) {
        triple.push_back(r.perm());
        texts.push_back(r.perm().to_string());
      }
      p.expect(texts == frozen.at(n), tag + ": triple differs from the recorded one");
      p.expect(Group::permutations(n, triple)->order() == g->order(), tag + ": triple does not generate");
      p.expect(raw_intersection_property(s), tag + ": intersection property fails");
    } catch (const Error& e) {
      p.expect(false, tag + ": " + e.what());
    }
  }
}

using Body = void (*)(Probe&);
const std::vector<std::pair<Criterion, Body>>& bodies() {
  static const std::vector<std::pair<Criterion, Body>> list{
      {{1, "tetrahedron-twist", 1000}, tetrahedron_twist_criterion},
      {{2, "orbit-tables", 1000}, orbit_tables_criterion},
      {{3, "families", 30000}, families_criterion},
      {{4, "checker-equivalence", 60000}, checker_equivalence_criterion},
      {{5, "twist-parabolic-oracle", 30000}, parabolic_oracle_criterion},
      {{6, "m22", 30000}, m22_criterion},
      {{7, "self-dual-twist", 10000}, self_dual_criterion},
      {{8, "product-join", 10000}, join_criterion},
      {{9, "streetlight", 10000}, streetlight_criterion},
      {{10, "polytope-search", 30000}, search_criterion},
  };
  return list;
}

}  // namespace

const std::vector<Criterion>& suite_criteria() {
  static const std::vector<Criterion> list = [] {
    std::vector<Criterion> out;
    for (const auto& [c, body] : bodies()) out.push_back(c);
    return out;
  }();
  return list;
}

Report regression_suite(const std::string& filter, bool timing) {
  Report report;
  auto begin = std::chrono::steady_clock::now();
  for (const auto& [c, body] : bodies()) {
    if (c.name.find(filter) == std::string::npos) continue;
    StepReport r{std::to_string(c.id) + " " + c.name, StepStatus::Pass, nullptr, 0};
    auto start = std::chrono::steady_clock::now();
    Probe probe;
    try {
      body(probe);
    } catch (const CapExceeded& e) {
      r.status = StepStatus::Cap;
      r.witness = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    } catch (const Error& e) {
      r.status = StepStatus::Error;
      r.witness = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.status == StepStatus::Pass && !probe.failures.empty()) {
      r.status = StepStatus::Fail;
      r.witness = {{"failures", probe.failures}};
    }
    if (r.status == StepStatus::Pass && ms > c.budget_ms) {
      r.status = StepStatus::Fail;
      r.witness = {{"over_budget_ms", c.budget_ms}};
    }
    if (timing) r.ms = ms;
    report.steps.push_back(std::move(r));
  }
  if (timing)
    report.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
  return report;
}

}  // namespace geoforge
