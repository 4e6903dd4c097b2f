#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "geoforge/error.hpp"
#include "geoforge/streetlight.hpp"

using namespace geoforge;
using namespace geoforge::street;

namespace {

const auto a = LamplighterElement::a();
const auto t = LamplighterElement::t();

LamplighterElement random_element(std::mt19937& rng, int spread = 6) {
  std::uniform_int_distribution<Pos> pos(-spread, spread);
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<Pos> on;
  for (int k = count(rng); k > 0; --k) on.push_back(pos(rng));
  return {LampConfig(std::move(on)), pos(rng)};
}

// x in g<t> iff g^-1 x has no lamps; x in g<a> iff g^-1 x is e or a.
bool in_state_coset(const LamplighterElement& g, const LamplighterElement& x) {
  return ll_mul(ll_inv(g), x).config.empty();
}

bool cosets_meet(const State& s, const Uncertain& u) {
  auto h = preimage(u);
  auto g = preimage(s);
  return in_state_coset(g, h) || in_state_coset(g, ll_mul(h, a));
}

// Distance between states in the incidence graph restricted to lamps in [lo, hi].
std::size_t bfs_distance(const State& from, const State& to, Pos lo, Pos hi) {
  std::map<StreetElement, std::size_t> dist{{from, 0}};
  std::queue<StreetElement> q;
  q.push(from);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    if (x == StreetElement(to)) return dist[x];
    std::vector<StreetElement> next;
    if (auto s = std::get_if<State>(&x)) {
      for (const auto& u : uncertainties_in_window(*s, lo, hi)) next.emplace_back(u);
    } else {
      auto [off, on] = resolve(std::get<Uncertain>(x));
      next = {off, on};
    }
    for (const auto& y : next)
      if (dist.emplace(y, dist[x] + 1).second) q.push(y);
  }
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("lamplighter arithmetic") {
  CHECK(ll_mul(a, a) == LamplighterElement::identity());
  CHECK(ll_mul(LamplighterElement{{0}, 1}, LamplighterElement{{0}, -1}) == LamplighterElement{{0, 1}, 0});
  for (Pos n = -5; n <= 5; ++n) {
    auto an = ll_mul(ll_mul(ll_pow(t, n), a), ll_pow(t, -n));
    CHECK(an == LamplighterElement{{n}, 0});
    if (n != 0) CHECK(ll_mul(an, a) == ll_mul(a, an));
  }
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK(ll_mul(x, ll_inv(x)) == LamplighterElement::identity());
    CHECK(ll_mul(ll_inv(x), x) == LamplighterElement::identity());
    CHECK(ll_mul(ll_mul(x, y), z) == ll_mul(x, ll_mul(y, z)));
  }
  // toggles at distinct positions commute
  for (Pos m = -4; m <= 4; ++m)
    for (Pos n = -4; n <= 4; ++n) {
      auto am = ll_mul(ll_mul(ll_pow(t, m), a), ll_pow(t, -m));
      auto an = ll_mul(ll_mul(ll_pow(t, n), a), ll_pow(t, -n));
      CHECK(ll_mul(am, an) == ll_mul(an, am));
    }
}

TEST_CASE("canonical street elements") {
  CHECK(canonical_street({}, StreetType::State) == StreetElement(State{}));
  CHECK(canonical_street({}, StreetType::Uncertain) == StreetElement(Uncertain({}, 0)));
  CHECK(canonical_street({{0}, 3}, StreetType::Uncertain) == StreetElement(Uncertain({0}, 3)));
  // both members of the coset {({0},3), ({0,3},3)} give the same element
  CHECK(canonical_street({{0, 3}, 3}, StreetType::Uncertain) == StreetElement(Uncertain({0}, 3)));
  CHECK(Uncertain({0, 3}, 3).known == LampConfig{0});
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto g = random_element(rng);
    for (Pos n = -3; n <= 3; ++n)
      CHECK(canonical_street(g, StreetType::State) == canonical_street(ll_mul(g, ll_pow(t, n)), StreetType::State));
    CHECK(canonical_street(g, StreetType::Uncertain) == canonical_street(ll_mul(g, a), StreetType::Uncertain));
    CHECK(canonical_street(g, StreetType::Uncertain) != canonical_street(ll_mul(g, t), StreetType::Uncertain));
    for (auto type : {StreetType::State, StreetType::Uncertain}) {
      auto e = canonical_street(g, type);
      CHECK(canonical_street(preimage(e), type) == e);
      CHECK(type_of(e) == static_cast<std::size_t>(type));
    }
  }
}

TEST_CASE("incidence") {
  CHECK(incident(State{}, Uncertain({}, 0)));
  CHECK(incident(State{{0}}, Uncertain({}, 0)));
  CHECK_FALSE(incident(State{{1}}, Uncertain({}, 0)));
  CHECK(incident(StreetElement(Uncertain({}, 0)), StreetElement(State{{0}})));
  CHECK_FALSE(incident(StreetElement(State{{0}}), StreetElement(State{})));

  // agrees with explicit coset membership
  std::mt19937 rng(3);
  std::size_t hits = 0;
  for (int k = 0; k < 2000; ++k) {
    auto s = std::get<State>(canonical_street(random_element(rng, 3), StreetType::State));
    auto u = std::get<Uncertain>(canonical_street(random_element(rng, 3), StreetType::Uncertain));
    bool inc = incident(s, u);
    CHECK(inc == cosets_meet(s, u));
    hits += inc;
  }
  CHECK(hits > 0);
  // and on the states next to a fixed uncertainty
  Uncertain u({1, 4}, 2);
  for (const auto& s : {State{{1, 4}}, State{{1, 2, 4}}, State{{1}}, State{{1, 2}}, State{{1, 3, 4}}})
    CHECK(incident(s, u) == cosets_meet(s, u));
}

TEST_CASE("resolution and windows") {
  auto [off, on] = resolve(Uncertain({}, 0));
  CHECK(off == State{});
  CHECK(on == State{{0}});

  // every uncertainty lies on exactly two states
  std::mt19937 rng(17);
  for (int k = 0; k < 200; ++k) {
    auto u = std::get<Uncertain>(canonical_street(random_element(rng, 4), StreetType::Uncertain));
    auto [x, y] = resolve(u);
    CHECK(x != y);
    CHECK(incident(x, u));
    CHECK(incident(y, u));
    std::size_t count = 0;
    std::vector<Pos> positions = u.known.on();
    positions.push_back(u.position);
    std::vector<Pos> window;
    for (Pos p = -6; p <= 6; ++p) window.push_back(p);
    // all states over the window plus the support
    std::set<Pos> universe(window.begin(), window.end());
    universe.insert(positions.begin(), positions.end());
    std::vector<Pos> pts(universe.begin(), universe.end());
    // states differing from u.known in at most two lamps cover every candidate
    std::set<State> states{State{u.known}};
    for (Pos p : pts) {
      states.insert(State{u.known.toggled(p)});
      for (Pos q : pts) states.insert(State{u.known.toggled(p).toggled(q)});
    }
    for (const auto& s : states) count += incident(s, u);
    CHECK(count == 2);
  }

  auto w = uncertainties_in_window(State{}, 0, 2);
  REQUIRE(w.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(w[k] == Uncertain({}, static_cast<Pos>(k)));
  auto w2 = uncertainties_in_window(State{{1, 5}}, 0, 2);
  CHECK(w2[1] == Uncertain({5}, 1));
  for (const auto& u : w2) CHECK(incident(State{{1, 5}}, u));
}

TEST_CASE("street paths") {
  CHECK(street_path(State{{2}}, State{{2}}).empty());
  auto path = street_path(State{}, State{{3, 5}});
  CHECK(path.size() == 4);
  CHECK(bfs_distance(State{}, State{{3, 5}}, 3, 5) == 4);
  CHECK(path.back() == StreetElement(State{{3, 5}}));

  std::mt19937 rng(23);
  std::uniform_int_distribution<Pos> pos(0, 5);
  for (int k = 0; k < 60; ++k) {
    std::vector<Pos> p1, p2;
    for (int m = 0; m < 3; ++m) p1.push_back(pos(rng)), p2.push_back(pos(rng));
    State s1{LampConfig(p1)}, s2{LampConfig(p2)};
    auto d = s1.config.symmetric_difference(s2.config).size();
    auto path = street_path(s1, s2);
    CHECK(path.size() == 2 * d);
    StreetElement prev = s1;
    for (const auto& e : path) {
      CHECK(type_of(e) != type_of(prev));
      CHECK(incident(prev, e));
      prev = e;
    }
    CHECK(prev == StreetElement(s2));
    if (d <= 4) CHECK(bfs_distance(s1, s2, 0, 5) == 2 * d);
  }
}

TEST_CASE("left action") {
  for (const auto& e : {StreetElement(State{{1}}), StreetElement(Uncertain({2}, 0))})
    CHECK(street_act(LamplighterElement::identity(), e) == e);
  CHECK(street_act(t, State{}) == StreetElement(State{}));
  CHECK(street_act(a, Uncertain({}, 0)) == StreetElement(Uncertain({}, 0)));
  CHECK(street_act(a, State{}) == StreetElement(State{{0}}));
  CHECK(street_act(t, Uncertain({}, 0)) == StreetElement(Uncertain({}, 1)));

  std::mt19937 rng(1000);
  for (int k = 0; k < 1000; ++k) {
    auto g = random_element(rng), h = random_element(rng);
    auto s = std::get<State>(canonical_street(random_element(rng, 3), StreetType::State));
    auto u = std::get<Uncertain>(canonical_street(random_element(rng, 3), StreetType::Uncertain));
    if (k % 2) u = Uncertain(s.config, u.position);  // force incident pairs half the time
    auto gs = street_act(g, s), gu = street_act(g, u);
    CHECK(type_of(gs) == 0);
    CHECK(type_of(gu) == 1);
    CHECK(incident(gs, gu) == incident(s, u));
    CHECK(street_act(ll_mul(g, h), s) == street_act(g, street_act(h, s)));
    CHECK(street_act(ll_mul(g, h), u) == street_act(g, street_act(h, u)));
  }
}

TEST_CASE("words in a and t only reach finite supports") {
  // Any word of length L has its lamps in [-L, L], so a word reaching the
  // all-on window [-n, n] grows with n and no fixed word set reaches all-on.
  std::map<LamplighterElement, std::size_t> dist{{LamplighterElement::identity(), 0}};
  std::queue<LamplighterElement> q;
  q.push(LamplighterElement::identity());
  const std::size_t depth = 14;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    const auto d = dist[x];
    for (Pos p : x.config.on()) CHECK(std::abs(p) <= static_cast<Pos>(d));
    if (d == depth) continue;
    for (const auto& s : {a, t, ll_inv(t)}) {
      auto y = ll_mul(x, s);
      if (dist.emplace(y, d + 1).second) q.push(y);
    }
  }
  std::size_t prev = 0;
  for (Pos n = 0; n <= 2; ++n) {
    std::vector<Pos> on;
    for (Pos p = -n; p <= n; ++p) on.push_back(p);
    auto it = dist.find(LamplighterElement{LampConfig(on), 0});
    REQUIRE(it != dist.end());
    if (n > 0) CHECK(it->second > prev);
    prev = it->second;
  }
}

TEST_CASE("state literals") {
  CHECK(parse_state("on=") == State{});
  CHECK(parse_state("") == State{});
  CHECK(parse_state("on=3,5") == State{{3, 5}});
  CHECK(parse_state("on=5,-1,5 shift=0") == State{{-1, 5}});
  CHECK(parse_lamplighter("on=0 shift=-2") == LamplighterElement{{0}, -2});
  CHECK_FALSE(parse_lamplighter("shift=3") == t);
  CHECK(parse_lamplighter("shift=1") == t);
  for (const char* bad : {"on=1,", "on=x", "shift=1 shift=2", "off=1", "on 1", "on=1 shift="})
    CHECK_THROWS_AS(parse_lamplighter(bad), Error);
  CHECK_THROWS_AS(parse_state("on=1 shift=2"), Error);
  try {
    parse_lamplighter("on=1,,2");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK(to_json(street_path(State{}, State{{3}})) ==
        R"([{"type":"uncertain","known":[],"position":3},{"type":"state","on":[3]}])");
}
