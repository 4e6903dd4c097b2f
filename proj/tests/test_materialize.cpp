#include <algorithm>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

using namespace geoforge;
using fx::P;

namespace {

Geometry rank1(const std::string& type, std::size_t n) {
  Geometry g;
  g.types = {type};
  for (std::size_t k = 0; k < n; ++k) g.add(0, type + std::to_string(k));
  g.finish();
  return g;
}

std::size_t incidences_between(const Geometry& g, std::uint32_t t1, std::uint32_t t2) {
  std::size_t n = 0;
  for (std::uint32_t e = 0; e < g.size(); ++e)
    for (auto f : g.adjacency[e])
      if (g.type_of[e] == t1 && g.type_of[f] == t2) ++n;
  return n;
}

// Systems used for oracle agreement.
std::vector<CosetSystem> fixture_systems() {
  std::vector<CosetSystem> out{fx::tetrahedron_system(), fx::transpositions_s4(),
                               cgroup_system(builtin_family("T5-13", 3)), cgroup_system(builtin_family("T9-1", 3)),
                               cgroup_system(builtin_family("T5-14", 3))};
  for (auto& s : fx::ft_failures()) out.push_back(s);
  auto s4 = fx::sym4();
  out.push_back(fx::system_of(s4, {{P("(1,2)", 4), P("(2,3)", 4)}, {P("(3,4)", 4)}}));
  out.push_back(fx::system_of(s4, {{P("(1,2)", 4)}, {P("(1,2)", 4)}}));
  return out;
}

}  // namespace

TEST_CASE("tetrahedron materialization") {
  auto m = materialize(fx::tetrahedron_system());
  const auto& g = m.geometry;
  CHECK(g.counts() == std::vector<std::size_t>{4, 6, 4});
  CHECK(g.incidence_count() == 36);
  CHECK(incidences_between(g, 0, 1) == 12);
  CHECK(incidences_between(g, 1, 2) == 12);
  CHECK(incidences_between(g, 0, 2) == 12);
  auto r = check_geometry_direct(g);
  CHECK(r.is_geometry);
  CHECK(r.connected);
  CHECK(r.residually_connected);
  CHECK(r.firm);
  CHECK(r.thin);
  CHECK(r.chamber_count == 24);
  CHECK(chamber_orbits(m) == 1);
  for (std::uint32_t e = 0; e < g.size(); ++e) {
    CHECK(m.element_of_label[g.type_of[e]][m.coset_label[e]] == e);
    CHECK(m.act(Element(P("e", 4)), e) == e);
  }
}

TEST_CASE("rank-1 materialization") {
  auto g = fx::sym4();
  auto sys = fx::system_of(g, {{P("(1,2)", 4), P("(2,3)", 4)}});
  auto m = materialize(sys);
  CHECK(m.geometry.counts() == std::vector<std::size_t>{4});
  CHECK(m.geometry.incidence_count() == 0);
  CHECK(chamber_orbits(m) == 1);
}

TEST_CASE("incidence matches coset intersection") {
  auto sys = fx::ft_failure();
  auto m = materialize(sys);
  const auto& g = m.geometry;
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      if (g.type_of[a] == g.type_of[b]) continue;
      CHECK(g.incident(a, b) ==
            cosets_intersect(sys, g.type_of[a], m.representatives[a], g.type_of[b], m.representatives[b]));
    }
  // representative independence
  const auto& gp = *sys.group();
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      if (g.type_of[a] == g.type_of[b]) continue;
      for (const auto& h : sys.maximal(g.type_of[a])->elements())
        CHECK(cosets_intersect(sys, g.type_of[a], gp.multiply(m.representatives[a], h), g.type_of[b],
                               m.representatives[b]) == g.incident(a, b));
    }
}

TEST_CASE("cube reference") {
  auto cube = cube_reference();
  CHECK(cube.counts() == std::vector<std::size_t>{8, 12, 6});
  for (std::uint32_t e = 0; e < cube.size(); ++e)
    if (cube.type_of[e] == 1) {
      std::size_t v = 0, f = 0;
      for (auto x : cube.adjacency[e]) (cube.type_of[x] == 0 ? v : f)++;
      CHECK(v == 2);
      CHECK(f == 2);
    }
  auto r = check_geometry_direct(cube);
  CHECK(r.chamber_count == 48);
  CHECK(r.thin);
  CHECK(r.residually_connected);

  auto bc3 = materialize_geometry(cgroup_system(builtin_family("T5-13", 3)));
  CHECK(bc3.counts() == std::vector<std::size_t>{8, 12, 6});
  CHECK(colored_isomorphic(bc3, cube).has_value());
  CHECK_FALSE(colored_isomorphic(cube, materialize_geometry(fx::tetrahedron_system())).has_value());
}

TEST_CASE("colored isomorphism") {
  auto tet = materialize_geometry(fx::tetrahedron_system());
  auto id = colored_isomorphic(tet, tet, std::vector<std::uint32_t>{0, 1, 2});
  REQUIRE(id.has_value());
  auto cube = cube_reference();
  auto self = colored_isomorphic(cube, cube);
  REQUIRE(self.has_value());
  for (std::uint32_t e = 0; e < cube.size(); ++e)
    for (auto f : cube.adjacency[e]) CHECK(cube.incident((*self)[e], (*self)[f]));

  // the tetrahedron is self-dual: types 0 and 2 swap
  auto dual = colored_isomorphic(tet, tet, std::vector<std::uint32_t>{2, 1, 0});
  CHECK(dual.has_value());
  // the cube is not
  CHECK_FALSE(colored_isomorphic(cube, cube, std::vector<std::uint32_t>{2, 1, 0}).has_value());

  // a random relabeling is recovered
  std::mt19937 rng(7);
  std::vector<std::uint32_t> perm(cube.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  Geometry shuffled;
  shuffled.types = cube.types;
  std::vector<std::uint32_t> inverse(perm.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) inverse[perm[k]] = k;
  for (std::uint32_t k = 0; k < perm.size(); ++k) shuffled.add(cube.type_of[inverse[k]], cube.names[inverse[k]]);
  for (std::uint32_t e = 0; e < cube.size(); ++e)
    for (auto f : cube.adjacency[e]) shuffled.connect(perm[e], perm[f]);
  shuffled.finish();
  auto found = colored_isomorphic(cube, shuffled);
  REQUIRE(found.has_value());
  for (std::uint32_t e = 0; e < cube.size(); ++e)
    for (std::uint32_t f = 0; f < cube.size(); ++f)
      CHECK(cube.incident(e, f) == shuffled.incident((*found)[e], (*found)[f]));
}

TEST_CASE("non-geometry") {
  Geometry g;
  g.types = {"a", "b"};
  auto a0 = g.add(0, "a0");
  g.add(0, "a1");
  auto b0 = g.add(1, "b0");
  g.connect(a0, b0);
  g.finish();
  CHECK_FALSE(check_geometry_direct(g).is_geometry);
}

TEST_CASE("joins") {
  auto tet = materialize_geometry(fx::tetrahedron_system());
  auto one = join({tet});
  CHECK(colored_isomorphic(one, tet, std::vector<std::uint32_t>{0, 1, 2}).has_value());
  CHECK(export_json(one) == export_json(tet));

  auto bip = join({rank1("a", 3), rank1("b", 4)});
  CHECK(bip.counts() == std::vector<std::size_t>{3, 4});
  CHECK(bip.incidence_count() == 12);
  CHECK(check_geometry_direct(bip).chamber_count == 12);
  CHECK_THROWS_AS(join({rank1("a", 1), rank1("a", 2)}), Error);

  auto x = rank1("x", 2), y = rank1("y", 3), z = rank1("z", 2);
  auto left = join({join({x, y}), z});
  auto right = join({x, join({y, z})});
  CHECK(colored_isomorphic(left, right, std::vector<std::uint32_t>{0, 1, 2}).has_value());
  auto cube = cube_reference();
  for (auto& t : cube.types) t = "c" + t;
  CHECK(colored_isomorphic(join({join({tet, x}), cube}), join({tet, join({x, cube})}),
                           std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6})
            .has_value());
}

TEST_CASE("export and import") {
  Geometry empty;
  CHECK(export_dot(empty) == "graph geometry {\n}\n");
  CHECK(export_json(empty) == "{\"types\":[],\"elements\":[],\"incidences\":[]}\n");

  auto tet = materialize_geometry(fx::tetrahedron_system());
  auto dot = export_dot(tet);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 14 + 36);
  CHECK(dot.find(" -- ") != std::string::npos);
  auto json = export_json(tet);
  CHECK(export_json(import_json(json)) == json);
  auto cube = cube_reference();
  CHECK(export_json(import_json(export_json(cube))) == export_json(cube));

  CHECK_THROWS_AS(import_json("{"), Error);
  try {
    import_json(R"({"types":["a"],"elements":[{"id":0,"type":"b"}],"incidences":[]})");
    FAIL("accepted unknown type");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownType);
  }
  try {
    import_json(R"({"types":["a","b"],"elements":[{"id":0,"type":"a"}],"incidences":[[0,5]]})");
    FAIL("accepted dangling incidence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnresolvedReference);
  }
}

TEST_CASE("materialize cap") {
  ScopedCaps small(Caps{.geometry = 5});
  CHECK_THROWS_AS(materialize(fx::tetrahedron_system()), CapExceeded);
}

TEST_CASE("oracle agreement") {
  for (const auto& sys : fixture_systems()) {
    auto m = materialize(sys);
    auto direct = check_geometry_direct(m.geometry);
    bool ft = check_flag_transitive(sys, FtMethod::Product).pass;
    CAPTURE(sys.group()->order());
    CHECK((chamber_orbits(m) == 1) == ft);
    if (!ft) continue;
    auto rc = check_residually_connected(sys, RcVariant::RC1).pass;
    CHECK(direct.residually_connected == rc);
    auto [firm, thin] = check_firm_thin(sys);
    CHECK(direct.thin == thin.pass);
    CHECK(direct.firm == firm.pass);
    if (thin.pass && rc) CHECK(direct.chamber_count == borel_index(sys));
  }
}

TEST_CASE("failing fixture has several chamber orbits") {
  for (const auto& sys : fx::ft_failures()) CHECK(chamber_orbits(materialize(sys)) >= 2);
}

TEST_CASE("flag orbit counts") {
  auto m = materialize(fx::tetrahedron_system());
  auto counts = flag_orbit_counts(m);
  REQUIRE(counts.size() == 8);
  for (auto c : counts) CHECK(c == 1);
}
