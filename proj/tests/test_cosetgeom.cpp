#include "doctest.h"
#include "fixtures.hpp"
#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

using namespace geoforge;
using fx::P;

TEST_CASE("subset order") {
  auto s = subsets_of(3);
  REQUIRE(s.size() == 8);
  CHECK(s == std::vector<TypeSet>{0, 1, 2, 4, 3, 5, 6, 7});
  ScopedCaps guard(Caps{.rank_guard = 2});
  CHECK_THROWS_AS(subsets_of(3), Error);
}

TEST_CASE("construction errors") {
  auto g = fx::sym4();
  CHECK_THROWS_AS(CosetSystem(g, {}, {}), Error);
  try {
    CosetSystem(g, {"a", "a"}, {g, g});
    FAIL("collision accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TypeLabelCollision);
  }
  auto sys = fx::tetrahedron_system();
  try {
    sys.type_index("7");
    FAIL("unknown type accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownType);
  }
}

TEST_CASE("parabolics of the tetrahedron") {
  auto sys = fx::tetrahedron_system();
  CHECK(sys.parabolic(0)->order() == 24);
  auto g01 = sys.parabolic(sys.type_set({"0", "1"}));
  CHECK(g01->order() == 2);
  CHECK(g01->contains(P("(3,4)", 4)));
  CHECK(sys.borel()->order() == 1);
  CHECK(borel_index(sys) == 24);
  CHECK(sys.format(5) == "{0,2}");
}

TEST_CASE("flag-transitivity") {
  auto tet = fx::tetrahedron_system();
  for (auto m : {FtMethod::Product, FtMethod::Triple, FtMethod::Geometry}) CHECK(check_flag_transitive(tet, m).pass);

  auto g = Group::permutations(3, std::vector<Permutation>{P("(1,2,3)", 3)});
  CosetSystem rank1(g, {"x"}, {fx::sub(g, {})});
  for (auto m : {FtMethod::Product, FtMethod::Triple, FtMethod::Geometry}) CHECK(check_flag_transitive(rank1, m).pass);

  auto transpositions = fx::transpositions_s4();
  for (auto m : {FtMethod::Product, FtMethod::Triple, FtMethod::Geometry})
    CHECK(check_flag_transitive(transpositions, m).pass);
  CHECK_FALSE(check_residually_connected(transpositions, RcVariant::RC1).pass);

  auto bad = fx::ft_failure();
  auto product = check_flag_transitive(bad, FtMethod::Product);
  REQUIRE_FALSE(product.pass);
  // the witness lies in the intersection of the G_jG_i but not in G_JG_i
  TypeSet j = bad.type_set({product.witness["J"].get<std::string>().substr(1, 1),
                            product.witness["J"].get<std::string>().substr(3, 1)});
  CHECK(product.witness["J"] == "{0,1}");
  auto i = bad.type_index(product.witness["i"].get<std::string>());
  const auto& w = product.witness_elements.at(0);
  CHECK_FALSE(product_set(*bad.parabolic(j), *bad.maximal(i)).contains(w));
  for (std::size_t k = 0; k < 3; ++k)
    if (has_type(j, k)) CHECK(product_set(*bad.maximal(k), *bad.maximal(i)).contains(w));
  CHECK_FALSE(check_flag_transitive(bad, FtMethod::Triple).pass);
  auto geo = check_flag_transitive(bad, FtMethod::Geometry);
  CHECK_FALSE(geo.pass);
  CHECK(geo.details["chamber_orbits"].get<int>() >= 2);
}

TEST_CASE("residual connectedness") {
  auto tet = fx::tetrahedron_system();
  for (auto v : {RcVariant::RC1, RcVariant::RC2, RcVariant::Intersection})
    CHECK(check_residually_connected(tet, v).pass);

  // C2 x C2 with both parabolics <x>
  auto g = Group::permutations(4, std::vector<Permutation>{P("(1,2)", 4), P("(3,4)", 4)});
  auto bad = fx::system_of(g, {{P("(1,2)", 4)}, {P("(1,2)", 4)}});
  for (auto v : {RcVariant::RC1, RcVariant::RC2, RcVariant::Intersection})
    CHECK_FALSE(check_residually_connected(bad, v).pass);

  // C4 with G_0 = {e}, G_1 = <c^2>: the intersection conditions alone hold here.
  auto c4 = Group::permutations(4, std::vector<Permutation>{P("(1,2,3,4)", 4)});
  auto c4sys = fx::system_of(c4, {{}, {P("(1,3)(2,4)", 4)}});
  CHECK_FALSE(check_residually_connected(c4sys, RcVariant::RC1).pass);
  CHECK_FALSE(check_residually_connected(c4sys, RcVariant::Intersection).pass);
}

TEST_CASE("firm and thin") {
  auto [firm, thin] = check_firm_thin(fx::tetrahedron_system());
  CHECK(firm.pass);
  CHECK(thin.pass);
  CHECK_FALSE(thin.conditional);
  CHECK(thin.details["indices"]["1"] == 2);

  auto g = Group::permutations(3, std::vector<Permutation>{P("(1,2)", 3), P("(2,3)", 3)});
  auto sys = fx::system_of(g, {{P("(1,2)", 3)}, {P("(1,2)", 3)}});
  auto [f2, t2] = check_firm_thin(sys, true);
  CHECK_FALSE(f2.pass);
  CHECK_FALSE(t2.pass);
  CHECK(f2.conditional);
  CHECK(borel_index(fx::system_of(g, {{P("(1,2)", 3), P("(2,3)", 3)}})) == 1);
}

TEST_CASE("residue systems") {
  auto tet = fx::tetrahedron_system();
  auto r0 = residue_system(tet, tet.type_set({"0"}));
  CHECK(r0.rank() == 2);
  CHECK(materialize_geometry(r0).counts() == std::vector<std::size_t>{3, 3});
  auto r1 = residue_system(tet, tet.type_set({"1"}));
  CHECK(materialize_geometry(r1).counts() == std::vector<std::size_t>{2, 2});
  auto r = residue_system(tet, 0);
  CHECK(r.group()->order() == 24);
  CHECK(r.types() == tet.types());
}

TEST_CASE("residue of the base flag") {
  auto tet = fx::tetrahedron_system();
  auto m = materialize(tet);
  for (TypeSet j : subsets_of(3)) {
    if (j == 0 || j == tet.all_types()) continue;
    // the base flag: cosets G_j themselves
    std::vector<std::uint32_t> base;
    for (std::size_t k = 0; k < 3; ++k)
      if (has_type(j, k)) base.push_back(m.element_of_label[k][m.tables->labels(single_type(k))[m.tables->index_of(tet.group()->identity())]]);
    Geometry res;
    for (std::size_t k = 0; k < 3; ++k)
      if (!has_type(j, k)) res.types.push_back(tet.types()[k]);
    std::map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t e = 0; e < m.geometry.size(); ++e) {
      if (has_type(j, m.geometry.type_of[e])) continue;
      bool ok = true;
      for (auto b : base) ok = ok && m.geometry.incident(e, b);
      if (!ok) continue;
      auto t = std::find(res.types.begin(), res.types.end(), tet.types()[m.geometry.type_of[e]]) - res.types.begin();
      pos[e] = res.add(static_cast<std::uint32_t>(t), m.geometry.names[e]);
    }
    for (auto [a, pa] : pos)
      for (auto [b, pb] : pos)
        if (a < b && m.geometry.incident(a, b)) res.connect(pa, pb);
    res.finish();
    auto other = materialize_geometry(residue_system(tet, j));
    std::vector<std::uint32_t> same(res.types.size());
    for (std::uint32_t t = 0; t < same.size(); ++t) same[t] = t;
    CHECK(colored_isomorphic(res, other, same).has_value());
  }
}

TEST_CASE("parabolic cache identity") {
  auto tet = fx::tetrahedron_system();
  for (TypeSet j : subsets_of(3))
    for (TypeSet k : subsets_of(3))
      CHECK(same_subgroup(*tet.parabolic(j | k), *intersect(*tet.parabolic(j), *tet.parabolic(k))));
}

TEST_CASE("product of intersections") {
  CHECK(check_product_of_intersections(fx::tetrahedron_system()).pass);
  CHECK_FALSE(check_product_of_intersections(fx::ft_failure()).pass);
}

TEST_CASE("Borel normalization") {
  // Sym(3) x C2 acting on 5 points, with the C2 factor inside every parabolic.
  auto g = Group::permutations(5, std::vector<Permutation>{P("(1,2)", 5), P("(2,3)", 5), P("(4,5)", 5)});
  auto sys = fx::system_of(g, {{P("(2,3)", 5), P("(4,5)", 5)}, {P("(1,2)", 5), P("(4,5)", 5)}});
  CHECK(sys.borel()->order() == 2);
  auto q = normalize_borel(sys);
  CHECK(q.group()->order() == 6);
  CHECK(q.borel()->order() == 1);
  CHECK(check_firm_thin(q).second.pass);
  CHECK(colored_isomorphic(materialize_geometry(sys), materialize_geometry(q)).has_value());
  CHECK_THROWS_AS(normalize_borel(fx::system_of(fx::sym4(), {{P("(1,2)", 4)}, {P("(1,2)", 4)}})), Error);
}
