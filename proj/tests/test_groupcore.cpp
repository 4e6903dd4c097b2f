#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/group.hpp"

using namespace geoforge;
using fx::P;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<Permutation::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Permutation::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

GroupPtr random_subgroup(std::mt19937& rng, const GroupPtr& parent, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<Element> gens;
  for (int i = count(rng); i > 0; --i) gens.push_back(random_perm(rng, n));
  return fx::sub(parent, gens);
}

}  // namespace

TEST_CASE("cycle notation") {
  CHECK(P("e", 4).is_identity());
  CHECK(P("(1,4)(2,3)", 4).images_one_based() == std::vector<std::size_t>{4, 3, 2, 1});
  CHECK(P("(1,2)(3,4)(5,6)", 6).images_one_based() == std::vector<std::size_t>{2, 1, 4, 3, 6, 5});
  CHECK(P(" (1, 2) (2,3) ", 3) == P("(1,3,2)", 3));
  CHECK(P("(1,3,2)", 3).to_string() == "(1,3,2)");
  CHECK(code_of([] { P("(1,5)", 4); }) == ErrorCode::PointOutOfRange);
  CHECK(code_of([] { P("(1,2", 4); }) == ErrorCode::MalformedCycle);
  CHECK(code_of([] { P("(1)", 4); }) == ErrorCode::MalformedCycle);
  CHECK(code_of([] { P("", 4); }) == ErrorCode::MalformedCycle);
  CHECK(code_of([] { P("(1,2,1)", 4); }) == ErrorCode::RepeatedPointWithinCycle);
}

TEST_CASE("right action arithmetic") {
  auto g = Group::permutations(3, std::vector<Permutation>{P("(1,2)", 3), P("(2,3)", 3)});
  Element x = g->multiply(P("(1,2)", 3), P("(2,3)", 3));
  // 1 -> 2 -> 3, 3 -> 2, 2 -> 1
  CHECK(x == Element(P("(1,3,2)", 3)));
  CHECK(g->element_order(x) == 3);
  CHECK(g->element_order(g->identity()) == 1);
  CHECK(code_of([&] { g->multiply(P("(1,2)", 3), P("(1,2)", 4)); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([&] { g->multiply(Element::pair(P("(1,2)", 3), P("(1,2)", 3)), P("(1,2)", 3)); }) ==
        ErrorCode::MixedGroupOperands);
}

TEST_CASE("M22 generators") {
  auto m = fx::m22();
  auto g = Group::permutations(22, m);
  CHECK(g->order() == 887040);
  CHECK(g->element_order(m[0] * m[1]) == 4);
  CHECK(g->element_order(m[1] * m[2]) == 12);
  CHECK(g->contains(m[0] * m[2]));
}

TEST_CASE("group order") {
  CHECK(fx::sym4()->order() == 24);
  // chain order agrees with closure order
  std::mt19937 rng(7);
  auto s6 = Group::permutations(6, std::vector<Permutation>{P("(1,2)", 6), P("(1,2,3,4,5,6)", 6)});
  for (int trial = 0; trial < 30; ++trial) {
    auto h = random_subgroup(rng, s6, 6);
    CHECK(h->order() == h->elements().size());
    for (const auto& x : h->elements()) REQUIRE(h->contains(x));
  }
}

TEST_CASE("closure on pair elements") {
  auto a = permutation_arithmetic(3);
  auto prod = product_arithmetic({a, a});
  auto g = Group::make(prod, {{"x", Element::tuple({P("(1,2)", 3), P("e", 3)})},
                              {"y", Element::tuple({P("(1,2,3)", 3), P("(1,2)", 3)})}});
  CHECK(g->order() == g->elements().size());
  CHECK(g->order() % 6 == 0);
  {
    ScopedCaps small(Caps{.closure = 3});
    auto h = Group::make(prod, {{"x", Element::tuple({P("(1,2,3)", 3), P("(1,2)", 3)})}});
    CHECK_THROWS_AS(h->order(), CapExceeded);
  }
}

TEST_CASE("membership") {
  auto s4 = fx::sym4();
  auto h = fx::sub(s4, {P("(2,3)", 4), P("(3,4)", 4)});
  CHECK(h->contains(P("(2,3)", 4)));
  CHECK_FALSE(h->contains(P("(1,2)", 4)));
  CHECK(h->contains(P("e", 4)));
  CHECK(h->order() == 6);
}

TEST_CASE("intersect") {
  auto s4 = fx::sym4();
  auto a = fx::sub(s4, {P("(1,2)", 4)});
  auto b = fx::sub(s4, {P("(3,4)", 4)});
  CHECK(intersect(*a, *b)->order() == 1);
  CHECK(same_subgroup(*intersect(*a, *a), *a));
  auto g2 = fx::sub(s4, {P("(1,2)", 4), P("(2,3)", 4)});
  auto g0 = fx::sub(s4, {P("(2,3)", 4), P("(3,4)", 4)});
  auto meet = intersect(*g2, *g0);
  CHECK(meet->order() == 2);
  CHECK(meet->contains(P("(2,3)", 4)));
}

TEST_CASE("product set") {
  auto s3 = Group::permutations(3, std::vector<Permutation>{P("(1,2)", 3), P("(2,3)", 3)});
  auto a = fx::sub(s3, {P("(1,2)", 3)});
  auto b = fx::sub(s3, {P("(2,3)", 3)});
  CHECK(product_set(*a, *b).size() == 4);
  CHECK(product_set(*a, *Group::trivial(s3->arithmetic_ptr())) == a->elements());
  auto s4 = fx::sym4();
  auto g0 = fx::sub(s4, {P("(2,3)", 4), P("(3,4)", 4)});
  auto g2 = fx::sub(s4, {P("(1,2)", 4), P("(2,3)", 4)});
  CHECK(product_set(*g0, *g2).size() == 18);  // 6*6/2
  ScopedCaps small(Caps{.product = 10});
  CHECK_THROWS_AS(product_set(*g0, *g2), CapExceeded);
}

TEST_CASE("transversal") {
  auto s4 = fx::sym4();
  CHECK(left_transversal(*s4, *s4) == std::vector<Element>{s4->identity()});
  auto g3 = fx::sub(s4, {P("(1,2)", 4), P("(2,3)", 4)});
  auto reps = left_transversal(*s4, *g3);
  CHECK(reps.size() == 4);
  for (const auto& r : reps) CHECK(canonical_coset_rep(*g3, r) == r);
}

TEST_CASE("conjugate") {
  auto s4 = fx::sym4();
  Element tau = P("(1,4)(2,3)", 4);
  auto g0 = fx::sub(s4, {P("(2,3)", 4), P("(3,4)", 4)});
  auto g2 = fx::sub(s4, {P("(1,2)", 4), P("(2,3)", 4)});
  CHECK(same_subgroup(*conjugate(*g0, tau), *g2));
  CHECK(same_subgroup(*conjugate(*g0, s4->identity()), *g0));
  auto r1 = fx::sub(s4, {P("(2,3)", 4)});
  CHECK(same_subgroup(*conjugate(*r1, tau), *r1));
  CHECK(code_of([&] { conjugate(*r1, P("(1,2)", 5)); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("automorphism from images") {
  auto s4 = fx::sym4();
  auto id = automorphism_from_images(s4, {{"r0", P("(1,2)", 4)}, {"r1", P("(2,3)", 4)}, {"r2", P("(3,4)", 4)}});
  CHECK(id.is_inner());
  auto dual = automorphism_from_images(s4, {{"r0", P("(3,4)", 4)}, {"r1", P("(2,3)", 4)}, {"r2", P("(1,2)", 4)}});
  REQUIRE(dual.is_inner());
  Element w = *dual.inner_witness();
  CHECK(w == Element(P("(1,4)(2,3)", 4)));
  for (const auto& x : s4->elements())
    CHECK(dual(x) == s4->multiply(s4->multiply(s4->inverse(w), x), w));
  CHECK(code_of([&] {
          automorphism_from_images(s4, {{"r0", P("(2,3)", 4)}, {"r1", P("(1,2)", 4)}, {"r2", P("(3,4)", 4)}});
        }) == ErrorCode::NotAHomomorphism);
  CHECK(code_of([&] {
          automorphism_from_images(s4, {{"r0", P("e", 4)}, {"r1", P("e", 4)}, {"r2", P("e", 4)}});
        }) == ErrorCode::NotBijective);
  auto skipped = automorphism_from_images(s4, {{"r0", P("(3,4)", 4)}, {"r1", P("(2,3)", 4)}, {"r2", P("(1,2)", 4)}},
                                          false);
  CHECK_FALSE(skipped.inner_searched());
}

TEST_CASE("property: subgroup algebra in Sym(5)") {
  std::mt19937 rng(20240101);
  auto s5 = Group::permutations(5, std::vector<Permutation>{P("(1,2)", 5), P("(1,2,3,4,5)", 5)});
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_subgroup(rng, s5, 5);
    auto k = random_subgroup(rng, s5, 5);
    auto hk = intersect(*h, *k);
    auto kh = intersect(*k, *h);
    CHECK(hk->elements() == kh->elements());
    for (int s = 0; s < 10; ++s) {
      Element g = random_perm(rng, 5);
      CHECK(hk->contains(g) == (h->contains(g) && k->contains(g)));
      CHECK(s5->multiply(g, s5->inverse(g)) == s5->identity());
    }
    CHECK(product_set(*h, *k).size() * hk->order() == h->order() * k->order());
    auto reps = left_transversal(*s5, *h);
    CHECK(reps.size() * h->order() == 120);
    std::set<Element> canon;
    for (const auto& r : reps) canon.insert(canonical_coset_rep(*h, r));
    CHECK(canon.size() == reps.size());
    Element g = random_perm(rng, 5);
    CHECK(same_subgroup(*conjugate(*conjugate(*h, g), s5->inverse(g)), *h));
    Element x = random_perm(rng, 5), y = random_perm(rng, 5), z = random_perm(rng, 5);
    CHECK(s5->multiply(s5->multiply(x, y), z) == s5->multiply(x, s5->multiply(y, z)));
  }
}
