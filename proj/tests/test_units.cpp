#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "zgr/catalog.hpp"
#include "zgr/units.hpp"

using namespace zgr;

namespace {

bool normalizes_cyclic(const FiniteGroup& g, int x, int h) {
  std::vector<char> in_cyc(g.order(), 0);
  int c = 0;
  do {
    in_cyc[c] = 1;
    c = g.mul(c, x);
  } while (c != 0);
  return in_cyc[g.conj(x, h)];
}

int first_of_order(const FiniteGroup& g, int ord, int skip = -1) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == ord && x != skip) return x;
  return -1;
}

}  // namespace

TEST_CASE("bicyclic units on abelian groups are 1") {
  auto c6 = build_cyclic(6);
  for (int x = 1; x < 6; ++x)
    for (int h = 1; h < 6; ++h) {
      UnitRecord u = bicyclic_unit(c6, x, h);
      CHECK(u.trivial);
      CHECK(u.element.is_one());
    }
}

TEST_CASE("bicyclic unit on sym(3) from two transpositions is nontrivial") {
  auto g = build_sym(3);
  int a = first_of_order(*g, 2);
  int b = first_of_order(*g, 2, a);
  UnitRecord u = bicyclic_unit(g, a, b);
  CHECK_FALSE(u.trivial);
  CHECK_FALSE(u.element.is_one());
  CHECK((u.element * u.inverse).is_one());
}

TEST_CASE("coprime-order bicyclic unit on alt(4) lies in every computed power") {
  auto a4 = build_alt(4);
  int g3 = first_of_order(*a4, 3);
  int h2 = first_of_order(*a4, 2);
  UnitRecord u = bicyclic_unit(a4, g3, h2);
  REQUIRE_FALSE(u.trivial);
  DeltaChain chain(a4, 10);
  attach_depth(u, chain);
  CHECK(u.depth->observed == 10);
}

TEST_CASE("bicyclic triviality flag matches the normalizer test everywhere") {
  for (const auto& e : catalog(16)) {
    CAPTURE(e.spec);
    const auto& g = e.group;
    DeltaChain chain(g, 2);
    for (int x = 1; x < g->order(); ++x)
      for (int h = 1; h < g->order(); ++h) {
        UnitRecord u = bicyclic_unit(g, x, h);
        CHECK(u.trivial == normalizes_cyclic(*g, x, h));
        // every bicyclic unit sits at depth two or deeper
        CHECK(chain.member(u.element - GroupRingElement::one(g), 2));
      }
  }
}

TEST_CASE("bass unit coefficients on an order-5 generator") {
  auto c5 = build_cyclic(5);
  UnitRecord u = bass_unit(c5, 1, 2, 4);
  long expected[5] = {-2, 1, 3, 1, -2};
  for (int i = 0; i < 5; ++i) CHECK(u.element.coeff(i) == expected[i]);
  CHECK(u.element.augmentation() == 1);
  CHECK_FALSE(u.trivial);
}

TEST_CASE("bass unit with k = 1 is the identity") {
  auto c6 = build_cyclic(6);
  UnitRecord u = bass_unit(c6, 1, 1, 3);
  CHECK(u.element.is_one());
  CHECK(u.trivial);
}

TEST_CASE("bass unit with k = -1 mod n is flagged trivial") {
  auto c6 = build_cyclic(6);
  UnitRecord u = bass_unit(c6, 1, 5, 2);
  CHECK(u.trivial);
}

TEST_CASE("bass precondition k^m = 1 mod n is enforced") {
  auto c5 = build_cyclic(5);
  CHECK_THROWS_AS(bass_unit(c5, 1, 2, 3), PreconditionError);  // 8 != 1 mod 5
}

TEST_CASE("bass units exist for every admissible k on catalog groups") {
  for (const auto& e : catalog(12)) {
    const auto& g = e.group;
    for (int x = 1; x < g->order(); ++x) {
      long n = g->element_order(x);
      for (long k = 2; k <= n - 2; ++k) {
        if (std::gcd(k, n) != 1) continue;
        long m = 1, acc = k % n;
        while (acc != 1) {
          acc = acc * k % n;
          ++m;
        }
        UnitRecord u = bass_unit(g, x, k, m);
        CHECK(u.element.augmentation() == 1);
        CHECK((u.element * u.inverse).is_one());
      }
    }
  }
}

TEST_CASE("nilpotent search finds a square-zero element in sym(3)") {
  auto res = nilpotent_search(build_sym(3));
  REQUIRE(res.witness.has_value());
  CHECK_FALSE(res.witness->is_zero());
  CHECK((*res.witness * *res.witness).is_zero());
}

TEST_CASE("nilpotent search is definitive on abelian groups") {
  auto res = nilpotent_search(build_cyclic(12));
  CHECK(res.definitive_none);
  CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("nilpotent search finds nothing in quaternion(8)") {
  auto res = nilpotent_search(build_quaternion8());
  CHECK_FALSE(res.witness.has_value());
  CHECK_FALSE(res.definitive_none);  // bounded search, no nonexistence claim
}

TEST_CASE("nilpotent-based unit on sym(3) x cyclic(5)") {
  auto s3 = build_sym(3);
  auto res = nilpotent_search(s3);
  REQUIRE(res.witness.has_value());
  DirectProduct gh = build_product(s3, build_cyclic(5));
  UnitRecord u = nilpotent_based_unit(gh, *res.witness, 1);
  CHECK(*u.coprime_orders);
  CHECK_FALSE(u.trivial);
  DeltaChain chain(gh.group, 10);
  attach_depth(u, chain);
  CHECK(u.depth->observed == 10);
}

TEST_CASE("nilpotent-based unit with alpha = 0 is the identity") {
  auto s3 = build_sym(3);
  DirectProduct gh = build_product(s3, build_cyclic(5));
  UnitRecord u = nilpotent_based_unit(gh, GroupRingElement::zero(s3), 1);
  CHECK(u.element.is_one());
  CHECK(u.trivial);
}

TEST_CASE("nilpotent-based unit on non-coprime factors is still a unit") {
  auto s3 = build_sym(3);
  auto res = nilpotent_search(s3);
  REQUIRE(res.witness.has_value());
  DirectProduct gh = build_product(s3, build_cyclic(2));
  UnitRecord u = nilpotent_based_unit(gh, *res.witness, 1);
  CHECK_FALSE(*u.coprime_orders);
  CHECK((u.element * u.inverse).is_one());
  DeltaChain chain(gh.group, 6);
  attach_depth(u, chain);
  CHECK(u.depth->observed >= 1);  // empirical depth only, no claim
}

TEST_CASE("square-zero precondition is enforced") {
  auto s3 = build_sym(3);
  DirectProduct gh = build_product(s3, build_cyclic(5));
  auto not_nilpotent = GroupRingElement::one(s3);
  CHECK_THROWS_AS(nilpotent_based_unit(gh, not_nilpotent, 1), PreconditionError);
}

TEST_CASE("torsion probe returns the order of trivial units") {
  auto q8 = build_quaternion8();
  for (int x = 0; x < 8; ++x) {
    TorsionVerdict v = torsion_probe(trivial_unit(q8, x), 100);
    REQUIRE(v.order.has_value());
    CHECK(*v.order == q8->element_order(x));
  }
}

TEST_CASE("nontrivial bicyclic units show no torsion") {
  auto g = build_sym(3);
  int a = first_of_order(*g, 2);
  int b = first_of_order(*g, 2, a);
  UnitRecord u = bicyclic_unit(g, a, b);
  TorsionVerdict v = torsion_probe(u, 100);
  CHECK_FALSE(v.order.has_value());
}

TEST_CASE("1 + nu has no torsion for square-zero nu != 0") {
  auto s3 = build_sym(3);
  auto res = nilpotent_search(s3);
  REQUIRE(res.witness.has_value());
  GroupRingElement nu = *res.witness;
  UnitRecord u{GroupRingElement::one(s3) + nu, GroupRingElement::one(s3) - nu,
               Provenance{}, false, "", std::nullopt, std::nullopt};
  TorsionVerdict v = torsion_probe(u, 50);
  CHECK_FALSE(v.order.has_value());
  CHECK((u.element * u.inverse).is_one());  // (1+nu)(1-nu) = 1
}

TEST_CASE("unit records serialize with provenance and depth") {
  auto g = build_sym(3);
  int a = first_of_order(*g, 2);
  int b = first_of_order(*g, 2, a);
  UnitRecord u = bicyclic_unit(g, a, b);
  DeltaChain chain(g, 3);
  attach_depth(u, chain);
  auto j = u.to_json();
  CHECK(j["provenance"]["kind"] == "bicyclic");
  CHECK(j["trivial"] == false);
  CHECK(j["depth"]["observed"].get<int>() >= 2);
  CHECK(GroupRingElement::from_json(g, j["element"]) == u.element);
}
