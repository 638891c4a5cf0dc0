#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "zgr/catalog.hpp"
#include "zgr/ring.hpp"

using namespace zgr;

namespace {

GroupRingElement random_element(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> idx(0, g->order() - 1);
  std::map<int, mpz_class> coeffs;
  for (int t = 0; t < 4; ++t) coeffs[idx(rng)] = coeff(rng);
  return GroupRingElement::from_coeffs(g, std::move(coeffs));
}

}  // namespace

TEST_CASE("(g-1) ghat = 0") {
  for (const auto& e : catalog(12)) {
    const auto& g = e.group;
    for (int x = 1; x < g->order(); ++x) {
      GroupRingElement gm1 = GroupRingElement::basis(g, x) - GroupRingElement::one(g);
      CHECK((gm1 * group_sum(g, x)).is_zero());
      CHECK((group_sum(g, x) * gm1).is_zero());
    }
  }
}

TEST_CASE("in ZC2, (t-1)^2 = -2(t-1)") {
  auto c2 = build_cyclic(2);
  GroupRingElement tm1 = GroupRingElement::basis(c2, 1) - GroupRingElement::one(c2);
  GroupRingElement sq = tm1 * tm1;
  CHECK(sq == mpz_class(-2) * tm1);
}

TEST_CASE("one is a two-sided identity") {
  auto g = build_sym(3);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    GroupRingElement a = random_element(g, rng);
    CHECK(a * GroupRingElement::one(g) == a);
    CHECK(GroupRingElement::one(g) * a == a);
  }
}

TEST_CASE("augmentation is a ring map") {
  std::mt19937_64 rng(17);
  for (const auto& e : catalog(10)) {
    for (int t = 0; t < 10; ++t) {
      GroupRingElement a = random_element(e.group, rng);
      GroupRingElement b = random_element(e.group, rng);
      CHECK((a + b).augmentation() == a.augmentation() + b.augmentation());
      CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    }
  }
}

TEST_CASE("mixing group rings is rejected") {
  auto a = GroupRingElement::one(build_cyclic(3));
  auto b = GroupRingElement::one(build_cyclic(4));
  CHECK_THROWS_AS(a * b, PreconditionError);
  CHECK_THROWS_AS(a + b, PreconditionError);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(23);
  auto g = build_quaternion8();
  for (int t = 0; t < 20; ++t) {
    GroupRingElement a = random_element(g, rng);
    CHECK(GroupRingElement::from_json(g, a.to_json()) == a);
  }
  // big coefficients survive as decimal strings
  mpz_class big("123456789012345678901234567890");
  auto x = GroupRingElement::from_coeffs(g, {{3, big}});
  auto j = x.to_json();
  CHECK(j["coeffs"]["3"] == big.get_str());
  CHECK(GroupRingElement::from_json(g, j) == x);
  // wrong group hash is rejected
  CHECK_THROWS_AS(GroupRingElement::from_json(build_cyclic(5), j), PreconditionError);
}

TEST_CASE("inverse of a trivial unit") {
  auto g = build_sym(3);
  for (int x = 0; x < g->order(); ++x) {
    auto inv = inverse_in_ring(GroupRingElement::basis(g, x));
    REQUIRE(inv.has_value());
    CHECK(*inv == GroupRingElement::basis(g, g->inv(x)));
  }
}

TEST_CASE("inverse of 1 + nu for square-zero nu") {
  auto g = build_sym(3);
  // nu = (a-1) b ahat for two distinct transpositions a, b
  int a = -1, b = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 2) {
      if (a < 0)
        a = x;
      else if (b < 0)
        b = x;
    }
  GroupRingElement nu = (GroupRingElement::basis(g, a) - GroupRingElement::one(g)) *
                        GroupRingElement::basis(g, b) * group_sum(g, a);
  REQUIRE_FALSE(nu.is_zero());
  REQUIRE((nu * nu).is_zero());
  auto inv = inverse_in_ring(GroupRingElement::one(g) + nu);
  REQUIRE(inv.has_value());
  CHECK(*inv == GroupRingElement::one(g) - nu);
}

TEST_CASE("a bass-style element on cyclic(5) has an integral inverse") {
  auto g = build_cyclic(5);
  // (1+g)^4 - 3 ghat, coefficients (-2, 1, 3, 1, -2)
  std::map<int, mpz_class> m;
  long coeffs[5] = {-2, 1, 3, 1, -2};
  for (int i = 0; i < 5; ++i) m[i] = coeffs[i];
  GroupRingElement u = GroupRingElement::from_coeffs(g, std::move(m));
  CHECK(u.augmentation() == 1);
  auto inv = inverse_in_ring(u);
  REQUIRE(inv.has_value());
  CHECK((u * *inv).is_one());
  CHECK((*inv * u).is_one());
}

TEST_CASE("non-units have no inverse") {
  auto c2 = build_cyclic(2);
  // 2t - 1 has augmentation 1 but no integral inverse
  auto x = GroupRingElement::from_coeffs(c2, {{0, -1}, {1, 2}});
  CHECK_FALSE(inverse_in_ring(x).has_value());
  // zero divisor: (1+t)(1-t) = 0
  auto zd = GroupRingElement::from_coeffs(c2, {{0, 1}, {1, 1}});
  CHECK_FALSE(inverse_in_ring(zd).has_value());
}
