#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "zgr/catalog.hpp"
#include "zgr/group.hpp"

using namespace zgr;

namespace {

// independent oracle: commutator closure by plain set saturation
std::vector<int> naive_commutator_subgroup(const FiniteGroup& g, const std::vector<int>& from) {
  std::set<int> s{0};
  for (int x : from)
    for (int y = 0; y < g.order(); ++y) s.insert(g.commutator(x, y));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

std::vector<int> elements_with_cube_one(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.power(x, 3) == 0) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclic(1) is the trivial group") {
  auto g = build_cyclic(1);
  CHECK(g->order() == 1);
  CHECK(g->exponent() == 1);
  CHECK(g->is_abelian());
}

TEST_CASE("quaternion(8) has exactly one involution") {
  auto q = build_quaternion8();
  CHECK(q->order() == 8);
  int involutions = 0;
  for (int x = 0; x < 8; ++x)
    if (q->element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(q->exponent() == 4);
  CHECK_FALSE(q->is_abelian());
}

TEST_CASE("product(quaternion(8), elemab(2,1)) has order 16") {
  auto p = build_product(build_quaternion8(), build_elemab(2, 1));
  CHECK(p.group->order() == 16);
  CHECK(p.group->exponent() == 4);
}

TEST_CASE("group laws hold exhaustively on the catalog") {
  for (const auto& e : catalog(16)) {
    CAPTURE(e.spec);
    const auto& g = *e.group;
    for (int i = 0; i < g.order(); ++i) {
      CHECK(g.mul(0, i) == i);
      CHECK(g.mul(i, 0) == i);
      CHECK(g.mul(i, g.inv(i)) == 0);
    }
    CHECK_NOTHROW(g.check_associativity());
  }
}

TEST_CASE("order cap is enforced") {
  Config cfg;
  cfg.order_cap = 100;
  CHECK_THROWS_AS(build_cyclic(101, cfg), SizeError);
  CHECK_THROWS_AS(build_sym(5, cfg), SizeError);
  CHECK_THROWS_AS(build_product(build_cyclic(20, cfg), build_cyclic(20, cfg), cfg), SizeError);
}

TEST_CASE("lower central series of sym(3)") {
  auto g = build_sym(3);
  auto lcs = lower_central_series(g);
  REQUIRE(lcs.terms.size() == 3);
  CHECK(lcs.terms[0].order() == 6);
  CHECK(lcs.terms[1].order() == 3);
  CHECK(lcs.terms[2] == lcs.terms[1]);  // stable tail witnessed by repetition
  CHECK(lcs.terms[1].elements() == elements_with_cube_one(*g));
  CHECK(lcs.terms[1].elements() == naive_commutator_subgroup(*g, lcs.terms[0].elements()));
  CHECK_FALSE(lcs.nilpotent());
  CHECK(lcs.stabilization_index() == 2);
}

TEST_CASE("lower central series of quaternion(8) reaches {1} at gamma_3") {
  auto g = build_quaternion8();
  auto lcs = lower_central_series(g);
  REQUIRE(lcs.terms.size() == 3);
  CHECK(lcs.terms[1].order() == 2);
  CHECK(lcs.terms[2].is_trivial());
  CHECK(lcs.nilpotency_class() == 2);
}

TEST_CASE("lower central series of an abelian group stops at {1} immediately") {
  auto lcs = lower_central_series(build_cyclic(6));
  REQUIRE(lcs.terms.size() == 2);
  CHECK(lcs.terms[0].order() == 6);
  CHECK(lcs.terms[1].is_trivial());
  CHECK(lcs.nilpotency_class() == 1);
}

TEST_CASE("gamma terms are normal and descending on the catalog") {
  for (const auto& e : catalog(16)) {
    CAPTURE(e.spec);
    auto lcs = lower_central_series(e.group);
    for (std::size_t i = 0; i < lcs.terms.size(); ++i) {
      CHECK(lcs.terms[i].is_normal());
      if (i > 0) CHECK(lcs.terms[i - 1].contains_subgroup(lcs.terms[i]));
    }
  }
}

TEST_CASE("power series subgroups of sym(3)") {
  auto g = build_sym(3);
  auto a3 = elements_with_cube_one(*g);
  CHECK(power_series_subgroup(g, 2, 1, 2).elements() == a3);  // squares generate alt(3)
  CHECK(power_series_subgroup(g, 3, 1, 2).is_whole());        // cubes of transpositions survive
}

TEST_CASE("power series subgroup with l = 1 is the whole group") {
  auto g = build_cyclic(2);
  CHECK(power_series_subgroup(g, 2, 1, 1).is_whole());
}

TEST_CASE("gamma_l G^{p^k} is monotone non-increasing in l and k") {
  for (const auto& e : catalog(12)) {
    CAPTURE(e.spec);
    auto lcs = lower_central_series(e.group);
    for (int p : {2, 3}) {
      Subgroup prev_l = power_series_subgroup(e.group, lcs, p, 1, 1);
      for (int l = 2; l <= 6; ++l) {
        Subgroup cur = power_series_subgroup(e.group, lcs, p, 1, l);
        CHECK(prev_l.contains_subgroup(cur));
        prev_l = cur;
      }
      Subgroup prev_k = power_series_subgroup(e.group, lcs, p, 1, 2);
      for (int k = 2; k <= 6; ++k) {
        Subgroup cur = power_series_subgroup(e.group, lcs, p, k, 2);
        CHECK(prev_k.contains_subgroup(cur));
        prev_k = cur;
      }
    }
  }
}

TEST_CASE("structural report examples") {
  auto c6 = structural_report(build_cyclic(6));
  CHECK(c6.exponent == 6);
  CHECK(c6.abelian);
  CHECK(c6.nilpotency_class == 1);
  CHECK(c6.abelianization == std::vector<long>{6});

  auto q8 = structural_report(build_quaternion8());
  CHECK(q8.exponent == 4);
  CHECK(q8.nilpotency_class == 2);
  CHECK(q8.center_order == 2);
  CHECK(q8.abelianization == std::vector<long>{2, 2});

  auto a4 = structural_report(build_alt(4));
  CHECK(a4.order == 12);
  CHECK(a4.exponent == 6);
  CHECK_FALSE(a4.nilpotent);
  CHECK(a4.gamma_orders.back() == 4);  // stabilizes at the Klein subgroup
}

TEST_CASE("products multiply orders and lcm exponents") {
  std::vector<GroupPtr> gs{build_cyclic(4), build_sym(3), build_quaternion8(), build_elemab(3, 1)};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      auto p = build_product(a, b);
      CHECK(p.group->order() == a->order() * b->order());
      CHECK(p.group->exponent() == std::lcm(a->exponent(), b->exponent()));
    }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(build_elemab(2, 3)) == std::vector<long>{2, 2, 2});
  CHECK(abelian_invariants(build_product(build_cyclic(2), build_cyclic(4)).group) ==
        std::vector<long>{2, 4});
  CHECK(abelian_invariants(build_cyclic(1)).empty());
  CHECK_THROWS_AS(abelian_invariants(build_sym(3)), PreconditionError);
}

TEST_CASE("quotient group projection is a homomorphism") {
  auto g = build_sym(3);
  auto lcs = lower_central_series(g);
  auto q = quotient_group(g, lcs.at(2));
  CHECK(q.quotient->order() == 2);
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      CHECK(q.projection[g->mul(a, b)] == q.quotient->mul(q.projection[a], q.projection[b]));
}

TEST_CASE("subgroup constructor rejects unclosed sets") {
  auto g = build_sym(3);
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 2) {
      transposition = x;
      break;
    }
  int three_cycle = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 3) {
      three_cycle = x;
      break;
    }
  CHECK_THROWS_AS(Subgroup(g, {0, transposition, three_cycle}), Error);
  CHECK_NOTHROW(Subgroup(g, {0, transposition}));
}

TEST_CASE("center of quaternion(8)") {
  auto z = center(build_quaternion8());
  CHECK(z.order() == 2);
  CHECK(z.is_normal());
}
