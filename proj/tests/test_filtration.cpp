#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "zgr/catalog.hpp"
#include "zgr/filtration.hpp"
#include "zgr/units.hpp"

using namespace zgr;

namespace {

std::vector<int> order_divides(const FiniteGroup& g, long n) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (n % g.element_order(x) == 0) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("chain of cyclic(2): powers halve, never stabilize") {
  auto c2 = build_cyclic(2);
  DeltaChain chain(c2, 3);
  CHECK(chain.computed_depth() == 3);
  CHECK_FALSE(chain.stabilized_at());
  // the n-th power is 2^{n-1} times the first
  CHECK(chain.at(1).basis() == ZMat{{1, -1}});
  CHECK(chain.at(2).basis() == ZMat{{2, -2}});
  CHECK(chain.at(3).basis() == ZMat{{4, -4}});
  for (int n = 1; n <= 2; ++n) {
    REQUIRE(chain.quotient_invariants(n).size() == 1);
    CHECK(chain.quotient_invariants(n)[0] == 2);
  }
}

TEST_CASE("chain of cyclic(6): quotients stay cyclic(6), no stabilization") {
  auto c6 = build_cyclic(6);
  DeltaChain chain(c6, 12);
  // every level drops by a factor 6: the chain strictly decreases forever
  CHECK_FALSE(chain.stabilized_at());
  for (int n = 1; n <= chain.quotient_count(); ++n) {
    REQUIRE(chain.quotient_invariants(n).size() == 1);
    CHECK(chain.quotient_invariants(n)[0] == 6);
  }
  // (t^3 - 1)(t^2 - 1) nevertheless lies in every computed power
  GroupRingElement one = GroupRingElement::one(c6);
  GroupRingElement x = (GroupRingElement::basis(c6, 3) - one) * (GroupRingElement::basis(c6, 2) - one);
  DeltaDepth d = chain.depth_of(x);
  CHECK(d.observed == 12);
  CHECK(d.at_cap);
}

TEST_CASE("a perfect group stabilizes at the first power") {
  auto a5 = build_alt(5);
  DeltaChain chain(a5, 4);
  REQUIRE(chain.stabilized_at() == 1);  // the soundness recheck ran inside
  CHECK(chain.at(1).rank() == 59);
  CHECK(chain.at(4) == chain.at(1));
  // D_omega is the whole group here: gamma_n = G sits in every D_n
  auto rep = dimension_series_report(a5, 4, false);
  CHECK(rep.d_omega_known);
  CHECK(rep.d_omega->is_whole());
}

TEST_CASE("chain of the trivial group has rank zero") {
  DeltaChain chain(build_cyclic(1), 3);
  CHECK(chain.at(1).rank() == 0);
  CHECK(chain.stabilized_at() == 1);
}

TEST_CASE("depth caps are enforced") {
  Config cfg;
  cfg.depth_cap = 8;
  CHECK_THROWS_AS(DeltaChain(build_cyclic(2), 9, cfg), ConfigError);
  CHECK_THROWS_AS(DeltaChain(build_cyclic(2), 0, cfg), PreconditionError);
}

TEST_CASE("depth of g-1 for g in gamma_2 is at least 2") {
  for (const auto& e : catalog(12)) {
    auto lcs = lower_central_series(e.group);
    DeltaChain chain(e.group, 3);
    for (int x : lcs.at(2).elements()) {
      if (x == 0) continue;
      GroupRingElement diff =
          GroupRingElement::basis(e.group, x) - GroupRingElement::one(e.group);
      CAPTURE(e.spec);
      CHECK(chain.member(diff, 2));
    }
  }
}

TEST_CASE("depth of 1 is zero") {
  auto g = build_sym(3);
  DeltaChain chain(g, 4);
  DeltaDepth d = chain.depth_of(GroupRingElement::one(g));
  CHECK(d.observed == 0);
  CHECK_FALSE(d.omega);
}

TEST_CASE("coprime-order product of differences lies deep in alt(4)") {
  auto a4 = build_alt(4);
  int g3 = -1, g2 = -1;
  for (int x = 1; x < a4->order(); ++x) {
    if (g3 < 0 && a4->element_order(x) == 3) g3 = x;
    if (g2 < 0 && a4->element_order(x) == 2) g2 = x;
  }
  GroupRingElement one = GroupRingElement::one(a4);
  GroupRingElement x = (GroupRingElement::basis(a4, g3) - one) *
                       (GroupRingElement::basis(a4, g2) - one);
  DeltaChain chain(a4, 10);
  DeltaDepth d = chain.depth_of(x);
  CHECK((d.omega || d.observed >= 10));
}

TEST_CASE("first dimension subgroup is the whole group") {
  for (const auto& e : catalog(10)) {
    DeltaChain chain(e.group, 1);
    CHECK(dimension_subgroup(chain, 1).is_whole());
  }
}

TEST_CASE("second dimension subgroup of sym(3) is alt(3)") {
  auto g = build_sym(3);
  DeltaChain chain(g, 2);
  CHECK(dimension_subgroup(chain, 2).elements() == order_divides(*g, 3));
}

TEST_CASE("third dimension subgroup of quaternion(8) is trivial") {
  auto q8 = build_quaternion8();
  DeltaChain chain(q8, 3);
  CHECK(dimension_subgroup(chain, 3).is_trivial());
}

TEST_CASE("dimension subgroups match the lower central series up to n = 3") {
  for (const auto& e : catalog(16)) {
    CAPTURE(e.spec);
    DeltaChain chain(e.group, 3);
    auto lcs = lower_central_series(e.group);
    for (int n = 1; n <= 3; ++n) CHECK(dimension_subgroup(chain, n) == lcs.at(n));
  }
}

TEST_CASE("rational dimension subgroups collapse to the whole group") {
  CHECK(rational_dimension_subgroup(build_sym(3), 5).is_whole());
  CHECK(rational_dimension_subgroup(build_cyclic(1), 3).is_whole());
  auto c2 = build_cyclic(2);
  CHECK(rational_dimension_subgroup(c2, 2).is_whole());
  CHECK(rational_delta_power(c2, 1).rank() == 1);
  CHECK(rational_delta_power(c2, 2).rank() == 1);
}

TEST_CASE("unit order modulo the first power is always 1") {
  auto g = build_sym(3);
  DeltaChain chain(g, 2);
  CHECK(unit_order_mod_delta(GroupRingElement::basis(g, 3), chain, 1) == 1);
}

TEST_CASE("order of the cyclic(2) generator modulo the second power is 2") {
  auto c2 = build_cyclic(2);
  DeltaChain chain(c2, 2);
  CHECK(unit_order_mod_delta(GroupRingElement::basis(c2, 1), chain, 2) == 2);
}

TEST_CASE("bass unit on cyclic(5) has a verified finite order modulo the third power") {
  auto c5 = build_cyclic(5);
  UnitRecord u = bass_unit(c5, 1, 2, 4);
  DeltaChain chain(c5, 3);
  mpz_class m = unit_order_mod_delta(u.element, chain, 3);
  CHECK(m > 0);
  GroupRingElement pow = GroupRingElement::one(c5);
  for (mpz_class i = 0; i < m; ++i) pow = pow * u.element;
  CHECK(chain.member(pow - GroupRingElement::one(c5), 3));
  // and no smaller exponent works
  GroupRingElement partial = GroupRingElement::one(c5);
  for (mpz_class i = 1; i < m; ++i) {
    partial = partial * u.element;
    CHECK_FALSE(chain.member(partial - GroupRingElement::one(c5), 3));
  }
}

TEST_CASE("order modulo delta rejects elements of augmentation other than 1") {
  auto c2 = build_cyclic(2);
  DeltaChain chain(c2, 3);
  auto aug0 = GroupRingElement::basis(c2, 1) - GroupRingElement::one(c2);
  CHECK_THROWS_AS(unit_order_mod_delta(aug0, chain, 2), PreconditionError);
  // every augmentation-one element has finite order modulo a power: the
  // image of the augmentation ideal in the quotient ring is nilpotent.
  // 2t - 1 is no unit of the full ring, yet (2t-1)^2 = 1 mod the third power.
  auto x = GroupRingElement::from_coeffs(c2, {{0, -1}, {1, 2}});
  CHECK(unit_order_mod_delta(x, chain, 3) == 2);
}

TEST_CASE("p-group quotient invariants are p-powers") {
  for (const auto& e : catalog(16)) {
    long n = e.group->order();
    int p = 0;
    for (int d = 2; d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    if (p == 0) continue;
    long m = n;
    while (m % p == 0) m /= p;
    if (m != 1) continue;  // not a p-group
    CAPTURE(e.spec);
    DeltaChain chain(e.group, 6);
    for (int lev = 1; lev <= chain.quotient_count(); ++lev)
      for (const auto& f : chain.quotient_invariants(lev)) {
        mpz_class v = f;
        while (v % p == 0) v /= p;
        CHECK(v == 1);
      }
  }
}

TEST_CASE("iterative chain equals the pairwise-product oracle") {
  for (const auto& e : catalog(12)) {
    CAPTURE(e.spec);
    DeltaChain chain(e.group, 4);
    for (int n = 1; n <= std::min(4, chain.computed_depth()); ++n)
      CHECK(delta_power_by_products(e.group, n) == chain.at(n));
  }
}

TEST_CASE("dimension series report settles d-omega when possible") {
  auto rep6 = dimension_series_report(build_cyclic(6), 12, false);
  CHECK(rep6.d_omega_known);
  CHECK(rep6.d_omega->is_trivial());  // D_2 = gamma_2 = 1 for abelian groups

  auto rep_q8 = dimension_series_report(build_quaternion8(), 6, false);
  CHECK(rep_q8.d_omega_known);
  CHECK(rep_q8.d_omega->is_trivial());

  auto rep_s3 = dimension_series_report(build_sym(3), 10, true);
  // alt(3) sits inside every computed dimension subgroup
  for (const auto& d : rep_s3.d_series) CHECK(d.order() >= 3);
  for (const auto& r : rep_s3.rational_d_series) CHECK(r.is_whole());
  nlohmann::json j = rep_s3.to_json();
  CHECK(j["d_series"].size() == 10);
}

TEST_CASE("gamma_n is contained in the n-th dimension subgroup") {
  for (const auto& e : catalog(12)) {
    CAPTURE(e.spec);
    DeltaChain chain(e.group, 5);
    auto lcs = lower_central_series(e.group);
    for (int n = 1; n <= 5; ++n) {
      if (!chain.stabilized_at() && n > chain.computed_depth()) break;
      CHECK(dimension_subgroup(chain, n).contains_subgroup(lcs.at(n)));
    }
  }
}
