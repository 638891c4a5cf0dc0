#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zgr/catalog.hpp"
#include "zgr/groupspec.hpp"

using namespace zgr;

TEST_CASE("parsing a product spec") {
  GroupSpec s = parse_spec("product(quaternion(8), elemab(2,2))");
  CHECK(s.kind == GroupSpec::Kind::product);
  CHECK(s.print() == "product(quaternion(8),elemab(2,2))");
  CHECK(build_group(s)->order() == 32);
}

TEST_CASE("permutation specs close to the expected group") {
  GroupSpec s = parse_spec("perm[(1 2),(1 2 3)]");
  auto g = build_group(s);
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  // same Cayley table as the built-in sym(3)
  CHECK(g->canonical_hash() == build_sym(3)->canonical_hash());
}

TEST_CASE("multi-cycle permutation generators") {
  auto g = build_group(parse_spec("perm[(1 2)(3 4),(1 3)(2 4)]"));
  CHECK(g->order() == 4);
  CHECK(g->exponent() == 2);
}

TEST_CASE("identity permutation gives the trivial group") {
  CHECK(build_group(parse_spec("perm[()]"))->order() == 1);
}

TEST_CASE("bad specs report positional errors") {
  CHECK_THROWS_AS(parse_spec("cyclic(0)"), ParseError);  // order >= 1
  CHECK_THROWS_AS(parse_spec("quaternion(16)"), ParseError);
  CHECK_THROWS_AS(parse_spec("unknown(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("cyclic(3"), ParseError);
  CHECK_THROWS_AS(parse_spec("cyclic(3))"), ParseError);
  CHECK_THROWS_AS(parse_spec("product(cyclic(2))"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("perm[(0 1)]"), ParseError);  // points are 1-based
  try {
    parse_spec("cyclic(x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 7);
  }
}


TEST_CASE("specs round-trip through print and parse") {
  for (const char* text :
       {"cyclic(12)", "elemab(3,2)", "dihedral(7)", "quaternion(8)", "sym(4)", "alt(4)",
        "product(cyclic(2),product(cyclic(3),cyclic(5)))", "perm[(1 2),(1 2 3)]",
        "perm[(1 2)(3 4)]", "perm[()]"}) {
    GroupSpec once = parse_spec(text);
    GroupSpec twice = parse_spec(once.print());
    CHECK(once == twice);
    CHECK(once.print() == twice.print());
  }
  // whitespace does not change the parse
  CHECK(parse_spec(" product( cyclic(2) ,  elemab(2, 2) ) ") ==
        parse_spec("product(cyclic(2),elemab(2,2))"));
}

TEST_CASE("catalog covers the expected families") {
  auto entries = catalog(16);
  CHECK(entries.size() >= 20);
  bool has_q8 = false, has_s3 = false;
  for (const auto& e : entries) {
    if (e.spec == "quaternion(8)") has_q8 = true;
    if (e.spec == "sym(3)") has_s3 = true;
    CHECK(e.group->order() <= 16);
  }
  CHECK(has_q8);
  CHECK(has_s3);

  auto tiny = catalog(1);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].group->order() == 1);
}

TEST_CASE("catalog entries are unique by table hash and sorted") {
  auto entries = catalog(20);
  for (std::size_t i = 1; i < entries.size(); ++i) {
    CHECK(entries[i - 1].group->order() <= entries[i].group->order());
    CHECK(entries[i - 1].group->canonical_hash() != entries[i].group->canonical_hash());
  }
}
