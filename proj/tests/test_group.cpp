#include <doctest.h>

#include <random>
#include <set>

#include "qcx/group.hpp"
#include "test_util.hpp"

using namespace qcx;

TEST_CASE("multiply matches a brute-force composition table on S_3") {
  auto s3 = GroupSpec::symmetric(3);
  auto elements = enumerate_elements(s3, 100);
  REQUIRE(elements.size() == 6);
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      auto expected = testutil::compose_oneline(a.payload, b.payload);
      CHECK(multiply(a, b).payload == expected);
    }
  }
  // (12)·(23) = (123), i.e. one-line [2,3,1].
  auto t12 = parse_element(s3, "(1 2)");
  auto t23 = parse_element(s3, "(2 3)");
  CHECK(multiply(t12, t23).payload == std::vector<std::int64_t>{2, 3, 1});
}

TEST_CASE("identity is neutral for random S_5 elements") {
  auto s5 = GroupSpec::symmetric(5);
  auto elements = enumerate_elements(s5, 1000);
  auto e = identity(s5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto g = testutil::random_element(elements, rng);
    CHECK(multiply(e, g) == g);
    CHECK(multiply(g, e) == g);
  }
}

TEST_CASE("cyclic arithmetic") {
  auto z5 = GroupSpec::cyclic(5);
  CHECK(multiply(make_element(z5, {3}), make_element(z5, {4})).payload[0] == 2);
  auto z7 = GroupSpec::cyclic(7);
  CHECK(inverse(make_element(z7, {3})).payload[0] == 4);
}

TEST_CASE("inverse found by composition-table search") {
  auto s3 = GroupSpec::symmetric(3);
  auto elements = enumerate_elements(s3, 100);
  auto e = identity(s3);
  for (const auto& a : elements) {
    GroupElement found = e;
    for (const auto& b : elements) {
      if (multiply(a, b) == e) found = b;
    }
    CHECK(inverse(a) == found);
  }
  auto c123 = parse_element(s3, "(1 2 3)");
  auto c132 = parse_element(s3, "(1 3 2)");
  CHECK(inverse(c123) == c132);
  CHECK(inverse(e) == e);
}

TEST_CASE("inverse of inverse is the identity map") {
  auto s5 = GroupSpec::symmetric(5);
  auto elements = enumerate_elements(s5, 1000);
  for (const auto& g : elements) CHECK(inverse(inverse(g)) == g);
}

TEST_CASE("associativity on a random sample from S_5") {
  auto s5 = GroupSpec::symmetric(5);
  auto elements = enumerate_elements(s5, 1000);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto a = testutil::random_element(elements, rng);
    auto b = testutil::random_element(elements, rng);
    auto c = testutil::random_element(elements, rng);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("enumeration is complete, canonical, and capped") {
  CHECK(enumerate_elements(GroupSpec::symmetric(3), 100).size() == 6);
  auto z4 = enumerate_elements(GroupSpec::cyclic(4), 100);
  REQUIRE(z4.size() == 4);
  for (std::int64_t i = 0; i < 4; ++i) CHECK(z4[static_cast<std::size_t>(i)].payload[0] == i);
  CHECK_THROWS_AS(enumerate_elements(GroupSpec::symmetric(13), 10000000), std::runtime_error);

  auto d4 = enumerate_elements(GroupSpec::dihedral(4), 100);
  CHECK(d4.size() == 8);
  auto prod = enumerate_elements(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}), 100);
  CHECK(prod.size() == 6);
  // Canonical order is payload-lexicographic.
  for (std::size_t i = 1; i < prod.size(); ++i) CHECK(prod[i - 1] < prod[i]);
}

TEST_CASE("closure finds generated subgroups") {
  auto s3 = GroupSpec::symmetric(3);
  auto full = closure(make_generator_set(s3, {parse_element(s3, "(1 2)"), parse_element(s3, "(1 2 3)")}), 100);
  CHECK(full.elements.size() == 6);
  CHECK(full.generates_full_group);

  auto a3 = closure(make_generator_set(s3, {parse_element(s3, "(1 2 3)")}), 100);
  CHECK(a3.elements.size() == 3);
  CHECK_FALSE(a3.generates_full_group);

  auto only_e = closure(make_generator_set(s3, {identity(s3)}), 100);
  CHECK(only_e.elements.size() == 1);
  CHECK_FALSE(only_e.generates_full_group);
}

TEST_CASE("closure is independent of generator order") {
  auto s4 = GroupSpec::symmetric(4);
  auto a = parse_element(s4, "(1 2)");
  auto b = parse_element(s4, "(1 2 3 4)");
  auto c = parse_element(s4, "(2 3)");
  auto r1 = closure(make_generator_set(s4, {a, b, c}), 1000);
  auto r2 = closure(make_generator_set(s4, {c, a, b}), 1000);
  CHECK(r1.elements == r2.elements);  // both canonical order
}

TEST_CASE("symmetrize collapses duplicates and adds inverses") {
  auto z5 = GroupSpec::cyclic(5);
  auto sym = symmetrize(make_generator_set(z5, {make_element(z5, {1})}));
  REQUIRE(sym.elements.size() == 2);
  CHECK(sym.elements[0].payload[0] == 1);
  CHECK(sym.elements[1].payload[0] == 4);

  auto s3 = GroupSpec::symmetric(3);
  auto invol = symmetrize(make_generator_set(s3, {parse_element(s3, "(1 2)")}));
  CHECK(invol.elements.size() == 1);

  auto cyc = symmetrize(make_generator_set(s3, {parse_element(s3, "(1 2 3)")}));
  REQUIRE(cyc.elements.size() == 2);
  CHECK(cyc.elements[1] == parse_element(s3, "(1 3 2)"));
}

TEST_CASE("element parsing") {
  auto s4 = GroupSpec::symmetric(4);
  CHECK(parse_element(s4, "(1 2 3)").payload == std::vector<std::int64_t>{2, 3, 1, 4});
  CHECK(parse_element(s4, "()") == identity(s4));
  CHECK(parse_element(s4, "[2,1,4,3]").payload == std::vector<std::int64_t>{2, 1, 4, 3});
  CHECK(parse_element(s4, "(1 2)(3 4)").payload == std::vector<std::int64_t>{2, 1, 4, 3});
  auto s3 = GroupSpec::symmetric(3);
  CHECK_THROWS_AS(parse_element(s3, "(1 5)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(s3, "[2,2,1]"), std::invalid_argument);

  auto z9 = GroupSpec::cyclic(9);
  CHECK(parse_element(z9, "+1").payload[0] == 1);
  CHECK(parse_element(z9, "-1").payload[0] == 8);

  auto d6 = GroupSpec::dihedral(6);
  CHECK(parse_element(d6, "e") == identity(d6));
  CHECK(parse_element(d6, "r^2").payload == std::vector<std::int64_t>{0, 2});
  CHECK(parse_element(d6, "s").payload == std::vector<std::int64_t>{1, 0});
  CHECK(parse_element(d6, "s*r^5").payload == std::vector<std::int64_t>{1, 5});
  CHECK(parse_element(d6, "s\xC2\xB7r^3").payload == std::vector<std::int64_t>{1, 3});

  auto prod = GroupSpec::product({GroupSpec::symmetric(3), GroupSpec::cyclic(4)});
  auto g = parse_element(prod, "((1 2); 3)");
  CHECK(g.payload == std::vector<std::int64_t>{2, 1, 3, 3});
}

TEST_CASE("parse round-trips through the canonical formatter") {
  std::mt19937_64 rng(23);
  std::vector<GroupSpec> specs = {GroupSpec::symmetric(5), GroupSpec::cyclic(12),
                                  GroupSpec::dihedral(7),
                                  GroupSpec::product({GroupSpec::symmetric(3), GroupSpec::dihedral(4)})};
  for (const auto& spec : specs) {
    auto elements = enumerate_elements(spec, kDefaultEnumCap);
    for (int i = 0; i < 100; ++i) {
      auto g = testutil::random_element(elements, rng);
      CHECK(parse_element(spec, format_element(g)) == g);
    }
  }
}

TEST_CASE("group orders are exact") {
  CHECK(GroupSpec::symmetric(13).order().to_string() == "6227020800");
  CHECK(GroupSpec::symmetric(30).order().to_string() == "265252859812191058636308480000000");
  CHECK(GroupSpec::dihedral(12).order_u64() == 24);
  CHECK(GroupSpec::product({GroupSpec::symmetric(4), GroupSpec::cyclic(5)}).order_u64() == 120);
}

TEST_CASE("mixed-group operations are rejected") {
  auto a = identity(GroupSpec::cyclic(4));
  auto b = identity(GroupSpec::cyclic(5));
  CHECK_THROWS_AS(multiply(a, b), std::invalid_argument);
  CHECK_THROWS_AS(make_generator_set(GroupSpec::cyclic(5), {a}), std::invalid_argument);
  CHECK_THROWS_AS(make_generator_set(GroupSpec::cyclic(5), {}), std::invalid_argument);
}
