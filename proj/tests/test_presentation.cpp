#include "doctest.h"
#include "oracle.hpp"
#include "quandle/error.hpp"
#include "quandle/presentation.hpp"
#include "test_util.hpp"

#include <random>

using namespace quandle;

namespace {

QuandlePresentation trefoil() {
  QuandlePresentation p;
  for (const char* g : {"a", "b", "c"}) p.add_generator(g);
  p.add_relation(parse_element("c"), parse_element("a ^ b"));
  p.add_relation(parse_element("a"), parse_element("b ^ c"));
  p.add_relation(parse_element("b"), parse_element("c ^ a"));
  return p;
}

}  // namespace

TEST_CASE("presentation construction") {
  QuandlePresentation p;
  p.add_generator("x");
  CHECK_THROWS_AS(p.add_generator("x"), DomainError);
  CHECK_THROWS_AS(p.add_generator("bad name"), DomainError);
  CHECK_THROWS_AS(p.add_relation(parse_element("x"), parse_element("y")), DomainError);
  p.add_generator("y");
  p.add_relation(parse_element("x"), parse_element("x ^ y"));
  CHECK(p.index_of("y") == 1);
  CHECK(p.total_relation_length() == 3);
  QuandlePresentation q;
  q.add_generator("x");
  CHECK_THROWS_AS(p.append(q), DomainError);
}

TEST_CASE("trefoil counts") {
  const auto p = trefoil();
  CHECK(count_colorings(p, dihedral_quandle(3)).count == 9);
  CHECK(count_colorings(p, dihedral_quandle(5)).count == 5);
  CHECK(count_colorings(p, conjugation_quandle(symmetric_group(3))).count == 12);
}

TEST_CASE("empty and free presentations") {
  QuandlePresentation empty;
  CHECK(count_colorings(empty, dihedral_quandle(4)).count == 1);
  QuandlePresentation free2;
  free2.add_generator("x");
  free2.add_generator("y");
  CHECK(count_colorings(free2, dihedral_quandle(7)).count == 49);
  const auto kept = count_colorings(free2, dihedral_quandle(2), {true});
  CHECK(kept.colorings == std::vector<std::vector<Element>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("counts agree with full enumeration") {
  std::mt19937 rng(11);
  const auto battery = standard_battery();
  for (int trial = 0; trial < 120; ++trial) {
    const auto p = test::random_presentation(rng, 1 + rng() % 4, rng() % 5, 3);
    const auto& t = battery[rng() % battery.size()];
    const auto expected = oracle::colorings(p, t);
    CHECK(count_colorings(p, t).count == expected);
    CHECK(count_colorings(p, t, {false, 0, 1, false}).count == expected);
    const auto kept = count_colorings(p, t, {true});
    CHECK(kept.colorings.size() == expected);
    CHECK(std::is_sorted(kept.colorings.begin(), kept.colorings.end()));
  }
}

TEST_CASE("kept colorings satisfy every relation") {
  const auto p = trefoil();
  const auto s3 = conjugation_quandle(symmetric_group(3));
  const auto r = count_colorings(p, s3, {true});
  for (const auto& c : r.colorings) {
    std::map<std::string, Element> f{{"a", c[0]}, {"b", c[1]}, {"c", c[2]}};
    for (const auto& rel : p.relations()) CHECK(oracle::eval(rel.lhs, f, s3) == oracle::eval(rel.rhs, f, s3));
  }
}

TEST_CASE("results do not depend on the worker count") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = test::random_presentation(rng, 4, 3, 3);
    const auto t = dihedral_quandle(5);
    const auto one = count_colorings(p, t, {true, ColoringOptions::kDefaultKeepCap, 1});
    for (std::size_t w : {2u, 3u, 8u}) {
      const auto many = count_colorings(p, t, {true, ColoringOptions::kDefaultKeepCap, w});
      CHECK(many.count == one.count);
      CHECK(many.colorings == one.colorings);
    }
  }
}

TEST_CASE("keep cap truncates to the smallest colorings") {
  QuandlePresentation free3;
  for (const char* g : {"x", "y", "z"}) free3.add_generator(g);
  const auto full = count_colorings(free3, dihedral_quandle(4), {true});
  const auto capped = count_colorings(free3, dihedral_quandle(4), {true, 10, 4});
  CHECK(capped.count == 64);
  CHECK(capped.truncated);
  REQUIRE(capped.colorings.size() == 10);
  CHECK(std::equal(capped.colorings.begin(), capped.colorings.end(), full.colorings.begin()));
  CHECK_FALSE(full.truncated);
}

TEST_CASE("substitution") {
  CHECK(to_string(substitute(parse_element("x ^ g"), "g", parse_element("y ^ z"))) == "x ^ z' y z");
  CHECK(to_string(substitute(parse_element("g ^ x"), "g", parse_element("y ^ z"))) == "y ^ z x");
  CHECK(to_string(substitute(parse_element("x ^ g'"), "g", parse_element("y"))) == "x ^ y'");
  auto p = trefoil();
  const auto q = substitute(p, "c", parse_element("a ^ b"));
  CHECK(q.generators() == std::vector<std::string>{"a", "b"});
  for (const auto& t : standard_battery()) CHECK(count_colorings(q, t).count == count_colorings(p, t).count);
  CHECK_THROWS_AS(substitute(p, "c", parse_element("c ^ a")), DomainError);
  CHECK_THROWS_AS(substitute(p, "q", parse_element("a")), DomainError);
  CHECK_THROWS_AS(substitute(p, "c", parse_element("a ^ w")), DomainError);
}

TEST_CASE("simplify preserves coloring profiles") {
  std::mt19937 rng(23);
  const auto battery = standard_battery();
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = test::random_presentation(rng, 1 + rng() % 4, rng() % 5, 2);
    const auto s = simplify(p);
    CHECK(s.generators().size() <= p.generators().size());
    for (const auto& r : s.relations()) CHECK_FALSE(r.is_tautology());
    for (const auto& t : battery) CHECK(count_colorings(s, t).count == oracle::colorings(p, t));
  }
  const auto s = simplify(trefoil());
  CHECK(s.generators().size() == 2);
}

TEST_CASE("simplify drops tautologies and duplicates") {
  QuandlePresentation p;
  p.add_generator("x");
  p.add_generator("y");
  p.add_relation(parse_element("x ^ y"), parse_element("x ^ y"));
  p.add_relation(parse_element("x ^ y y"), parse_element("x"));
  p.add_relation(parse_element("x"), parse_element("x ^ y y"));
  const auto s = simplify(p);
  CHECK(s.relations().size() == 1);
}
