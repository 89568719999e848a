#include "doctest.h"
#include "oracle.hpp"
#include "quandle/braid.hpp"
#include "quandle/error.hpp"
#include "quandle/io.hpp"
#include "quandle/link_diagram.hpp"
#include "test_util.hpp"

using namespace quandle;

namespace {
const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

std::uint64_t count(const LinkDiagram& d, const FiniteQuandle& t) {
  return count_colorings(quandle_presentation(d), t).count;
}
}  // namespace

TEST_CASE("trefoil diagram") {
  const auto d = parse_pd(kTrefoil);
  CHECK(d.arcs().size() == 3);
  CHECK(d.components().size() == 1);
  for (const auto& c : d.crossings()) CHECK(c.sign == 1);
  CHECK(count(d, dihedral_quandle(3)) == 9);
  const auto m = mirror(d);
  for (const auto& c : m.crossings()) CHECK(c.sign == -1);
  CHECK(parse_pd(to_pd_text(d)).pd_crossings().size() == 3);
}

TEST_CASE("figure-eight has two crossings of each sign") {
  const auto d = parse_pd(kFigure8);
  int sum = 0;
  for (const auto& c : d.crossings()) sum += c.sign;
  CHECK(sum == 0);
  CHECK(count(d, dihedral_quandle(5)) == 25);
  CHECK(count(d, dihedral_quandle(3)) == 3);
}

TEST_CASE("PD colorings agree with the edge-coloring oracle") {
  const auto battery = standard_battery();
  for (const char* pd : {kTrefoil, kFigure8, "O[1]", "O[a] O[b]", "X[1,2,2,1]"}) {
    const auto d = parse_pd(pd);
    for (const auto& t : battery) CHECK(count(d, t) == oracle::pd_colorings(d, t));
    const auto m = mirror(d);
    for (const auto& t : battery) CHECK(count(m, t) == oracle::pd_colorings(m, t));
  }
  const auto t52 = parse_pd(io::read_file(test::data("torus_5_2.pd")));
  for (const auto& t : battery)
    if (t.size() <= 5) CHECK(count(t52, t) == oracle::pd_colorings(t52, t));
}

TEST_CASE("unknot and unlinks") {
  for (const auto& t : standard_battery()) {
    CHECK(count(parse_pd("O[1]"), t) == t.size());
    CHECK(count(parse_pd("O[1] O[2]"), t) == t.size() * t.size());
  }
  const auto d = parse_pd("O[1] O[x]");
  CHECK(d.components().size() == 2);
  CHECK(d.is_crossingless_component(0));
}

TEST_CASE("PD grammar") {
  CHECK_NOTHROW(parse_pd("X[1,5,2,4];X[3,1,4,6], X[5,3,6,2] # comment\n"));
  CHECK_NOTHROW(parse_pd(""));
  try {
    parse_pd("X[1,5,2,4]\nX[3,1,4,6\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line >= 2);
  }
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pd("O[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,7]"), StructuralError);
  CHECK_THROWS_AS(parse_pd("O[1] O[1]"), StructuralError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4] O[1]"), StructuralError);
  // Under-strand direction disagrees along the component.
  CHECK_THROWS_AS(parse_pd("X[1,3,2,4] X[1,4,2,3]"), StructuralError);
}

TEST_CASE("label ordering is numeric-aware") {
  CHECK(label_less("2", "10"));
  CHECK_FALSE(label_less("10", "2"));
  CHECK(label_less("9", "a"));
  CHECK(label_less("a", "b"));
  CHECK(label_less("01", "1"));
}

TEST_CASE("braid grammar") {
  const auto b = parse_braid("3: 1 -2 2");
  CHECK(b.strands() == 3);
  CHECK(b.letters() == std::vector<int>{1, -2, 2});
  CHECK(to_string(b) == "3: 1 -2 2");
  CHECK_THROWS_AS(parse_braid("3 1 2"), ParseError);
  CHECK_THROWS_AS(parse_braid("2: 1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid("2: 3"), ParseError);
  CHECK_THROWS_AS(parse_braid("2: 0"), ParseError);
  CHECK_THROWS_AS(BraidWord(0, {}), DomainError);
}

TEST_CASE("braid strand action") {
  const auto act = braid_strand_action(BraidWord(2, {1}));
  CHECK(to_string(act[0]) == "x2");
  CHECK(to_string(act[1]) == "x1 ^ x2");
  const auto inv = braid_strand_action(BraidWord(2, {-1}));
  CHECK(to_string(inv[0]) == "x2 ^ x1'");
  CHECK(to_string(inv[1]) == "x1");
  // σ σ⁻¹ acts trivially.
  const auto id = braid_strand_action(BraidWord(3, {2, -2, 1, -1}));
  for (int j = 0; j < 3; ++j) CHECK(to_string(id[j]) == strand_generator(j + 1));
}

TEST_CASE("braid routes agree") {
  const auto battery = standard_battery();
  for (const auto& word : std::vector<BraidWord>{BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2, 1, -2}),
                                                 BraidWord(3, {1, 1, 1, -2, -2, -2}), BraidWord(3, {1}),
                                                 BraidWord(4, {1, 2, 3, 1, 2, 3}), torus_knot_braid(4, 3)}) {
    const auto direct = braid_closure_presentation(word);
    const auto pd = quandle_presentation(braid_closure_diagram(word));
    for (const auto& t : battery) CHECK(count_colorings(direct, t).count == count_colorings(pd, t).count);
  }
  // Braid relation σ1σ2σ1 = σ2σ1σ2 acts identically.
  const auto a = braid_strand_action(BraidWord(3, {1, 2, 1}));
  const auto b = braid_strand_action(BraidWord(3, {2, 1, 2}));
  CHECK(a == b);
}

TEST_CASE("torus knots") {
  CHECK(to_string(torus_knot_braid(5, 2)) == "2: 1 1 1 1 1");
  CHECK(to_string(torus_knot_braid(4, 3)) == "3: 1 2 1 2 1 2 1 2");
  CHECK_THROWS_AS(torus_knot_braid(2, 2), DomainError);
  CHECK_THROWS_AS(torus_knot_braid(3, 1), DomainError);
  const auto d = braid_closure_diagram(torus_knot_braid(5, 2));
  CHECK(d.components().size() == 1);
  CHECK(count(d, dihedral_quandle(5)) == 25);
  const auto u = braid_closure_diagram(BraidWord(3, {1}));
  CHECK(u.components().size() == 2);
}
