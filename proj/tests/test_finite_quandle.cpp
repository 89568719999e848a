#include "doctest.h"
#include "oracle.hpp"
#include "quandle/error.hpp"
#include "quandle/finite_quandle.hpp"

#include <random>

using namespace quandle;

TEST_CASE("dihedral quandles satisfy the axioms") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto q = dihedral_quandle(n);
    CHECK(q.size() == n);
    CHECK(verify_axioms(q.table()).valid);
    CHECK(oracle::is_quandle(q.table()));
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) CHECK(q.op(x, y) == (2 * y + n - x % n) % n);
  }
  CHECK(dihedral_quandle(5).name() == "dihedral:5");
  CHECK_THROWS_AS(dihedral_quandle(0), DomainError);
}

TEST_CASE("inverse operation undoes the operation") {
  for (const auto& q : standard_battery())
    for (Element x = 0; x < q.size(); ++x)
      for (Element y = 0; y < q.size(); ++y) {
        CHECK(q.inv_op(q.op(x, y), y) == x);
        CHECK(q.op(q.inv_op(x, y), y) == x);
      }
}

TEST_CASE("verify_axioms reports each broken axiom") {
  SUBCASE("idempotence") {
    const auto r = verify_axioms({{1, 0}, {1, 1}});
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().axiom == 1);
    CHECK(r.violations.front().x == 0);
  }
  SUBCASE("right translations not bijective") {
    const auto r = verify_axioms({{0, 0, 0}, {0, 1, 1}, {0, 2, 2}});
    CHECK_FALSE(r.valid);
    bool saw2 = false;
    for (const auto& v : r.violations) saw2 = saw2 || v.axiom == 2;
    CHECK(saw2);
  }
  SUBCASE("self-distributivity") {
    // Columns are the permutations (1 2), (2 3), id, id.
    const Table t{{0, 0, 0, 0}, {2, 1, 1, 1}, {1, 3, 2, 2}, {3, 2, 3, 3}};
    const auto r = verify_axioms(t);
    CHECK_FALSE(r.valid);
    for (const auto& v : r.violations) CHECK(v.axiom == 3);
  }
  SUBCASE("out of range cell names the cell") {
    try {
      verify_axioms({{0, 5}, {1, 1}});
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(verify_axioms({{0, 1}, {1}}), DomainError);
}

TEST_CASE("verify_axioms agrees with the oracle on random tables") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    Table t(n, std::vector<std::int64_t>(n));
    for (auto& row : t)
      for (auto& c : row) c = static_cast<std::int64_t>(rng() % n);
    if (trial % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) t[i][i] = static_cast<std::int64_t>(i);
    CHECK(verify_axioms(t).valid == oracle::is_quandle(t));
  }
}

TEST_CASE("violation list is capped") {
  Table t(30, std::vector<std::int64_t>(30, 0));
  const auto r = verify_axioms(t);
  CHECK_FALSE(r.valid);
  CHECK(r.violations.size() == AxiomReport::kMaxViolations);
  CHECK(r.truncated);
}

TEST_CASE("groups") {
  CHECK(symmetric_group(3).size() == 6);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(dihedral_group(4).size() == 8);
  CHECK(cyclic_group(5).mul(3, 4) == 2);
  const auto s3 = symmetric_group(3);
  for (Element a = 0; a < 6; ++a) {
    CHECK(s3.mul(a, s3.inv(a)) == s3.identity());
    CHECK(s3.mul(s3.identity(), a) == a);
  }
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, Table{{0, 0}}), DomainError);
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}, Table{{0, 1}}));
  CHECK_THROWS_AS(symmetric_group(7), DomainError);
}

TEST_CASE("conjugation quandles") {
  for (const auto& g : {symmetric_group(3), cyclic_group(4), dihedral_group(4), symmetric_group(4)}) {
    const auto q = conjugation_quandle(g);
    CHECK(verify_axioms(q.table()).valid);
    for (Element a = 0; a < g.size(); ++a)
      for (Element b = 0; b < g.size(); ++b) {
        CHECK(q.op(a, b) == g.mul(g.mul(g.inv(b), a), b));
        CHECK(q.inv_op(a, b) == g.mul(g.mul(b, a), g.inv(b)));
      }
  }
  // Abelian groups give trivial quandles.
  const auto z4 = conjugation_quandle(cyclic_group(4));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(z4.op(a, b) == a);
}

TEST_CASE("from_table rejects non-quandles") {
  CHECK_THROWS_AS(FiniteQuandle::from_table({{1, 0}, {1, 1}}), DomainError);
  const auto q = FiniteQuandle::from_table(dihedral_quandle(3).table(), "d3");
  CHECK(q == dihedral_quandle(3));
  CHECK(q.name() == "d3");
}

TEST_CASE("homomorphism checks") {
  const auto d3 = dihedral_quandle(3);
  const auto s3 = conjugation_quandle(symmetric_group(3), "conj:S3");
  // Transpositions of S3 form a copy of dihedral 3.
  std::vector<Element> transpositions;
  const auto g = symmetric_group(3);
  for (Element a = 0; a < 6; ++a)
    if (a != g.identity() && g.mul(a, a) == g.identity()) transpositions.push_back(a);
  REQUIRE(transpositions.size() == 3);

  bool found = false;
  std::vector<Element> perm = transpositions;
  std::sort(perm.begin(), perm.end());
  do {
    found = found || is_homomorphism({&d3, &s3, perm}).is_homomorphism;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);

  const auto identity = is_homomorphism({&d3, &d3, {0, 1, 2}});
  CHECK(identity.is_homomorphism);
  const auto bad = is_homomorphism({&d3, &d3, {0, 0, 1}});
  CHECK_FALSE(bad.is_homomorphism);
  CHECK(bad.counterexample.has_value());
  // Constant maps are always homomorphisms.
  CHECK(is_homomorphism({&s3, &d3, std::vector<Element>(6, 2)}).is_homomorphism);
  CHECK_THROWS_AS(is_homomorphism({&d3, &d3, {0, 1}}), DomainError);
  CHECK_THROWS_AS(is_homomorphism({&d3, &d3, {0, 1, 3}}), DomainError);
}
