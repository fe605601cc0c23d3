#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

#include "common.hpp"
#include "kch/alexander.hpp"
#include "kch/error.hpp"
#include "kch/presentation.hpp"
#include "kch/random.hpp"

using namespace kch;

namespace {

  LaurentPoly poly(std::vector<int> c, long lo = 0) {
    std::vector<Integer> v(c.begin(), c.end());
    return LaurentPoly(lo, std::move(v));
  }

  LaurentPoly random_poly(Rng& rng, int max_terms = 4) {
    long lo = uniform(rng, -2, 2);
    std::vector<Integer> c;
    for (long i = 0, n = uniform(rng, 0, max_terms); i < n; ++i) {
      c.emplace_back(uniform(rng, -3, 3));
    }
    return LaurentPoly(lo, std::move(c));
  }

  // Leibniz expansion, independent of the Bareiss elimination.
  LaurentPoly leibniz(LaurentMatrix const& m) {
    std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly sum;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          inversions += perm[i] > perm[j];
        }
      }
      LaurentPoly term(1);
      for (std::size_t i = 0; i < n; ++i) {
        term = term * m[i][perm[i]];
      }
      sum += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
  }

  // Rolfsen table, normalized to lowest exponent 0.
  std::map<std::string, std::vector<int>> const table = {
      {"3_1", {1, -1, 1}},
      {"4_1", {1, -3, 1}},
      {"5_1", {1, -1, 1, -1, 1}},
      {"5_2", {2, -3, 2}},
      {"6_1", {2, -5, 2}},
      {"6_2", {1, -3, 3, -3, 1}},
      {"6_3", {1, -3, 5, -3, 1}},
      {"7_1", {1, -1, 1, -1, 1, -1, 1}},
      {"7_2", {3, -5, 3}},
      {"7_3", {2, -3, 3, -3, 2}},
      {"7_4", {4, -7, 4}},
      {"7_5", {2, -4, 5, -4, 2}},
      {"7_6", {1, -5, 7, -5, 1}},
      {"7_7", {1, -5, 9, -5, 1}},
      {"8_1", {3, -7, 3}},
      {"8_19", {1, -1, 0, 1, 0, -1, 1}},
      {"8_20", {1, -2, 3, -2, 1}},
      {"8_21", {1, -4, 5, -4, 1}},
  };

}  // namespace

TEST_CASE("Laurent arithmetic agrees with evaluation") {
  Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    for (int x : {1, -1}) {
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
      CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
    }
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      CHECK(exact_div(a * b, b) == a);
    }
    CHECK(a.shifted(3).shifted(-3) == a);
  }
}

TEST_CASE("polynomial gcd") {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng, 3);
    if (c.is_zero() || (a.is_zero() && b.is_zero())) {
      continue;
    }
    LaurentPoly g = gcd(a * c, b * c);
    CHECK(g == g.normalized());
    // c divides the gcd up to content, and the gcd divides both
    CHECK_NOTHROW(exact_div(g * Integer(c.content()), c.primitive().normalized()));
    if (!a.is_zero()) {
      CHECK_NOTHROW(exact_div(a * c, g));
    }
  }
  CHECK(gcd(poly({1, -1, 1}), poly({1, 1})) == LaurentPoly(1));
  CHECK(gcd(poly({-1, 0, 1}), poly({1, -2, 1})) == poly({-1, 1}).normalized());
  CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({1, 1})), InvariantError);
}

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  Rng rng(6);
  for (int i = 0; i < 120; ++i) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    LaurentMatrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m) {
      for (auto& x : row) {
        x = random_poly(rng, 2);
      }
    }
    CHECK(determinant(m) == leibniz(m));
  }
  CHECK(minor_gcd({{poly({1})}}, 0) == LaurentPoly(1));
}

TEST_CASE("normalization") {
  CHECK(poly({-1, 3, -1}, 5).normalized() == poly({1, -3, 1}));
  CHECK(poly({1, -1, 1}, -1).normalized() == poly({1, -1, 1}));
  CHECK(poly({1, -3, 1}).to_string() == "t^2 - 3*t + 1");
}

TEST_CASE("census: quandle route, Fox oracle and the knot table agree") {
  std::size_t matched = 0;
  for (auto const& e : test::census_table()) {
    CAPTURE(e.name);
    KnotDiagram d = e.diagram();
    LaurentPoly q = alexander_polynomial(quandle_matrix(d));
    KnotGroup g = wirtinger(d);
    LaurentPoly f = fox_oracle(g.presentation, g.peripheral);
    CHECK(q == f);
    KnotGroup r = reduce_knot_group(g, tietze(g.presentation, true));
    CHECK(fox_oracle(r.presentation, r.peripheral) == f);
    CHECK(alexander_polynomial(quandle_matrix(mirror(d))) == q);
    CHECK(q.is_palindromic());
    CHECK(abs(q.evaluate(1)) == 1);
    CHECK(q.min_exponent() == 0);
    if (auto it = table.find(e.name); it != table.end()) {
      CHECK(q == poly(it->second));
      ++matched;
    }
  }
  CHECK(matched == table.size());
}

TEST_CASE("built census file carries the oracle values") {
  auto census = load_census(default_census_path());
  REQUIRE(census.size() == test::census_table().size());
  for (auto const& e : census) {
    CAPTURE(e.name);
    REQUIRE(e.expected_alexander.has_value());
    CHECK(alexander_polynomial(quandle_matrix(e.diagram())) == *e.expected_alexander);
  }
}

TEST_CASE("unknots, braids and composites") {
  CHECK(alexander_polynomial(quandle_matrix(KnotDiagram())) == LaurentPoly(1));
  CHECK(alexander_polynomial(quandle_matrix(braid_closure(parse_braid("1")))) == LaurentPoly(1));
  CHECK(alexander_polynomial(quandle_matrix(braid_closure(parse_braid("1 -2 1 -2")))) == poly({1, -3, 1}));
  KnotGroup u = wirtinger(KnotDiagram());
  CHECK(fox_oracle(u.presentation, u.peripheral) == LaurentPoly(1));

  LaurentPoly tre = poly({1, -1, 1});
  KnotDiagram granny = braid_closure(parse_braid("1 1 1 2 2 2"));
  KnotDiagram square = braid_closure(parse_braid("1 1 1 -2 -2 -2"));
  CHECK(alexander_polynomial(quandle_matrix(granny)) == tre * tre);
  CHECK(alexander_polynomial(quandle_matrix(square)) == tre * tre);
  auto inv = module_invariants(quandle_matrix(granny));
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == tre * tre);
  CHECK(inv[1] == tre);
  CHECK(module_invariants(quandle_matrix(test::census_knot("3_1"))) == std::vector<LaurentPoly>{tre});
  CHECK(module_invariants(quandle_matrix(braid_closure(parse_braid("1")))).empty());
}

TEST_CASE("quandle rows vanish on constant colourings") {
  for (auto const& e : test::census_table()) {
    AlexMatrix m = quandle_matrix(e.diagram());
    for (auto const& row : m) {
      LaurentPoly s;
      for (auto const& x : row) {
        s += x;
      }
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("degenerate matrices") {
  AlexMatrix z(2, std::vector<LaurentPoly>(2));
  CHECK_THROWS_AS(alexander_polynomial(z), DegenerateMatrix);
  GroupPresentation free2{2, {}};
  CHECK_THROWS(fox_oracle(free2, {FreeWord::power(0, 1), {}}));
}
