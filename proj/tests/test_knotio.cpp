#include <doctest.h>

#include <set>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/knot_diagram.hpp"

using namespace kch;

namespace {

  // Census PD codes number the edges consecutively along the orientation,
  // so the sign can be read off the labels alone.
  int sign_from_labels(std::array<int, 4> const& x, int edges) {
    auto next = [edges](int e) { return e % edges + 1; };
    return next(x[3]) == x[1] ? 1 : -1;
  }

}  // namespace

TEST_CASE("census has the 35 prime knots through 8 crossings") {
  auto const& c = test::census_table();
  CHECK(c.size() == 35);
  std::set<std::string> names;
  for (auto const& e : c) {
    names.insert(e.name);
  }
  CHECK(names.size() == 35);
  CHECK(names.count("3_1") == 1);
  CHECK(names.count("8_21") == 1);
}

TEST_CASE("census diagrams: arcs, orientation cycle, round trip") {
  for (auto const& e : test::census_table()) {
    CAPTURE(e.name);
    KnotDiagram d = e.diagram();
    CHECK(d.arc_count() == d.crossing_count());
    int const edges = static_cast<int>(2 * d.crossing_count());
    // successor is a single cycle through every edge
    std::set<int> seen;
    int e0 = d.traversal().front();
    int cur = e0;
    for (int i = 0; i < edges; ++i) {
      seen.insert(cur);
      cur = d.successor(cur);
    }
    CHECK(cur == e0);
    CHECK(seen.size() == static_cast<std::size_t>(edges));
    CHECK(parse_pd(render_pd(d)) == d);
    CHECK(mirror(mirror(d)) == d);
    CHECK(writhe(mirror(d)) == -writhe(d));
    CHECK(writhe(reflect(d)) == -writhe(d));
    CHECK(reflect(d).arc_count() == d.arc_count());
    int w = 0;
    for (auto const& x : d.crossings()) {
      CHECK(x.sign == sign_from_labels(x.edges, edges));
      w += x.sign;
    }
    CHECK(writhe(d) == w);
  }
}

TEST_CASE("arc bookkeeping is consistent") {
  for (auto const& e : test::census_table()) {
    CAPTURE(e.name);
    KnotDiagram d = e.diagram();
    auto const& under = d.under_sequence();
    REQUIRE(under.size() == d.arc_count());
    for (std::size_t k = 0; k < d.arc_count(); ++k) {
      std::size_t c = under[k];
      CHECK(d.in_arc(c) == k);
      CHECK(d.out_arc(c) == (k + 1) % d.arc_count());
      CHECK(d.arcs()[k].end_crossing == c);
    }
  }
}

TEST_CASE("known writhes") {
  CHECK(std::abs(writhe(test::census_knot("3_1"))) == 3);
  CHECK(writhe(test::census_knot("4_1")) == 0);
  CHECK(std::abs(writhe(test::census_knot("5_1"))) == 5);
}

TEST_CASE("empty PD is the unknot") {
  KnotDiagram d = parse_pd("PD[]");
  CHECK(d.crossing_count() == 0);
  CHECK(writhe(d) == 0);
  CHECK(d == KnotDiagram());
}

TEST_CASE("braid closures") {
  KnotDiagram t = braid_closure(parse_braid("1 1 1"));
  CHECK(t.crossing_count() == 3);
  CHECK(writhe(t) == 3);
  KnotDiagram f = braid_closure(parse_braid("1 -2 1 -2"));
  CHECK(f.crossing_count() == 4);
  CHECK(writhe(f) == 0);
  CHECK(parse_braid("1 -2 1 -2").strands == 3);
  CHECK(braid_closure(parse_braid("-1 -1 -1")) == mirror(t));
  KnotDiagram u = braid_closure(parse_braid("1"));
  CHECK(u.crossing_count() == 1);
}

TEST_CASE("Gauss codes") {
  KnotDiagram g = parse_gauss("O1- U2- O3- U1- O2- U3-");
  CHECK(g.crossing_count() == 3);
  CHECK(writhe(g) == -3);
  KnotDiagram p = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(writhe(p) == 3);
  CHECK_THROWS_AS(parse_gauss("O1+ U2+ O3+ U1- O2+ U3+"), ValidationError);
  CHECK_THROWS_AS(parse_gauss("O1+ X2+"), SyntaxError);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_pd("PD[X[1,2]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5]"), SyntaxError);
  // labels used once
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1]]"), ValidationError);
  // Hopf link: two components
  CHECK_THROWS_AS(parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]"), ValidationError);
  // sigma_1^2 on three strands closes to a link
  CHECK_THROWS_AS(braid_closure(parse_braid("1 1", 3)), ValidationError);
  CHECK_THROWS(parse_braid("1 x"));
}

TEST_CASE("whitespace-insensitive PD grammar") {
  KnotDiagram a = parse_pd("PD[X[6,3,1,4],X[4,1,5,2],X[2,5,3,6]]");
  KnotDiagram b = parse_pd(" PD[ X[6, 3, 1, 4],\n X[4,1,5,2] , X[2,5,3,6] ] ");
  CHECK(a == b);
}
