#include <doctest.h>

#include <algorithm>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/presentation.hpp"
#include "kch/random.hpp"
#include "kch/rewriting.hpp"
#include "kch/word_backend.hpp"

using namespace kch;

namespace {

  // Re-checks an equality answer against its certificate and the quotients.
  bool audited(WordBackend const& b, FreeWord const& u, FreeWord const& v, EqualityResult const& r) {
    auto const& qs = b.quotients();
    if (r.yes()) {
      for (auto const& q : qs) {
        if (q.evaluate(u) != q.evaluate(v)) {
          return false;
        }
      }
      return b.degree(u) == b.degree(v);
    }
    if (r.no()) {
      switch (r.certificate) {
        case Certificate::Abelianization:
          return b.degree(u) != b.degree(v);
        case Certificate::FiniteQuotient:
          return r.quotient < qs.size() && qs[r.quotient].evaluate(u) != qs[r.quotient].evaluate(v);
        case Certificate::NormalForm:
          return b.decides() && b.normalize(u) != b.normalize(v);
        default:
          return false;
      }
    }
    return true;
  }

  FreeWord relator_conjugate(Rng& rng, GroupPresentation const& p) {
    auto const& r = p.relators[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(p.relators.size()) - 1))];
    FreeWord c = random_word(rng, p.generators, 3);
    return c * (coin(rng) ? r : r.inverse()) * c.inverse();
  }

}  // namespace

TEST_CASE("free words") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    FreeWord a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
    CHECK((a * a.inverse()).empty());
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(FreeWord::from_signed(a.to_signed()) == a);
    CHECK(a.pow(3) == a * a * a);
    CHECK((a * b).exponent_sum() == a.exponent_sum() + b.exponent_sum());
    FreeWord r = (c * a * c.inverse()).cyclically_reduced();
    CHECK(r.size() <= a.size());
  }
  CHECK(FreeWord::power(1, -2).to_signed() == std::vector<long>{-2, -2});
}

TEST_CASE("Wirtinger presentations of the census") {
  for (auto const& e : test::census_table()) {
    CAPTURE(e.name);
    KnotDiagram d = e.diagram();
    KnotGroup g = wirtinger(d);
    CHECK(g.presentation.generators == d.crossing_count());
    CHECK(g.presentation.relators.size() == d.crossing_count());
    for (auto const& r : g.presentation.relators) {
      CHECK(r.size() == 4);
      CHECK(r.cyclically_reduced() == r);
    }
    CHECK(g.peripheral.meridian == FreeWord::power(0, 1));
    CHECK(abelianize(g.peripheral.longitude, g.degrees) == 0);
    for (int deg : g.degrees) {
      CHECK(deg == 1);
    }
    AbelianInvariants inv = abelian_invariants(g.presentation);
    CHECK(inv.free_rank == 1);
    for (auto const& f : inv.factors) {
      CHECK(f == 1);  // no torsion
    }

    TietzeReduction t = tietze(g.presentation, true);
    CHECK(t.kept.front() == 0);
    AbelianInvariants rinv = abelian_invariants(t.reduced);
    CHECK(rinv.free_rank == 1);
    for (auto const& f : rinv.factors) {
      CHECK(f == 1);
    }
    KnotGroup rg = reduce_knot_group(g, t);
    CHECK(abelianize(rg.peripheral.longitude, rg.degrees) == 0);
  }
}

TEST_CASE("abelianization degrees reject non-knot groups") {
  GroupPresentation free2{2, {}};
  CHECK_THROWS_AS(abelianization_degrees(free2, FreeWord::power(0, 1)), InvariantError);
  GroupPresentation bad{1, {FreeWord::power(3, 1)}};
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("Knuth-Bendix on Z^2 and the free group") {
  RewritingSystem s(2, WordOrder::shortlex());
  FreeWord ab = FreeWord::power(0, 1) * FreeWord::power(1, 1);
  FreeWord ba = FreeWord::power(1, 1) * FreeWord::power(0, 1);
  s.add_equation(ba.letters(), ab.letters());
  CHECK(knuth_bendix(s, {}));
  CHECK(s.reduce(ba) == ab);
  FreeWord w = FreeWord{make_letter(1), make_letter(0, true), make_letter(1, true), make_letter(0)};
  CHECK(s.reduce(w).empty());

  RewritingSystem f(2, WordOrder::shortlex());
  CHECK(knuth_bendix(f, {}));
  CHECK(f.reduce(ab) == ab);
}

TEST_CASE("wreath order compares top level first") {
  WordOrder o = WordOrder::wreath({1, 0});
  FreeWord t = FreeWord::power(0, 1);
  FreeWord zzz = FreeWord::power(1, 3);
  CHECK(o.less(zzz.letters(), t.letters()));
  CHECK(o.less(t.letters(), (t * t).letters()));
}

TEST_CASE("backends on the trefoil and the figure-eight") {
  for (std::string name : {"3_1", "4_1"}) {
    CAPTURE(name);
    KnotGroup g = wirtinger(test::census_knot(name));
    auto b = make_backend(g.presentation);
    CHECK(b->decides());
    CHECK(b->method() == "fibred");
    FreeWord m = g.peripheral.meridian, l = g.peripheral.longitude;
    EqualityResult c = b->equal(m * l, l * m);
    CHECK(c.yes());
    for (std::size_t i = 0; i < g.presentation.generators; ++i) {
      FreeWord conj = g.conjugators[i] * m * g.conjugators[i].inverse();
      CHECK(b->equal(conj, FreeWord::power(i, 1)).yes());
    }
    // cached per presentation and options
    CHECK(make_backend(g.presentation) == b);
  }
  KnotGroup t = wirtinger(test::census_knot("3_1"));
  BackendOptions o;
  o.kind = BackendKind::TorusKnotNormalForm;
  auto tb = make_backend(t.presentation, o);
  REQUIRE(tb->torus().has_value());
  CHECK(tb->torus()->p() * tb->torus()->q() == 6);
  CHECK(tb->equal(t.peripheral.meridian * t.peripheral.longitude,
                  t.peripheral.longitude * t.peripheral.meridian)
            .yes());
}

TEST_CASE("torus normal forms") {
  // <x, y | x^2 = y^3>
  FreeWord r = FreeWord::power(0, 2) * FreeWord::power(1, -3);
  auto ts = TorusStructure::detect(r);
  REQUIRE(ts.has_value());
  CHECK(ts->normalize(r).empty());
  FreeWord x2 = FreeWord::power(0, 2), y3 = FreeWord::power(1, 3);
  FreeWord a = FreeWord::power(1, 1);
  // the central element commutes with everything
  CHECK(ts->normalize(x2 * a) == ts->normalize(a * x2));
  CHECK(ts->normalize(y3 * a) == ts->normalize(a * x2));
  CHECK(ts->normalize(FreeWord::power(0, 1)) != ts->normalize(FreeWord::power(1, 1)));
}

TEST_CASE("finite quotients match colouring numbers") {
  // the trefoil is 3-colourable, the figure-eight is not (determinant 5)
  KnotGroup t = wirtinger(test::census_knot("3_1"));
  auto tq = finite_quotients(t.presentation, 3);
  bool tcol = false;
  for (auto const& q : tq) {
    CHECK(q.satisfies(t.presentation));
    CHECK(q.is_transitive());
    tcol = tcol || (q.degree == 3 && q.meridians_are_transpositions());
  }
  CHECK(tcol);

  KnotGroup f = wirtinger(test::census_knot("4_1"));
  for (auto const& q : finite_quotients(f.presentation, 3)) {
    CHECK(q.satisfies(f.presentation));
    if (q.degree == 3) {
      // image is abelian
      for (auto const& a : q.images) {
        for (auto const& b : q.images) {
          FreeWord ab = FreeWord::power(0, 1) * FreeWord::power(1, 1);
          PermutationRep two{3, {a, b}};
          CHECK(two.evaluate(ab) == two.evaluate(FreeWord::power(1, 1) * FreeWord::power(0, 1)));
        }
      }
    }
  }
  // degree 5 on four Wirtinger generators exceeds the search cap
  QuotientSearchStats wstats;
  finite_quotients(f.presentation, 5, &wstats);
  CHECK(std::find(wstats.skipped_degrees.begin(), wstats.skipped_degrees.end(), 5) != wstats.skipped_degrees.end());

  // the dihedral quotient D_5 appears on the reduced presentation
  GroupPresentation reduced = tietze(f.presentation, true).reduced;
  QuotientSearchStats rstats;
  bool five = false;
  for (auto const& q : finite_quotients(reduced, 5, &rstats)) {
    CHECK(q.satisfies(reduced));
    five = five || q.degree == 5;
  }
  CHECK(rstats.skipped_degrees.empty());
  CHECK(five);
}

TEST_CASE("equal is sound on the census (audited certificates)") {
  Rng rng(11);
  int checked = 0;
  for (std::string name : {"3_1", "4_1", "5_1", "5_2", "6_1"}) {
    CAPTURE(name);
    KnotGroup g = wirtinger(test::census_knot(name));
    BackendOptions o;
    o.quotient_degree = 4;
    auto b = make_backend(g.presentation, o);
    for (int i = 0; i < 60; ++i) {
      FreeWord u = random_word(rng, g.presentation.generators, 6);
      FreeWord v = coin(rng) ? u * relator_conjugate(rng, g.presentation) : random_word(rng, g.presentation.generators, 6);
      EqualityResult r = b->equal(u, v);
      CHECK(audited(*b, u, v, r));
      ++checked;
    }
    FreeWord m = g.peripheral.meridian, l = g.peripheral.longitude;
    CHECK_FALSE(b->equal(m * l, l * m).no());
  }
  CHECK(checked == 300);
}

TEST_CASE("free backend never claims more than free reduction") {
  KnotGroup g = wirtinger(test::census_knot("3_1"));
  BackendOptions o;
  o.kind = BackendKind::FreeReduce;
  o.quotient_degree = 0;
  auto b = make_backend(g.presentation, o);
  CHECK_FALSE(b->decides());
  FreeWord r = g.presentation.relators.front();
  CHECK(b->equal(r, FreeWord{}).answer == Answer::Unknown);
  CHECK(b->equal(FreeWord::power(0, 1), FreeWord::power(0, 2)).no());
  CHECK(b->equal(FreeWord::power(0, 1) * FreeWord::power(0, -1), FreeWord{}).yes());
}
