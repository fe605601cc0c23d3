#include <doctest.h>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/group_ring.hpp"
#include "kch/kch_suite.hpp"
#include "kch/random.hpp"

using namespace kch;

namespace {

  Context ctx_of(std::string const& name) { return knot_context(test::census_knot(name)); }

  void require_clean(PropertyCount const& p) {
    CAPTURE(p.name);
    CAPTURE(p.failures.size() > 0 ? p.failures.front() : std::string());
    CHECK(p.fail == 0);
    CHECK(p.unknown == 0);
    CHECK(p.pass == p.total());
  }

}  // namespace

TEST_CASE("ring axioms and ideal closure on knot groups") {
  for (std::string name : {"3_1", "4_1"}) {
    CAPTURE(name);
    Context ctx = ctx_of(name);
    REQUIRE(ctx->exact());
    Rng rng(5);
    require_clean(check_ring_axioms(ctx, 300, rng));
    require_clean(check_left_ideal(ctx, 300, rng));
    require_clean(check_complementarity(ctx, 300, rng));
  }
}

TEST_CASE("augmentation is a ring homomorphism") {
  Context ctx = ctx_of("4_1");
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    GroupRingElement a = random_element(rng, ctx, 4, 5, 3);
    GroupRingElement b = random_element(rng, ctx, 4, 5, 3);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    CHECK((a + b).augmentation() == a.augmentation() + b.augmentation());
    CHECK((a - a).is_zero() == Answer::Yes);
    CHECK((a + b).equals(b + a) == Answer::Yes);
  }
}

TEST_CASE("terms are merged through the group relations") {
  Context ctx = ctx_of("4_1");
  FreeWord m = ctx->meridian(), l = ctx->longitude();
  GroupRingElement a = GroupRingElement::word(ctx, m * l * m.inverse());
  GroupRingElement b = GroupRingElement::word(ctx, l);
  CHECK(a.equals(b) == Answer::Yes);
  CHECK((a + b).support_size() == 1);
  CHECK((a + b).coefficient(l) == 2);
  GroupRingElement u = GroupRingElement::one_minus_meridian(ctx);
  CHECK(u.support_size() == 2);
  CHECK(u.augmentation() == 0);
  CHECK(u.is_zero() == Answer::No);
  CHECK(GroupRingElement::one(ctx).is_zero() == Answer::No);
  CHECK(GroupRingElement(ctx).is_zero() == Answer::Yes);
  CHECK((GroupRingElement::word(ctx, m, 3) - GroupRingElement::word(ctx, m, 3)).empty());
}

TEST_CASE("left ideal and augmentation ideal membership") {
  Context ctx = ctx_of("3_1");
  FreeWord m = ctx->meridian();
  FreeWord x = FreeWord::power(1, 1) * FreeWord::power(0, -2);
  GroupRingElement xm = GroupRingElement::word(ctx, x) * GroupRingElement::one_minus_meridian(ctx);
  CHECK(in_left_ideal(xm, m) == Answer::Yes);
  CHECK(in_left_ideal(GroupRingElement::one(ctx), m) == Answer::No);
  CHECK(in_augmentation_ideal(xm));
  CHECK_FALSE(in_augmentation_ideal(GroupRingElement::one(ctx)));
  FreeWord l = ctx->longitude();
  GroupRingElement p = GroupRingElement::word(ctx, l * l, 2) + xm;
  CHECK(in_peripheral_plus_left_ideal(p) == Answer::Yes);
}

TEST_CASE("augmentation-ideal witnesses re-expand exactly") {
  for (std::string name : {"3_1", "4_1"}) {
    Context ctx = ctx_of(name);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
      GroupRingElement a = random_element(rng, ctx, 4, 6, 3);
      GroupRingElement rest = a - GroupRingElement::integer(ctx, a.augmentation());
      auto w = ideal_witness(rest);
      CHECK(expand_witness(ctx, w).equals(rest) == Answer::Yes);
    }
    CHECK_THROWS_AS(ideal_witness(GroupRingElement::one(ctx)), WitnessUnavailable);
  }
}

TEST_CASE("elements of different groups do not mix") {
  Context a = ctx_of("3_1");
  Context b = ctx_of("4_1");
  GroupRingElement x = GroupRingElement::one(a);
  GroupRingElement y = GroupRingElement::one(b);
  CHECK_THROWS_AS(x + y, ContextMismatch);
  CHECK_THROWS_AS(x * y, ContextMismatch);
}

TEST_CASE("non-deciding backends report inexact sums") {
  KnotGroup g = wirtinger(test::census_knot("3_1"));
  BackendOptions o;
  o.kind = BackendKind::FreeReduce;
  o.quotient_degree = 0;
  Context ctx = RingContext::make(g, o);
  CHECK_FALSE(ctx->exact());
  GroupRingElement r = GroupRingElement::word(ctx, g.presentation.relators.front()) - GroupRingElement::one(ctx);
  CHECK(r.is_zero() == Answer::Unknown);
}
