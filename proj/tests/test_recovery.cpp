#include <doctest.h>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/presentation.hpp"
#include "kch/recovery.hpp"

using namespace kch;

namespace {

  Context ctx_of(std::string const& name) {
    KnotGroup g = wirtinger(test::census_knot(name));
    return RingContext::make(g);
  }

  bool all_yes(RecoveryResult const& r) {
    for (auto const& c : r.checks) {
      if (c.answer != Answer::Yes) {
        return false;
      }
    }
    return !r.checks.empty();
  }

}  // namespace

TEST_CASE("trivial units") {
  Context ctx = ctx_of("3_1");
  FreeWord g = FreeWord::power(1, 1) * FreeWord::power(0, -1);
  auto u = recognize_unit(GroupRingElement::word(ctx, g, -1));
  REQUIRE(u.has_value());
  CHECK(u->sign == -1);
  CHECK(ctx->backend().equal(u->g, g).yes());
  CHECK_FALSE(recognize_unit(GroupRingElement::word(ctx, g, 2)).has_value());
  CHECK_FALSE(recognize_unit(GroupRingElement::one(ctx) + GroupRingElement::word(ctx, g)).has_value());
  CHECK_FALSE(recognize_unit(GroupRingElement(ctx)).has_value());
}

TEST_CASE("power divisors") {
  Context ctx = ctx_of("4_1");
  FreeWord m = ctx->meridian();
  GroupRingElement z = GroupRingElement::one(ctx) + GroupRingElement::word(ctx, m) + GroupRingElement::word(ctx, m * m);
  auto p = solve_power_divisor(z, m);
  REQUIRE(p.has_value());
  CHECK(p->n == 3);
  CHECK(ctx->backend().equal(p->g, m.pow(3)).yes());

  auto q = solve_power_divisor(GroupRingElement::word(ctx, m.inverse(), -1), m);
  REQUIRE(q.has_value());
  CHECK(q->n == -1);

  auto zero = solve_power_divisor(GroupRingElement(ctx), m);
  REQUIRE(zero.has_value());
  CHECK(zero->n == 0);

  CHECK_FALSE(solve_power_divisor(GroupRingElement::word(ctx, FreeWord::power(1, 1)), m).has_value());
  CHECK_FALSE(solve_power_divisor(GroupRingElement::integer(ctx, 2), m).has_value());
}

TEST_CASE("recovery pipeline on the trefoil and the figure-eight") {
  for (std::string name : {"3_1", "4_1"}) {
    CAPTURE(name);
    KnotDiagram d = test::census_knot(name);
    KnotGroup g = wirtinger(d);
    auto b = make_backend(g.presentation);

    RecoveryResult id = recover_peripheral(identity_iso(g));
    CHECK(id.sign_m == 1);
    CHECK(id.sign_l == 1);
    CHECK(b->equal(id.conjugator, FreeWord{}).yes());
    CHECK(all_yes(id));

    FreeWord gamma = FreeWord::power(1, 2) * FreeWord::power(2, -1) * FreeWord::power(0, 1);
    RecoveryResult cj = recover_peripheral(conjugated_iso(g, gamma));
    CHECK(cj.sign_m == 1);
    CHECK(cj.sign_l == 1);
    CHECK(all_yes(cj));
    // gamma is determined up to the peripheral subgroup, which centralizes m and l
    FreeWord delta = cj.conjugator * gamma.inverse();
    FreeWord m = g.peripheral.meridian, l = g.peripheral.longitude;
    CHECK(b->equal(delta * m, m * delta).yes());
    CHECK(b->equal(delta * l, l * delta).yes());

    RecoveryResult mi = recover_peripheral(mirror_iso(d));
    CHECK(mi.sign_m == -1);
    CHECK(mi.sign_l == 1);
    CHECK(all_yes(mi));
  }
}

TEST_CASE("corrupted isomorphism data") {
  KnotGroup g = wirtinger(test::census_knot("3_1"));
  IsoData bad = identity_iso(g);
  bad.matrix = {1, 0, 0, -1};
  CHECK_THROWS_AS(recover_peripheral(bad), MatchFailure);

  IsoData singular = identity_iso(g);
  singular.matrix = {1, 0, 0, 0};
  CHECK_THROWS_AS(validate(singular), ValidationError);

  IsoData short_psi = identity_iso(g);
  short_psi.psi.pop_back();
  CHECK_THROWS_AS(validate(short_psi), ValidationError);

  IsoData range = identity_iso(g);
  range.psi[0] = FreeWord::power(7, 1);
  CHECK_THROWS_AS(validate(range), ValidationError);

  IsoData wrong_x = identity_iso(g);
  wrong_x.x = {{2, FreeWord{}}};
  CHECK_THROWS_AS(recover_peripheral(wrong_x), MatchFailure);
}

TEST_CASE("unknots are rejected") {
  KnotGroup u = wirtinger(braid_closure(parse_braid("1")));
  CHECK_THROWS_AS(recover_peripheral(identity_iso(u)), KnotednessViolation);
}

TEST_CASE("cancellation lemma on small supports") {
  LemmaReport r = brute_force_lemma_check(3, 2, 2);
  CHECK(r.candidates > 0);
  CHECK(r.instances > 0);
  CHECK(r.counterexamples == 0);
  CHECK(r.solver_failures == 0);
}
