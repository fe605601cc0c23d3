#include <doctest.h>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/kch_suite.hpp"
#include "kch/string_module.hpp"

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

  BracketWord bw(std::vector<SLetter> l) { return BracketWord{std::move(l)}; }

  GroupRingElement w(Context const& c, FreeWord const& x) { return GroupRingElement::word(c, x); }

}  // namespace

TEST_CASE("phi on small words") {
  Context ctx = ctx_of("3_1");
  FreeWord x = FreeWord::power(1, 1);
  GroupRingElement one_m = GroupRingElement::one_minus_meridian(ctx);

  BracketWord kk = bw({SLetter::brace({}), SLetter::square(x), SLetter::brace({})});
  CHECK(kk.classification() == Classification::KK);
  CHECK(phi(ctx, kk).equals(w(ctx, x) * one_m) == Answer::Yes);

  PeripheralClass a{1, 2};
  FreeWord y = FreeWord::power(0, -1);
  BracketWord pp = bw({SLetter::square(x), SLetter::brace(a), SLetter::square(y)});
  CHECK(pp.classification() == Classification::pp);
  GroupRingElement expect = w(ctx, x * hat_embed(a, ctx->group().peripheral)) * one_m * w(ctx, y);
  CHECK(phi(ctx, pp).equals(expect) == Answer::Yes);

  CHECK(bw({SLetter::brace(a), SLetter::square(x)}).classification() == Classification::Kp);
  CHECK(bw({SLetter::square(x), SLetter::brace(a)}).classification() == Classification::pK);
  CHECK(phi(ctx, bw({SLetter::square(x)})).equals(w(ctx, x)) == Answer::Yes);
  CHECK(phi(ctx, bw({SLetter::brace(a)})).equals(w(ctx, hat_embed(a, ctx->group().peripheral))) == Answer::Yes);
}

TEST_CASE("peripheral classes embed as commuting words") {
  Context ctx = ctx_of("4_1");
  auto const& ps = ctx->group().peripheral;
  PeripheralClass a{2, -1}, b{-1, 3};
  CHECK(w(ctx, hat_embed(a, ps) * hat_embed(b, ps)).equals(w(ctx, hat_embed(a + b, ps))) == Answer::Yes);
  CHECK(hat_embed({}, ps).empty());
}

TEST_CASE("bracket word validation") {
  Context ctx = ctx_of("3_1");
  FreeWord x = FreeWord::power(0, 1);
  CHECK_THROWS_AS(bw({}).classification(), ValidationError);
  CHECK_THROWS_AS(bw({SLetter::square(x), SLetter::square(x)}).classification(), ValidationError);
  SElement e(ctx);
  e.add_term(bw({SLetter::square(x)}), 1);
  CHECK_THROWS_AS(e.add_term(bw({SLetter::brace({})}), 1), ClassificationError);
  BracketWord sq = bw({SLetter::square(x)});
  CHECK_THROWS_AS(apply_relation(ctx, sq, StringRelation::Str1, {0, false, {}, {}}), PatternMismatch);
  CHECK_THROWS_AS(apply_relation(ctx, sq, StringRelation::Str4, {0, false, {}, {}}), PatternMismatch);
}

TEST_CASE("string relations preserve phi") {
  for (std::string name : {"3_1", "4_1"}) {
    CAPTURE(name);
    Context ctx = ctx_of(name);
    for (auto c : {Classification::KK, Classification::Kp, Classification::pK, Classification::pp}) {
      Rng rng(100 + static_cast<int>(c));
      require_clean(check_phi_invariance(ctx, c, 300, rng));
    }
  }
}

TEST_CASE("str3 splits a square letter") {
  Context ctx = ctx_of("3_1");
  FreeWord x1 = FreeWord::power(1, 1), x2 = FreeWord::power(0, -1);
  BracketWord w0 = bw({SLetter::square(x1 * x2)});
  SElement r = apply_relation(ctx, w0, StringRelation::Str3, {0, false, {}, x1});
  CHECK(r.terms().size() == 2);
  CHECK((phi(r) - phi(ctx, w0)).is_zero() == Answer::Yes);
}

TEST_CASE("normalizer, products and skein relations") {
  for (std::string name : {"3_1", "4_1"}) {
    CAPTURE(name);
    Context ctx = ctx_of(name);
    Rng rng(9);
    require_clean(check_normalize(ctx, 300, rng));
    require_clean(check_mu_homomorphism(ctx, 300, rng));
    require_clean(check_tensor_balance(ctx, 200, rng));
    require_clean(check_pp_multiplicative(ctx, 300, rng));
    require_clean(check_pp_associative(ctx, 200, rng));
    require_clean(check_skein(ctx, 300, rng));
  }
}

TEST_CASE("pp unit and products") {
  Context ctx = ctx_of("3_1");
  FreeWord x = FreeWord::power(1, 1);
  SElement r = SElement::word(ctx, bw({SLetter::square(x)}), 2);
  PPElement a{3, r};
  PPElement one{1, SElement(ctx)};
  PPElement p = pp_mul(one, a);
  CHECK(p.n == 3);
  CHECK(p.e.terms() == a.e.terms());
  PPElement sq = pp_mul(a, a);
  CHECK(sq.n == 9);
  CHECK((phi_hat(sq) - phi_hat(a) * phi_hat(a)).is_zero() == Answer::Yes);
}

TEST_CASE("suite reports are reproducible") {
  Context ctx = ctx_of("3_1");
  SuiteReport a = run_kch_suite(ctx, "3_1", 20, 42);
  SuiteReport b = run_kch_suite(ctx, "3_1", 20, 42);
  REQUIRE(a.properties.size() == b.properties.size());
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    CHECK(a.properties[i].name == b.properties[i].name);
    CHECK(a.properties[i].pass == b.properties[i].pass);
    CHECK(a.properties[i].fail == b.properties[i].fail);
  }
  CHECK(a.ok());
  SuiteReport empty = run_kch_suite(ctx, "3_1", 0, 1);
  CHECK(empty.properties.empty());
  CHECK(empty.ok());
}
