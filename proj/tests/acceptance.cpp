// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kch/alexander.hpp"
#include "kch/census.hpp"
#include "kch/error.hpp"
#include "kch/kch_suite.hpp"
#include "kch/presentation.hpp"
#include "kch/random.hpp"
#include "kch/recovery.hpp"

using namespace kch;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  struct Outcome {
    bool pass = false;
    std::string detail;
  };

  std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
  }

  KnotDiagram knot(std::vector<CensusEntry> const& census, std::string const& name) {
    auto e = find_knot(census, name);
    if (!e) {
      throw ValidationError("census lacks " + name);
    }
    return e->diagram();
  }

  LaurentPoly poly(std::vector<int> c) { return LaurentPoly(0, std::vector<Integer>(c.begin(), c.end())); }

  Outcome alexander_agreement(std::vector<CensusEntry> const& census) {
    auto t0 = Clock::now();
    std::size_t mismatches = 0, missing = 0;
    for (auto const& e : census) {
      KnotDiagram d = e.diagram();
      LaurentPoly q = alexander_polynomial(quandle_matrix(d));
      KnotGroup g = wirtinger(d);
      LaurentPoly f = fox_oracle(g.presentation, g.peripheral);
      if (!e.expected_alexander) {
        ++missing;
      }
      if (q != f || (e.expected_alexander && *e.expected_alexander != q)) {
        ++mismatches;
      }
    }
    auto route = [&](std::string const& n) { return alexander_polynomial(quandle_matrix(knot(census, n))); };
    bool spots = route("3_1") == poly({1, -1, 1}) && route("4_1") == poly({1, -3, 1})
                 && route("5_1") == poly({1, -1, 1, -1, 1});
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << census.size() << " knots, " << mismatches << " mismatches, " << missing
       << " without expected value, spot values " << (spots ? "ok" : "wrong") << ", " << fmt_seconds(dt);
    return {census.size() == 35 && mismatches == 0 && missing == 0 && spots && dt < 10.0, os.str()};
  }

  Outcome phi_well_defined(std::vector<CensusEntry> const& census) {
    auto t0 = Clock::now();
    std::size_t pass = 0, fail = 0, unknown = 0;
    bool deciding = true;
    for (std::string name : {"3_1", "4_1"}) {
      Context ctx = knot_context(knot(census, name));
      deciding = deciding && ctx->exact();
      for (auto c : {Classification::KK, Classification::Kp, Classification::pK, Classification::pp}) {
        Rng rng(1000 + static_cast<unsigned>(c));
        PropertyCount p = check_phi_invariance(ctx, c, 1000, rng);
        pass += p.pass;
        fail += p.fail;
        unknown += p.unknown;
      }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << pass << " pass, " << fail << " fail, " << unknown << " unknown over 2 knots x 4 classes x 1000, "
       << fmt_seconds(dt);
    return {deciding && fail == 0 && unknown == 0 && pass == 8000 && dt < 60.0, os.str()};
  }

  Outcome ring_isomorphism(std::vector<CensusEntry> const& census) {
    auto t0 = Clock::now();
    std::ostringstream os;
    bool ok = true;
    for (std::string name : {"3_1", "4_1"}) {
      Context ctx = knot_context(knot(census, name));
      Rng rng(2024);
      for (PropertyCount const& p : {check_mu_homomorphism(ctx, 500, rng), check_pp_multiplicative(ctx, 500, rng),
                                     check_complementarity(ctx, 500, rng)}) {
        ok = ok && p.fail == 0 && p.total() == 500 && p.unknown * 100 < p.total();
        os << name << " " << p.name << " " << p.pass << "/" << p.fail << "/" << p.unknown << "; ";
      }
    }
    os << "pass/fail/unknown, " << fmt_seconds(seconds_since(t0));
    return {ok, os.str()};
  }

  Outcome cancellation_lemma() {
    auto t0 = Clock::now();
    LemmaReport r = brute_force_lemma_check(4, 3, 2);
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << r.candidates << " candidates, " << r.instances << " instances, " << r.counterexamples
       << " counterexamples, " << r.solver_failures << " solver failures, " << fmt_seconds(dt);
    return {r.counterexamples == 0 && r.solver_failures == 0 && r.instances > 0 && dt < 120.0, os.str()};
  }

  bool all_yes(RecoveryResult const& r) {
    for (auto const& c : r.checks) {
      if (c.answer != Answer::Yes) {
        return false;
      }
    }
    return !r.checks.empty();
  }

  Outcome recovery(std::vector<CensusEntry> const& census) {
    std::ostringstream os;
    bool ok = true;
    for (std::string name : {"3_1", "4_1"}) {
      KnotDiagram d = knot(census, name);
      KnotGroup g = wirtinger(d);
      auto b = make_backend(g.presentation);
      FreeWord const m = g.peripheral.meridian, l = g.peripheral.longitude;
      try {
        RecoveryResult id = recover_peripheral(identity_iso(g));
        bool id_ok = all_yes(id) && id.sign_m == 1 && id.sign_l == 1;

        FreeWord gamma = FreeWord::power(1, 2) * FreeWord::power(2, -1) * FreeWord::power(0, 1);
        RecoveryResult cj = recover_peripheral(conjugated_iso(g, gamma));
        // the planted conjugator is recovered up to the peripheral subgroup
        FreeWord delta = cj.conjugator * gamma.inverse();
        bool planted = b->equal(delta * m, m * delta).yes() && b->equal(delta * l, l * delta).yes();
        bool cj_ok = all_yes(cj) && cj.sign_m == 1 && cj.sign_l == 1 && planted;

        RecoveryResult mi = recover_peripheral(mirror_iso(d));
        bool mi_ok = all_yes(mi) && mi.sign_m == -1 && mi.sign_l == 1;

        os << name << " identity (" << id.sign_m << "," << id.sign_l << ") conjugated (" << cj.sign_m << ","
           << cj.sign_l << (planted ? ", gamma recovered" : ", gamma lost") << ") mirror (" << mi.sign_m << ","
           << mi.sign_l << "); ";
        ok = ok && id_ok && cj_ok && mi_ok;
      } catch (Error const& e) {
        os << name << " error: " << e.what() << "; ";
        ok = false;
      }
    }
    return {ok, os.str()};
  }

  // Re-checks an answer against its certificate and every finite quotient.
  bool sound(WordBackend const& b, FreeWord const& u, FreeWord const& v, EqualityResult const& r) {
    auto const& qs = b.quotients();
    if (r.yes()) {
      if (b.degree(u) != b.degree(v)) {
        return false;
      }
      for (auto const& q : qs) {
        if (q.evaluate(u) != q.evaluate(v)) {
          return false;
        }
      }
      return true;
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

  Outcome word_problem(std::vector<CensusEntry> const& census) {
    std::ostringstream os;
    bool ok = true;
    for (std::string name : {"3_1", "4_1"}) {
      KnotGroup g = wirtinger(knot(census, name));
      GroupPresentation const& p = g.presentation;
      auto b = make_backend(p);
      Rng rng(77);
      std::size_t unsound = 0, yes = 0, no = 0;
      FreeWord const m = g.peripheral.meridian, l = g.peripheral.longitude;
      FreeWord comm = m * l * m.inverse() * l.inverse();
      EqualityResult c = b->equal(comm, FreeWord{});
      unsound += !sound(*b, comm, FreeWord{}, c);

      for (int i = 0; i < 200; ++i) {
        FreeWord w = random_word(rng, p.generators, 8);
        FreeWord prod;
        for (long k = 0, n = uniform(rng, 1, 3); k < n; ++k) {
          auto const& r = p.relators[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(p.relators.size()) - 1))];
          FreeWord cj = random_word(rng, p.generators, 3);
          prod *= cj * (coin(rng) ? r : r.inverse()) * cj.inverse();
        }
        FreeWord v = w * prod;
        EqualityResult r = b->equal(w, v);
        yes += r.yes();
        unsound += !sound(*b, w, v, r);
      }
      for (int i = 0; i < 200;) {
        FreeWord u = random_word(rng, p.generators, 8), v = random_word(rng, p.generators, 8);
        if (abelianize(u, g.degrees) == abelianize(v, g.degrees)) {
          continue;
        }
        ++i;
        EqualityResult r = b->equal(u, v);
        no += r.no();
        unsound += !sound(*b, u, v, r);
      }
      os << name << " commutator " << to_string(c.answer) << ", " << yes << "/200 yes, " << no << "/200 no, "
         << unsound << " unsound; ";
      ok = ok && c.yes() && yes == 200 && no == 200 && unsound == 0;
    }
    return {ok, os.str()};
  }

}  // namespace

int main() {
  std::vector<CensusEntry> census;
  try {
    census = load_census(default_census_path());
  } catch (Error const& e) {
    std::cout << "cannot load census: " << e.what() << '\n';
    return 1;
  }
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 alexander agreement", [&] { return alexander_agreement(census); }},
      {"2 phi well-definedness", [&] { return phi_well_defined(census); }},
      {"3 ring isomorphism suite", [&] { return ring_isomorphism(census); }},
      {"4 cancellation lemma brute force", [] { return cancellation_lemma(); }},
      {"5 recovery pipeline", [&] { return recovery(census); }},
      {"6 word-problem soundness", [&] { return word_problem(census); }},
  };
  bool all = true;
  for (auto const& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")" << std::endl;
  }
  return all ? 0 : 1;
}
