#pragma once

// Recovering the peripheral structure from isomorphism data of KCH-triples:
// units of Z[pi], the cancellation lemma z(1 - m) = 1 - g => g = m^n, and
// the pipeline extracting the conjugator and the meridian/longitude signs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/group_ring.hpp"
#include "kch/integer.hpp"
#include "kch/presentation.hpp"
#include "kch/word_backend.hpp"

namespace kch {

  using RingTerms = std::vector<std::pair<Integer, FreeWord>>;

  struct IsoData {
    GroupPresentation source;
    PeripheralSystem source_peripheral;
    GroupPresentation target;
    PeripheralSystem target_peripheral;
    std::vector<FreeWord> psi;    // images of the source generators
    std::array<long, 4> matrix{};  // psi(m0) = m1^n1 l1^n2, psi(l0) = m1^n3 l1^n4
    RingTerms x;                   // psi_Kp(1)
    RingTerms xprime;              // psi_pK(1 - m0) = x'(1 - m1)
  };

  // Throws ValidationError on out-of-range words or a matrix not in GL2(Z).
  void validate(IsoData const& d);

  struct RecoveryCheck {
    std::string name;
    Answer answer = Answer::Unknown;
  };

  struct RecoveryResult {
    FreeWord conjugator;
    int sign_m = 1;
    int sign_l = 1;
    long n3_check = 0;
    std::vector<RecoveryCheck> checks;  // every one is Yes on return
  };

  struct Unit {
    int sign = 1;
    FreeWord g;
  };

  // u = +-g, decided by support size (units of Z[G] for G left-orderable).
  std::optional<Unit> recognize_unit(GroupRingElement const& u);

  struct PowerDivisor {
    FreeWord g;
    long n = 0;
  };

  // If z(1 - m) = 1 - g, returns g and n with g = m^n (n read off the
  // abelianization and certified by the backend). Throws UnknownAnswer when
  // the backend cannot decide.
  std::optional<PowerDivisor> solve_power_divisor(GroupRingElement const& z, FreeWord const& m);

  // Throws MatchFailure, UnknownAnswer or KnotednessViolation.
  RecoveryResult recover_peripheral(IsoData const& data, BackendOptions const& options = {});

  // Self-isomorphism data for exercising the pipeline.
  IsoData identity_iso(KnotGroup const& g);
  IsoData conjugated_iso(KnotGroup const& g, FreeWord const& gamma);
  // K (diagram d) to its mirror, presented by the reflected diagram: each
  // arc generator goes to the inverse of the same arc's generator.
  IsoData mirror_iso(KnotDiagram const& d);

  struct LemmaReport {
    std::uint64_t candidates = 0;  // elements z enumerated
    std::uint64_t instances = 0;   // z with z(1 - m) = 1 - g
    std::uint64_t counterexamples = 0;
    std::uint64_t solver_failures = 0;
  };

  // Every z in Z[F2] supported on at most support_bound reduced words of
  // length <= length_bound, coefficients in [-coeff_bound, coeff_bound] \ {0},
  // with m the first generator.
  LemmaReport brute_force_lemma_check(std::size_t length_bound, std::size_t support_bound,
                                      long coeff_bound);

}  // namespace kch
