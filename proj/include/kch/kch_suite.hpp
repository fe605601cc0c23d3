#pragma once

// Executable identities of the KCH-triple: phi-invariance of the string
// relations, the normalizer, mu as multiplication, the Z + R_pp ring
// structure, complementarity R = Z + R(1-m)R with witnesses, the skein
// relations in the phi-image and the group ring axioms.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kch/group_ring.hpp"
#include "kch/knot_diagram.hpp"
#include "kch/random.hpp"
#include "kch/string_module.hpp"

namespace kch {

  // Ring context over the Tietze-reduced Wirtinger group of d.
  Context knot_context(KnotDiagram const& d, BackendOptions const& options = {});

  struct PropertyCount {
    PropertyCount() = default;
    explicit PropertyCount(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t unknown = 0;
    std::vector<std::string> failures;  // first few counterexamples

    std::size_t total() const { return pass + fail + unknown; }
    void record(Answer a, std::string const& detail = {});
  };

  PropertyCount check_phi_invariance(Context const& ctx, Classification c, std::size_t samples,
                                     Rng& rng);
  PropertyCount check_normalize(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_mu_homomorphism(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_tensor_balance(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_pp_multiplicative(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_pp_associative(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_complementarity(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_skein(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_left_ideal(Context const& ctx, std::size_t samples, Rng& rng);
  PropertyCount check_ring_axioms(Context const& ctx, std::size_t samples, Rng& rng);

  struct SuiteReport {
    std::string knot;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<PropertyCount> properties;

    bool ok() const;
  };

  // Each property draws from its own generator seeded from (seed, index).
  SuiteReport run_kch_suite(Context const& ctx, std::string knot, std::size_t samples,
                            std::uint64_t seed);

}  // namespace kch
