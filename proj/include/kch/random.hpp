#pragma once

// Seeded random generators for property checks. Everything is driven by one
// std::mt19937_64 so a seed reproduces a report exactly.

#include <cstddef>
#include <cstdint>
#include <random>

#include "kch/free_word.hpp"
#include "kch/group_ring.hpp"
#include "kch/string_module.hpp"

namespace kch {

  using Rng = std::mt19937_64;

  long uniform(Rng& rng, long lo, long hi);  // inclusive
  bool coin(Rng& rng, double p = 0.5);

  // Reduced word of length at most max_length. A positive height_bound keeps
  // every prefix exponent sum within [-height_bound, height_bound]; for
  // fibred normal forms the cost grows exponentially with that excursion.
  FreeWord random_word(Rng& rng, std::size_t generators, std::size_t max_length,
                       long height_bound = 0);
  PeripheralClass random_peripheral(Rng& rng, long bound = 1);

  struct BracketShape {
    std::size_t max_letters = 5;
    std::size_t max_word = 3;
    long peripheral_bound = 1;
    long height_bound = 1;
  };

  // Alternating word of the given classification; trivial letters ({1}, [1])
  // are produced often so that reverse relations find sites.
  BracketWord random_bracket_word(Rng& rng, std::size_t generators, Classification c,
                                  BracketShape const& shape = {});
  SElement random_selement(Rng& rng, Context const& ctx, Classification c, std::size_t max_terms,
                           BracketShape const& shape = {});
  GroupRingElement random_element(Rng& rng, Context const& ctx, std::size_t max_terms,
                                  std::size_t max_length, long coeff_bound,
                                  long height_bound = 2);

}  // namespace kch
