#pragma once

#include <cstddef>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/presentation.hpp"

namespace kch {

  using Permutation = std::vector<int>;

  // A homomorphism to S_d given by generator images; points act on the right,
  // so evaluate(uv) = evaluate(u) followed by evaluate(v).
  struct PermutationRep {
    std::size_t degree = 0;
    std::vector<Permutation> images;

    Permutation evaluate(FreeWord const& w) const;
    bool is_transitive() const;
    bool satisfies(GroupPresentation const& p) const;
    // True when some generator image is a transposition and all are
    // conjugate to it (the Fox-colouring shape).
    bool meridians_are_transpositions() const;

    friend bool operator==(PermutationRep const&, PermutationRep const&) = default;
  };

  struct QuotientSearchStats {
    std::size_t candidates = 0;
    std::vector<std::size_t> skipped_degrees;  // too large to search exhaustively
  };

  // All transitive representations of degree <= degree_bound up to
  // conjugacy, each verified against every relator. Degrees whose search
  // space exceeds `search_cap` are skipped and reported in `stats`.
  std::vector<PermutationRep> finite_quotients(GroupPresentation const& p,
                                               std::size_t degree_bound,
                                               QuotientSearchStats* stats = nullptr,
                                               std::size_t search_cap = 5'000'000);

}  // namespace kch
