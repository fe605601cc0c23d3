#pragma once

// Word problem for two-generator one-relator groups <a,b | r> whose
// commutator kernel is finitely generated free (fibred knots). With
// t = a and y = b a^-1, the relator rewritten in y_k = t^k y t^-k has unique
// lowest and highest subscripts kmin < kmax; the kernel is then free on
// z_j = y_{kmin+j} (0 <= j < N = kmax - kmin) and the group is the
// semidirect product F_N x| <t>. Conjugation by t gives an automorphism phi
// of F_N, and the rules
//
//   z t -> t psi(z),  z t^-1 -> t^-1 phi(z),  t t^-1 -> 1, ...
//
// with psi = phi^-1 form a complete system for a wreath order with t above
// the z's. Normal forms are t^k w with w freely reduced.

#include <cstddef>
#include <optional>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/presentation.hpp"
#include "kch/rewriting.hpp"

namespace kch {

  class FibredStructure {
   public:
    // Internal alphabet: generator 0 is t, generator j+1 is z_j.
    std::size_t rank() const noexcept { return phi_.size(); }
    long kmin() const noexcept { return kmin_; }

    FreeWord to_internal(FreeWord const& w) const;  // over {a, b}
    FreeWord to_external(FreeWord const& w) const;  // over {t, z}

    // Normal form of a word over {a, b}, returned over {a, b}.
    FreeWord normalize(FreeWord const& w) const;

    RewritingSystem const& system() const noexcept { return system_; }
    std::vector<FreeWord> const& phi() const noexcept { return phi_; }
    std::vector<FreeWord> const& psi() const noexcept { return psi_; }

    // Tries every admissible choice of t and y. The relator is checked to
    // reduce to the identity and completion is rerun to confirm confluence.
    static std::optional<FibredStructure> detect(FreeWord const& relator,
                                                 CompletionBudget const& budget);

   private:
    FibredStructure(std::size_t t_gen, bool right);

    std::size_t t_gen_ = 0;  // which of a (0) or b (1) plays t
    bool right_ = true;      // y = s t^-1 (right) or t^-1 s, s the other generator
    long kmin_ = 0;
    std::vector<FreeWord> phi_, psi_;
    RewritingSystem system_{1, WordOrder::shortlex()};
  };

}  // namespace kch
