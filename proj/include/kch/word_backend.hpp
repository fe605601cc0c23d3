#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kch/fibration.hpp"
#include "kch/free_word.hpp"
#include "kch/permutation_reps.hpp"
#include "kch/presentation.hpp"
#include "kch/rewriting.hpp"
#include "kch/torus.hpp"

namespace kch {

  enum class BackendKind { FreeReduce, KnuthBendixBounded, TorusKnotNormalForm, FiniteQuotientSeparator };

  std::string to_string(BackendKind k);
  BackendKind backend_kind_from_string(std::string const& s);

  struct BackendOptions {
    BackendKind kind = BackendKind::KnuthBendixBounded;
    CompletionBudget budget;
    std::size_t quotient_degree = 5;  // 0 disables finite-quotient separation

    friend bool operator==(BackendOptions const& a, BackendOptions const& b) {
      return a.kind == b.kind && a.budget.max_rules == b.budget.max_rules
             && a.budget.max_length == b.budget.max_length
             && a.quotient_degree == b.quotient_degree;
    }
  };

  enum class Answer { Yes, No, Unknown };
  enum class Certificate { None, FreeReduction, NormalForm, Abelianization, FiniteQuotient };

  std::string to_string(Answer a);
  std::string to_string(Certificate c);

  struct EqualityResult {
    Answer answer = Answer::Unknown;
    Certificate certificate = Certificate::None;
    std::size_t quotient = 0;  // index into quotients() for FiniteQuotient

    bool yes() const noexcept { return answer == Answer::Yes; }
    bool no() const noexcept { return answer == Answer::No; }
  };

  // Sound three-valued word problem solver for one presentation. Words are
  // always over the presentation's own generators; internally they are
  // pushed through a Tietze reduction.
  class WordBackend {
   public:
    WordBackend(GroupPresentation p, BackendOptions options);

    WordBackend(WordBackend const&) = delete;
    WordBackend& operator=(WordBackend const&) = delete;

    GroupPresentation const& presentation() const noexcept { return presentation_; }
    BackendOptions const& options() const noexcept { return options_; }
    TietzeReduction const& reduction() const noexcept { return tietze_; }

    // True when normalize yields canonical forms.
    bool decides() const noexcept { return decides_; }
    // Which mechanism is active ("free", "fibred", "torus", "shortlex").
    std::string const& method() const noexcept { return method_; }

    // Sound rewriting; canonical exactly when decides().
    FreeWord reduce(FreeWord const& w) const;
    // Canonical representative; throws BackendError unless decides().
    FreeWord normalize(FreeWord const& w) const;

    EqualityResult equal(FreeWord const& a, FreeWord const& b) const;

    bool has_degrees() const noexcept { return degrees_.has_value(); }
    // Abelianization degree (meridian = generator 0); throws InvariantError
    // when the abelianization is not infinite cyclic.
    long degree(FreeWord const& w) const;
    std::vector<int> const& degrees() const;

    // Transitive permutation quotients, as representations of presentation().
    std::vector<PermutationRep> const& quotients() const;

    std::optional<FibredStructure> const& fibration() const noexcept { return fibred_; }
    std::optional<TorusStructure> const& torus() const noexcept { return torus_; }

   private:
    FreeWord reduce_internal(FreeWord const& reduced_word) const;

    GroupPresentation presentation_;
    BackendOptions options_;
    TietzeReduction tietze_;
    std::optional<std::vector<int>> degrees_;
    std::optional<FibredStructure> fibred_;
    std::optional<TorusStructure> torus_;
    std::optional<RewritingSystem> rewriting_;
    bool decides_ = false;
    std::string method_ = "free";

    mutable std::once_flag quotients_once_;
    mutable std::vector<PermutationRep> quotients_;
  };

  // Backends are cached per (presentation, options) so completion runs once.
  std::shared_ptr<WordBackend const> make_backend(GroupPresentation const& p,
                                                  BackendOptions const& options = {});

}  // namespace kch
