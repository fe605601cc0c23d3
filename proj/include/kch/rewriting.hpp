#pragma once

// String rewriting over group alphabets (letters as in free_word.hpp) and a
// budgeted Knuth-Bendix completion.

#include <cstddef>
#include <span>
#include <vector>

#include "kch/free_word.hpp"

namespace kch {

  // Reduction orders on letter strings. Shortlex ranks letters by their code
  // (g0 < g0^-1 < g1 < ...). The wreath order assigns every letter a level;
  // words are first compared by their top-level letters (shortlex), then
  // segment by segment one level down.
  class WordOrder {
   public:
    static WordOrder shortlex();
    static WordOrder wreath(std::vector<unsigned> generator_levels);

    // <0, 0, >0
    int compare(std::span<Letter const> a, std::span<Letter const> b) const;
    bool less(std::span<Letter const> a, std::span<Letter const> b) const {
      return compare(a, b) < 0;
    }

   private:
    int compare_at(std::span<Letter const> a, std::span<Letter const> b, unsigned level) const;
    unsigned level_of(Letter x) const {
      std::size_t g = generator_of(x);
      return g < levels_.size() ? levels_[g] : 0;
    }

    std::vector<unsigned> levels_;  // empty: shortlex
    unsigned top_ = 0;
  };

  struct Rule {
    std::vector<Letter> lhs, rhs;
  };

  struct CompletionBudget {
    std::size_t max_rules = 2000;
    std::size_t max_length = 60;  // longest admissible left-hand side
  };

  class RewritingSystem {
   public:
    // alphabet counts generators; inverse cancellation rules are added.
    RewritingSystem(std::size_t generators, WordOrder order);

    std::size_t generators() const noexcept { return generators_; }

    // Orients and adds u = v (no completion).
    void add_equation(std::span<Letter const> u, std::span<Letter const> v);

    std::vector<Letter> reduce(std::span<Letter const> w) const;
    FreeWord reduce(FreeWord const& w) const;

    std::vector<Rule> rules() const;
    std::size_t rule_count() const noexcept { return live_; }
    bool confluent() const noexcept { return confluent_; }
    WordOrder const& order() const noexcept { return order_; }

    friend bool knuth_bendix(RewritingSystem& s, CompletionBudget const& budget);

   private:
    struct Node {
      std::vector<int> next;
      int rule = -1;
    };

    void insert(std::size_t id);
    void erase(std::size_t id);
    // Index of a rule whose lhs is a suffix of w, or -1.
    int match_suffix(std::span<Letter const> w) const;
    bool add_rule(std::vector<Letter> lhs, std::vector<Letter> rhs,
                  std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>>& pending);

    std::size_t generators_;
    WordOrder order_;
    std::vector<Rule> rules_;
    std::vector<bool> alive_;
    std::size_t live_ = 0;
    std::vector<Node> trie_;  // over reversed left-hand sides
    bool confluent_ = false;
  };

  // Runs completion until confluence or until the budget is exceeded.
  // Returns true iff the system is confluent; on failure the system remains
  // sound (every rule is a consequence of the input) but may not be canonical.
  bool knuth_bendix(RewritingSystem& s, CompletionBudget const& budget);

}  // namespace kch
