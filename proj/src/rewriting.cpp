#include "kch/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace kch {

  namespace {

    int shortlex_compare(std::span<Letter const> a, std::span<Letter const> b) {
      if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
          return a[i] < b[i] ? -1 : 1;
        }
      }
      return 0;
    }

    using Equation = std::pair<std::vector<Letter>, std::vector<Letter>>;

  }  // namespace

  WordOrder WordOrder::shortlex() { return WordOrder{}; }

  WordOrder WordOrder::wreath(std::vector<unsigned> generator_levels) {
    WordOrder o;
    o.top_ = generator_levels.empty()
                 ? 0
                 : *std::max_element(generator_levels.begin(), generator_levels.end());
    o.levels_ = std::move(generator_levels);
    return o;
  }

  int WordOrder::compare(std::span<Letter const> a, std::span<Letter const> b) const {
    if (levels_.empty()) {
      return shortlex_compare(a, b);
    }
    return compare_at(a, b, top_);
  }

  int WordOrder::compare_at(std::span<Letter const> a, std::span<Letter const> b,
                            unsigned level) const {
    std::vector<Letter> pa, pb;
    for (Letter x : a) {
      if (level_of(x) == level) {
        pa.push_back(x);
      }
    }
    for (Letter x : b) {
      if (level_of(x) == level) {
        pb.push_back(x);
      }
    }
    if (int c = shortlex_compare(pa, pb); c != 0 || level == 0) {
      return c;
    }
    // same top letters: compare the segments between them one level down
    std::size_t ia = 0, ib = 0;
    while (true) {
      std::size_t ja = ia, jb = ib;
      while (ja < a.size() && level_of(a[ja]) != level) {
        ++ja;
      }
      while (jb < b.size() && level_of(b[jb]) != level) {
        ++jb;
      }
      if (int c = compare_at(a.subspan(ia, ja - ia), b.subspan(ib, jb - ib), level - 1); c != 0) {
        return c;
      }
      if (ja == a.size() || jb == b.size()) {
        return 0;
      }
      ia = ja + 1;
      ib = jb + 1;
    }
  }

  RewritingSystem::RewritingSystem(std::size_t generators, WordOrder order)
      : generators_(generators), order_(std::move(order)) {
    trie_.push_back(Node{std::vector<int>(2 * generators_, -1), -1});
    std::vector<Equation> pending;
    for (std::size_t g = 0; g < generators_; ++g) {
      for (bool inv : {false, true}) {
        Letter x = make_letter(g, inv);
        add_rule({x, inverse_letter(x)}, {}, pending);
      }
    }
  }

  void RewritingSystem::insert(std::size_t id) {
    auto const& lhs = rules_[id].lhs;
    std::size_t node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      int nxt = trie_[node].next[*it];
      if (nxt < 0) {
        nxt = static_cast<int>(trie_.size());
        trie_[node].next[*it] = nxt;
        trie_.push_back(Node{std::vector<int>(2 * generators_, -1), -1});
      }
      node = static_cast<std::size_t>(nxt);
    }
    trie_[node].rule = static_cast<int>(id);
  }

  void RewritingSystem::erase(std::size_t id) {
    auto const& lhs = rules_[id].lhs;
    std::size_t node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      node = static_cast<std::size_t>(trie_[node].next[*it]);
    }
    trie_[node].rule = -1;
    alive_[id] = false;
    --live_;
  }

  int RewritingSystem::match_suffix(std::span<Letter const> w) const {
    std::size_t node = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      int nxt = trie_[node].next[*it];
      if (nxt < 0) {
        return -1;
      }
      node = static_cast<std::size_t>(nxt);
      if (trie_[node].rule >= 0) {
        return trie_[node].rule;
      }
    }
    return -1;
  }

  std::vector<Letter> RewritingSystem::reduce(std::span<Letter const> w) const {
    std::vector<Letter> out;
    std::vector<Letter> in(w.rbegin(), w.rend());
    out.reserve(w.size());
    while (!in.empty()) {
      out.push_back(in.back());
      in.pop_back();
      int r = match_suffix(out);
      if (r >= 0) {
        auto const& rule = rules_[static_cast<std::size_t>(r)];
        out.resize(out.size() - rule.lhs.size());
        in.insert(in.end(), rule.rhs.rbegin(), rule.rhs.rend());
      }
    }
    return out;
  }

  FreeWord RewritingSystem::reduce(FreeWord const& w) const {
    auto r = reduce(std::span<Letter const>(w.letters()));
    return FreeWord(r);
  }

  bool RewritingSystem::add_rule(std::vector<Letter> lhs, std::vector<Letter> rhs,
                                 std::vector<Equation>& pending) {
    lhs = reduce(lhs);
    rhs = reduce(rhs);
    int c = order_.compare(lhs, rhs);
    if (c == 0) {
      return false;
    }
    if (c < 0) {
      std::swap(lhs, rhs);
    }
    std::size_t const id = rules_.size();
    // interreduce: rules whose lhs contains the new lhs go back to pending
    for (std::size_t i = 0; i < id; ++i) {
      if (!alive_[i]) {
        continue;
      }
      auto const& l = rules_[i].lhs;
      if (std::search(l.begin(), l.end(), lhs.begin(), lhs.end()) != l.end()) {
        pending.emplace_back(rules_[i].lhs, rules_[i].rhs);
        erase(i);
      }
    }
    rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
    alive_.push_back(true);
    ++live_;
    insert(id);
    for (std::size_t i = 0; i < id; ++i) {
      if (alive_[i]) {
        rules_[i].rhs = reduce(rules_[i].rhs);
      }
    }
    confluent_ = false;
    return true;
  }

  void RewritingSystem::add_equation(std::span<Letter const> u, std::span<Letter const> v) {
    std::vector<Equation> pending;
    pending.emplace_back(std::vector<Letter>(u.begin(), u.end()),
                         std::vector<Letter>(v.begin(), v.end()));
    while (!pending.empty()) {
      auto [a, b] = std::move(pending.back());
      pending.pop_back();
      add_rule(std::move(a), std::move(b), pending);
    }
  }

  std::vector<Rule> RewritingSystem::rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (alive_[i]) {
        out.push_back(rules_[i]);
      }
    }
    return out;
  }

  bool knuth_bendix(RewritingSystem& s, CompletionBudget const& budget) {
    std::vector<Equation> pending;
    auto over_budget = [&] {
      if (s.live_ > budget.max_rules) {
        return true;
      }
      for (std::size_t i = 0; i < s.rules_.size(); ++i) {
        if (s.alive_[i] && s.rules_[i].lhs.size() > budget.max_length) {
          return true;
        }
      }
      return false;
    };
    auto drain = [&] {
      while (!pending.empty()) {
        auto [a, b] = std::move(pending.back());
        pending.pop_back();
        if (s.add_rule(std::move(a), std::move(b), pending)) {
          auto const& r = s.rules_.back();
          if (r.lhs.size() > budget.max_length || s.live_ > budget.max_rules) {
            return false;
          }
        }
      }
      return true;
    };
    if (over_budget()) {
      return false;
    }

    for (std::size_t i = 0; i < s.rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < s.rules_.size(); ++j) {
        for (int pass = 0; pass < (i == j ? 1 : 2); ++pass) {
          std::size_t p = pass == 0 ? i : j, q = pass == 0 ? j : i;
          if (!s.alive_[i] || !s.alive_[j]) {
            break;
          }
          // copies: add_rule may reallocate rules_
          std::vector<Letter> u1 = s.rules_[p].lhs, v1 = s.rules_[p].rhs;
          std::vector<Letter> u2 = s.rules_[q].lhs, v2 = s.rules_[q].rhs;
          std::size_t const top = std::min(u1.size(), u2.size());
          for (std::size_t k = 1; k < top; ++k) {
            if (!std::equal(u1.end() - static_cast<long>(k), u1.end(), u2.begin())) {
              continue;
            }
            std::vector<Letter> left = v1;
            left.insert(left.end(), u2.begin() + static_cast<long>(k), u2.end());
            std::vector<Letter> right(u1.begin(), u1.end() - static_cast<long>(k));
            right.insert(right.end(), v2.begin(), v2.end());
            left = s.reduce(left);
            right = s.reduce(right);
            if (left != right) {
              pending.emplace_back(std::move(left), std::move(right));
              if (!drain()) {
                return false;
              }
            }
          }
        }
      }
    }
    s.confluent_ = true;
    return true;
  }

}  // namespace kch
