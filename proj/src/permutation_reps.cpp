#include "kch/permutation_reps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kch {

  namespace {

    Permutation invert(Permutation const& p) {
      Permutation q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
      }
      return q;
    }

    // One permutation per cycle type: consecutive cycles of the given lengths.
    void cycle_types(std::size_t d, std::size_t max_part, std::vector<std::size_t>& parts,
                     std::vector<Permutation>& out) {
      if (d == 0) {
        Permutation p;
        int base = 0;
        for (std::size_t len : parts) {
          for (std::size_t i = 0; i < len; ++i) {
            p.push_back(base + static_cast<int>((i + 1) % len));
          }
          base += static_cast<int>(len);
        }
        out.push_back(std::move(p));
        return;
      }
      for (std::size_t part = std::min(d, max_part); part >= 1; --part) {
        parts.push_back(part);
        cycle_types(d - part, part, parts, out);
        parts.pop_back();
      }
    }

    std::vector<Permutation> canonical(std::vector<Permutation> const& images, std::size_t d) {
      std::vector<Permutation> inv;
      for (auto const& p : images) {
        inv.push_back(invert(p));
      }
      std::vector<Permutation> best;
      for (std::size_t s = 0; s < d; ++s) {
        std::vector<int> label(d, -1);
        std::vector<std::size_t> order{s};
        label[s] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
          std::size_t u = order[head];
          for (std::size_t g = 0; g < images.size(); ++g) {
            for (Permutation const* p : {&images[g], static_cast<Permutation const*>(&inv[g])}) {
              std::size_t v = static_cast<std::size_t>((*p)[u]);
              if (label[v] < 0) {
                label[v] = static_cast<int>(order.size());
                order.push_back(v);
              }
            }
          }
        }
        std::vector<Permutation> relabeled(images.size(), Permutation(d));
        for (std::size_t g = 0; g < images.size(); ++g) {
          for (std::size_t u = 0; u < d; ++u) {
            relabeled[g][static_cast<std::size_t>(label[u])] = label[static_cast<std::size_t>(images[g][u])];
          }
        }
        if (best.empty() || relabeled < best) {
          best = std::move(relabeled);
        }
      }
      return best;
    }

    struct Search {
      GroupPresentation const& p;
      std::size_t d;
      std::vector<std::vector<std::size_t>> relators_closing_at;  // by max generator
      std::vector<Permutation> images, inverses;
      std::set<std::vector<Permutation>> found;
      std::size_t candidates = 0;

      bool relator_holds(FreeWord const& r) const {
        for (std::size_t start = 0; start < d; ++start) {
          std::size_t pt = start;
          for (Letter x : r.letters()) {
            auto const& perm = is_inverse(x) ? inverses[generator_of(x)] : images[generator_of(x)];
            pt = static_cast<std::size_t>(perm[pt]);
          }
          if (pt != start) {
            return false;
          }
        }
        return true;
      }

      void assign(std::size_t g, std::vector<Permutation> const& first_choices) {
        if (g == p.generators) {
          ++candidates;
          PermutationRep rep{d, images};
          if (rep.is_transitive()) {
            found.insert(canonical(images, d));
          }
          return;
        }
        auto try_perm = [&](Permutation const& perm) {
          images[g] = perm;
          inverses[g] = invert(perm);
          for (std::size_t r : relators_closing_at[g]) {
            if (!relator_holds(p.relators[r])) {
              return;
            }
          }
          assign(g + 1, first_choices);
        };
        if (g == 0) {
          for (auto const& perm : first_choices) {
            try_perm(perm);
          }
          return;
        }
        Permutation perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          try_perm(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    };

  }  // namespace

  Permutation PermutationRep::evaluate(FreeWord const& w) const {
    Permutation result(degree);
    std::iota(result.begin(), result.end(), 0);
    for (Letter x : w.letters()) {
      auto const& img = images.at(generator_of(x));
      if (is_inverse(x)) {
        Permutation inv = invert(img);
        for (auto& v : result) {
          v = inv[static_cast<std::size_t>(v)];
        }
      } else {
        for (auto& v : result) {
          v = img[static_cast<std::size_t>(v)];
        }
      }
    }
    return result;
  }

  bool PermutationRep::is_transitive() const {
    if (degree == 0) {
      return false;
    }
    std::vector<bool> seen(degree, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto const& p : images) {
        std::size_t v = static_cast<std::size_t>(p[queue[head]]);
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return queue.size() == degree;
  }

  bool PermutationRep::satisfies(GroupPresentation const& p) const {
    for (auto const& r : p.relators) {
      auto e = evaluate(r);
      for (std::size_t i = 0; i < degree; ++i) {
        if (e[i] != static_cast<int>(i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool PermutationRep::meridians_are_transpositions() const {
    if (images.empty()) {
      return false;
    }
    for (auto const& p : images) {
      std::size_t moved = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        moved += p[i] != static_cast<int>(i) ? 1 : 0;
        if (p[static_cast<std::size_t>(p[i])] != static_cast<int>(i)) {
          return false;
        }
      }
      if (moved != 2) {
        return false;
      }
    }
    return true;
  }

  std::vector<PermutationRep> finite_quotients(GroupPresentation const& p,
                                               std::size_t degree_bound,
                                               QuotientSearchStats* stats,
                                               std::size_t search_cap) {
    std::vector<PermutationRep> out;
    if (p.generators == 0) {
      out.push_back(PermutationRep{1, {}});
      return out;
    }
    for (std::size_t d = 1; d <= degree_bound; ++d) {
      std::vector<Permutation> firsts;
      std::vector<std::size_t> parts;
      cycle_types(d, d, parts, firsts);
      double factorial = 1;
      for (std::size_t i = 2; i <= d; ++i) {
        factorial *= static_cast<double>(i);
      }
      double space = static_cast<double>(firsts.size());
      for (std::size_t g = 1; g < p.generators; ++g) {
        space *= factorial;
      }
      if (space > static_cast<double>(search_cap)) {
        if (stats) {
          stats->skipped_degrees.push_back(d);
        }
        continue;
      }
      Search s{p, d, std::vector<std::vector<std::size_t>>(p.generators), std::vector<Permutation>(p.generators),
               std::vector<Permutation>(p.generators), {}, 0};
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        std::size_t bound = p.relators[r].generator_bound();
        if (bound > 0) {
          s.relators_closing_at[bound - 1].push_back(r);
        }
      }
      s.assign(0, firsts);
      if (stats) {
        stats->candidates += s.candidates;
      }
      for (auto const& images : s.found) {
        PermutationRep rep{d, images};
        if (rep.satisfies(p)) {
          out.push_back(std::move(rep));
        }
      }
    }
    return out;
  }

}  // namespace kch
