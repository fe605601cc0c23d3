#include "kch/fibration.hpp"

#include <algorithm>
#include <utility>

namespace kch {

  namespace {

    struct Sub {
      long k;
      int e;
    };

    void cyclic_reduce(std::vector<Sub>& s) {
      std::vector<Sub> out;
      for (auto x : s) {
        if (!out.empty() && out.back().k == x.k && out.back().e == -x.e) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
      std::size_t lo = 0, hi = out.size();
      while (hi - lo >= 2 && out[lo].k == out[hi - 1].k && out[lo].e == -out[hi - 1].e) {
        ++lo;
        --hi;
      }
      s.assign(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
    }

    // Rotate so that position p comes first, drop it, and return y_k solved
    // from the remainder.
    std::vector<Sub> solve_at(std::vector<Sub> const& s, std::size_t p, int& e) {
      e = s[p].e;
      std::vector<Sub> rest;
      for (std::size_t i = 1; i < s.size(); ++i) {
        rest.push_back(s[(p + i) % s.size()]);
      }
      // y^e rest = 1  =>  y = rest^-e
      if (e > 0) {
        std::reverse(rest.begin(), rest.end());
        for (auto& x : rest) {
          x.e = -x.e;
        }
      }
      return rest;
    }

  }  // namespace

  FibredStructure::FibredStructure(std::size_t t_gen, bool right) : t_gen_(t_gen), right_(right) {}

  FreeWord FibredStructure::to_internal(FreeWord const& w) const {
    FreeWord t = FreeWord::power(0, 1);
    FreeWord y = t.pow(-kmin_) * FreeWord::power(1, 1) * t.pow(kmin_);
    FreeWord s = right_ ? y * t : t * y;
    std::vector<FreeWord> images(2);
    images[t_gen_] = t;
    images[1 - t_gen_] = s;
    return w.substitute(images);
  }

  FreeWord FibredStructure::to_external(FreeWord const& w) const {
    FreeWord t = FreeWord::power(t_gen_, 1);
    FreeWord s = FreeWord::power(1 - t_gen_, 1);
    FreeWord y = right_ ? s * t.inverse() : t.inverse() * s;
    std::vector<FreeWord> images(rank() + 1);
    images[0] = t;
    for (std::size_t j = 0; j < rank(); ++j) {
      long c = kmin_ + static_cast<long>(j);
      images[j + 1] = t.pow(c) * y * t.pow(-c);
    }
    return w.substitute(images);
  }

  FreeWord FibredStructure::normalize(FreeWord const& w) const {
    return to_external(system_.reduce(to_internal(w)));
  }

  std::optional<FibredStructure> FibredStructure::detect(FreeWord const& relator,
                                                         CompletionBudget const& budget) {
    if (relator.generator_bound() > 2) {
      return std::nullopt;
    }
    for (std::size_t t_gen : {0UL, 1UL}) {
      for (bool right : {true, false}) {
        // express the relator via y_k
        std::vector<Sub> seq;
        long k = 0;
        auto emit_y = [&](int e) { seq.push_back({k, e}); };
        for (Letter x : relator.letters()) {
          int e = exponent_of(x);
          if (generator_of(x) == t_gen) {
            k += e;
            continue;
          }
          // s = y t (right) or t y; s^-1 = t^-1 y^-1 or y^-1 t^-1
          if (right == (e > 0)) {
            emit_y(e);
            k += e;
          } else {
            k += e;
            emit_y(e);
          }
        }
        if (k != 0) {
          return std::nullopt;  // relator not in the kernel: not a knot group
        }
        cyclic_reduce(seq);
        if (seq.empty()) {
          continue;
        }
        auto [lo, hi] = std::minmax_element(seq.begin(), seq.end(),
                                            [](Sub a, Sub b) { return a.k < b.k; });
        long kmin = lo->k, kmax = hi->k;
        auto count = [&](long v) {
          return std::count_if(seq.begin(), seq.end(), [v](Sub s) { return s.k == v; });
        };
        if (kmin == kmax || count(kmin) != 1 || count(kmax) != 1) {
          continue;
        }
        std::size_t const n = static_cast<std::size_t>(kmax - kmin);
        auto zword = [&](std::vector<Sub> const& s, long shift) {
          FreeWord w;
          for (auto x : s) {
            w.push_back(make_letter(static_cast<std::size_t>(x.k + shift - kmin) + 1, x.e < 0));
          }
          return w;
        };

        FibredStructure f(t_gen, right);
        f.kmin_ = kmin;
        f.phi_.resize(n);
        f.psi_.resize(n);
        int e = 0;
        std::size_t pmax = static_cast<std::size_t>(hi - seq.begin());
        std::size_t pmin = static_cast<std::size_t>(lo - seq.begin());
        for (std::size_t j = 0; j + 1 < n; ++j) {
          f.phi_[j] = FreeWord::power(j + 2, 1);
          f.psi_[j + 1] = FreeWord::power(j + 1, 1);
        }
        f.phi_[n - 1] = zword(solve_at(seq, pmax, e), 0);
        f.psi_[0] = zword(solve_at(seq, pmin, e), -1);

        // phi and psi must be inverse automorphisms of F_N
        std::vector<FreeWord> sub_phi(n + 1), sub_psi(n + 1);
        sub_phi[0] = sub_psi[0] = FreeWord::power(0, 1);
        for (std::size_t j = 0; j < n; ++j) {
          sub_phi[j + 1] = f.phi_[j];
          sub_psi[j + 1] = f.psi_[j];
        }
        bool inverse_pair = true;
        for (std::size_t j = 0; j < n && inverse_pair; ++j) {
          FreeWord z = FreeWord::power(j + 1, 1);
          inverse_pair = f.psi_[j].substitute(sub_phi) == z && f.phi_[j].substitute(sub_psi) == z;
        }
        if (!inverse_pair) {
          continue;
        }

        std::vector<unsigned> levels(n + 1, 0);
        levels[0] = 1;
        RewritingSystem sys(n + 1, WordOrder::wreath(levels));
        Letter const tl = make_letter(0), tinv = make_letter(0, true);
        for (std::size_t j = 0; j < n; ++j) {
          for (bool inv : {false, true}) {
            Letter x = make_letter(j + 1, inv);
            FreeWord px = inv ? f.psi_[j].inverse() : f.psi_[j];
            FreeWord fx = inv ? f.phi_[j].inverse() : f.phi_[j];
            std::vector<Letter> lhs1{x, tl}, rhs1{tl};
            rhs1.insert(rhs1.end(), px.letters().begin(), px.letters().end());
            std::vector<Letter> lhs2{x, tinv}, rhs2{tinv};
            rhs2.insert(rhs2.end(), fx.letters().begin(), fx.letters().end());
            sys.add_equation(lhs1, rhs1);
            sys.add_equation(lhs2, rhs2);
          }
        }
        if (!knuth_bendix(sys, budget)) {
          continue;
        }
        f.system_ = std::move(sys);
        if (!f.system_.reduce(f.to_internal(relator)).empty()) {
          continue;
        }
        return f;
      }
    }
    return std::nullopt;
  }

}  // namespace kch
