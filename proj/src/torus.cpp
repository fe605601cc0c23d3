#include "kch/torus.hpp"

#include <array>
#include <cstdlib>

#include "kch/error.hpp"

namespace kch {

  namespace {

    FreeWord gen(std::size_t g, long e = 1) { return FreeWord::power(g, e); }

    long floor_div(long a, long b) {
      long d = a / b;
      return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
    }

    struct Syllable {
      std::size_t g;
      long e;
    };

    // Syllables of the cyclic word w (first and last merged when equal).
    std::vector<Syllable> cyclic_syllables(FreeWord const& w) {
      std::vector<Syllable> s;
      for (Letter x : w.letters()) {
        if (!s.empty() && s.back().g == generator_of(x)) {
          s.back().e += exponent_of(x);
        } else {
          s.push_back({generator_of(x), exponent_of(x)});
        }
      }
      if (s.size() > 1 && s.front().g == s.back().g) {
        s.front().e += s.back().e;
        s.pop_back();
      }
      return s;
    }

    bool is_identity_pair(std::vector<FreeWord> const& f, std::vector<FreeWord> const& g) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (f[i].substitute(g) != gen(i) || g[i].substitute(f) != gen(i)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  TorusStructure::TorusStructure(long p, long q) : p_(p), q_(q) {
    if (p < 1 || q < 1) {
      throw ValidationError("torus exponents must be positive");
    }
    to_xy_ = {gen(0), gen(1)};
    from_xy_ = {gen(0), gen(1)};
  }

  FreeWord TorusStructure::normal_form_xy(FreeWord const& w) const {
    std::vector<Syllable> stack;
    long central = 0;
    for (Letter x : w.letters()) {
      std::size_t g = generator_of(x);
      if (!stack.empty() && stack.back().g == g) {
        stack.back().e += exponent_of(x);
      } else {
        stack.push_back({g, exponent_of(x)});
      }
      long period = g == 0 ? p_ : q_;
      long s = floor_div(stack.back().e, period);
      stack.back().e -= s * period;
      central += s;
      if (stack.back().e == 0) {
        stack.pop_back();
      }
    }
    FreeWord out = gen(0, p_ * central);
    for (auto const& s : stack) {
      out *= gen(s.g, s.e);
    }
    return out;
  }

  FreeWord TorusStructure::normalize(FreeWord const& w) const {
    return normal_form_xy(w.substitute(to_xy_)).substitute(from_xy_);
  }

  std::optional<TorusStructure> TorusStructure::detect(FreeWord const& relator) {
    if (relator.generator_bound() > 2 || relator.empty()) {
      return std::nullopt;
    }
    // signed permutations of {a, b}
    std::vector<std::vector<FreeWord>> signed_perms;
    for (std::size_t swap : {0UL, 1UL}) {
      for (long ea : {1L, -1L}) {
        for (long eb : {1L, -1L}) {
          signed_perms.push_back({gen(swap, ea), gen(1 - swap, eb)});
        }
      }
    }
    long const kmax = static_cast<long>(relator.size());
    for (auto const& sigma : signed_perms) {
      std::vector<FreeWord> sigma_inv;
      for (auto const& cand : signed_perms) {
        if (is_identity_pair(sigma, cand)) {
          sigma_inv = cand;
        }
      }
      for (long k = 0; k <= kmax; ++k) {
        // to_xy: {a,b} -> words in x,y ; from_xy: {x,y} -> words in a,b
        std::vector<FreeWord> to_xy, from_xy;
        if (k == 0) {
          to_xy = {gen(0), gen(1)};
          from_xy = {gen(0), gen(1)};
        } else {
          FreeWord ab = gen(0) * gen(1);
          from_xy = {ab.pow(k) * gen(0), ab};
          to_xy = {gen(1, -k) * gen(0), gen(0, -1) * gen(1, k + 1)};
        }
        // compose with sigma: a -> to_xy(sigma(a))
        std::vector<FreeWord> to = {sigma[0].substitute(to_xy), sigma[1].substitute(to_xy)};
        std::vector<FreeWord> from = {from_xy[0].substitute(sigma_inv),
                                      from_xy[1].substitute(sigma_inv)};
        auto syl = cyclic_syllables(relator.substitute(to).cyclically_reduced());
        if (syl.size() != 2 || syl[0].g == syl[1].g) {
          continue;
        }
        long ex = syl[0].g == 0 ? syl[0].e : syl[1].e;
        long ey = syl[0].g == 0 ? syl[1].e : syl[0].e;
        // fix signs so the relation reads x^p y^-q
        std::vector<FreeWord> tau = {gen(0, ex > 0 ? 1 : -1), gen(1, ey < 0 ? 1 : -1)};
        to = {to[0].substitute(tau), to[1].substitute(tau)};
        from = {tau[0].substitute(from), tau[1].substitute(from)};
        if (!is_identity_pair(to, from)) {
          continue;
        }
        TorusStructure t(std::labs(ex), std::labs(ey));
        t.to_xy_ = std::move(to);
        t.from_xy_ = std::move(from);
        return t;
      }
    }
    return std::nullopt;
  }

}  // namespace kch
