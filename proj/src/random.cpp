#include "kch/random.hpp"

#include <algorithm>

namespace kch {

  long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

  namespace {

    // Extends from the given running height and updates it.
    FreeWord random_word_from(Rng& rng, std::size_t generators, std::size_t max_length,
                              long height_bound, long& height) {
    FreeWord w;
    if (generators == 0) {
      return w;
    }
    auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_length)));
    long const top = static_cast<long>(2 * generators) - 1;
    int rejected = 0;
    while (w.size() < len && rejected < 64) {
      auto x = static_cast<Letter>(uniform(rng, 0, top));
      long next = height + exponent_of(x);
      if ((!w.empty() && w.letters().back() == inverse_letter(x))
          || (height_bound > 0 && (next > height_bound || next < -height_bound))) {
        ++rejected;
        continue;
      }
      rejected = 0;
      height = next;
      w.push_back(x);
    }
    return w;
  }

  }  // namespace

  FreeWord random_word(Rng& rng, std::size_t generators, std::size_t max_length,
                       long height_bound) {
    long height = 0;
    return random_word_from(rng, generators, max_length, height_bound, height);
  }

  PeripheralClass random_peripheral(Rng& rng, long bound) {
    return {uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
  }

  BracketWord random_bracket_word(Rng& rng, std::size_t generators, Classification c,
                                  BracketShape const& shape) {
    bool const first_curly = c == Classification::KK || c == Classification::Kp;
    bool const last_curly = c == Classification::KK || c == Classification::pK;
    // odd length when the ends agree, even otherwise
    std::size_t const parity = first_curly == last_curly ? 1 : 0;
    std::size_t const max_letters = std::max<std::size_t>(shape.max_letters, 2);
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_letters)));
    if (n % 2 != parity) {
      n = n == 1 ? 2 : n - 1;
    }
    BracketWord w;
    bool curly = first_curly;
    // running t-height of the whole word, counting the meridian part of curlies
    long height = 0;
    long const hb = shape.height_bound;
    for (std::size_t i = 0; i < n; ++i, curly = !curly) {
      if (curly) {
        PeripheralClass a;
        if (!coin(rng, 0.35)) {
          a = random_peripheral(rng, shape.peripheral_bound);
          if (hb > 0) {
            a.m = std::clamp(height + a.m, -hb, hb) - height;
          }
        }
        height += a.m;
        w.letters.push_back(SLetter::brace(a));
      } else {
        w.letters.push_back(SLetter::square(
            coin(rng, 0.25) ? FreeWord{} : random_word_from(rng, generators, shape.max_word, hb, height)));
      }
    }
    return w;
  }

  SElement random_selement(Rng& rng, Context const& ctx, Classification c, std::size_t max_terms,
                           BracketShape const& shape) {
    SElement e(ctx);
    auto n = uniform(rng, 1, static_cast<long>(std::max<std::size_t>(max_terms, 1)));
    for (long i = 0; i < n; ++i) {
      long coeff = uniform(rng, 1, 2) * (coin(rng) ? 1 : -1);
      e.add_term(random_bracket_word(rng, ctx->generators(), c, shape), coeff);
    }
    return e;
  }

  GroupRingElement random_element(Rng& rng, Context const& ctx, std::size_t max_terms,
                                  std::size_t max_length, long coeff_bound,
                                  long height_bound) {
    GroupRingElement e(ctx);
    auto n = uniform(rng, 1, static_cast<long>(std::max<std::size_t>(max_terms, 1)));
    for (long i = 0; i < n; ++i) {
      long coeff = uniform(rng, 1, coeff_bound) * (coin(rng) ? 1 : -1);
      e.add_term(random_word(rng, ctx->generators(), max_length, height_bound), coeff);
    }
    return e;
  }

}  // namespace kch
