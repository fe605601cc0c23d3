#include "kch/free_word.hpp"

#include <cstdlib>
#include <sstream>

#include "kch/error.hpp"

namespace kch {

  std::vector<Letter> free_reduce(std::span<Letter const> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter x : letters) {
      if (!out.empty() && out.back() == inverse_letter(x)) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  FreeWord::FreeWord(std::span<Letter const> letters)
      : letters_(free_reduce(letters)) {}

  FreeWord::FreeWord(std::initializer_list<Letter> letters)
      : FreeWord(std::span<Letter const>(letters.begin(), letters.size())) {}

  FreeWord FreeWord::power(std::size_t generator, long exponent) {
    FreeWord w;
    Letter x = make_letter(generator, exponent < 0);
    w.letters_.assign(static_cast<std::size_t>(std::labs(exponent)), x);
    return w;
  }

  FreeWord FreeWord::from_signed(std::span<long const> indices) {
    std::vector<Letter> letters;
    letters.reserve(indices.size());
    for (long k : indices) {
      if (k == 0) {
        throw SyntaxError("signed generator index 0 is not allowed");
      }
      letters.push_back(make_letter(static_cast<std::size_t>(std::labs(k)) - 1, k < 0));
    }
    return FreeWord(letters);
  }

  std::vector<long> FreeWord::to_signed() const {
    std::vector<long> out;
    out.reserve(letters_.size());
    for (Letter x : letters_) {
      long k = static_cast<long>(generator_of(x)) + 1;
      out.push_back(is_inverse(x) ? -k : k);
    }
    return out;
  }

  FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(inverse_letter(*it));
    }
    return w;
  }

  FreeWord FreeWord::pow(long n) const {
    FreeWord base = n < 0 ? inverse() : *this;
    FreeWord out;
    for (long i = 0; i < std::labs(n); ++i) {
      out *= base;
    }
    return out;
  }

  long FreeWord::exponent_sum() const {
    long s = 0;
    for (Letter x : letters_) {
      s += exponent_of(x);
    }
    return s;
  }

  long FreeWord::exponent_sum(std::span<int const> weights) const {
    long s = 0;
    for (Letter x : letters_) {
      std::size_t g = generator_of(x);
      long w = g < weights.size() ? weights[g] : 0;
      s += exponent_of(x) * w;
    }
    return s;
  }

  std::size_t FreeWord::generator_bound() const {
    std::size_t b = 0;
    for (Letter x : letters_) {
      b = std::max(b, generator_of(x) + 1);
    }
    return b;
  }

  void FreeWord::push_back(Letter x) {
    if (!letters_.empty() && letters_.back() == inverse_letter(x)) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }

  FreeWord& FreeWord::operator*=(FreeWord const& other) {
    std::size_t i = 0;
    while (i < other.letters_.size() && !letters_.empty()
           && letters_.back() == inverse_letter(other.letters_[i])) {
      letters_.pop_back();
      ++i;
    }
    letters_.insert(letters_.end(), other.letters_.begin() + i, other.letters_.end());
    return *this;
  }

  FreeWord FreeWord::cyclically_reduced() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == inverse_letter(letters_[hi - 1])) {
      ++lo;
      --hi;
    }
    FreeWord w;
    w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
    return w;
  }

  FreeWord FreeWord::substitute(std::span<FreeWord const> images) const {
    FreeWord out;
    for (Letter x : letters_) {
      std::size_t g = generator_of(x);
      if (g >= images.size()) {
        throw ValidationError("substitution missing image for generator "
                              + std::to_string(g));
      }
      out *= is_inverse(x) ? images[g].inverse() : images[g];
    }
    return out;
  }

  std::string FreeWord::to_string() const {
    if (letters_.empty()) {
      return "1";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i > 0) {
        os << '.';
      }
      os << 'x' << generator_of(letters_[i]);
      if (is_inverse(letters_[i])) {
        os << "^-1";
      }
    }
    return os.str();
  }

  std::size_t FreeWordHash::operator()(FreeWord const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter x : w.letters()) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace kch
