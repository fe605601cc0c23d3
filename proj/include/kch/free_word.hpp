#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kch {

  // A letter is a generator or its inverse, encoded as 2*generator + inverse.
  // With this encoding the natural integer order is g0 < g0^-1 < g1 < ...
  using Letter = std::uint32_t;

  constexpr Letter make_letter(std::size_t generator, bool inverse = false) {
    return static_cast<Letter>(2 * generator + (inverse ? 1 : 0));
  }
  constexpr std::size_t generator_of(Letter x) { return x >> 1; }
  constexpr bool is_inverse(Letter x) { return (x & 1U) != 0; }
  constexpr Letter inverse_letter(Letter x) { return x ^ 1U; }
  constexpr int exponent_of(Letter x) { return is_inverse(x) ? -1 : 1; }

  // Element of a free group: a freely reduced sequence of letters.
  class FreeWord {
   public:
    FreeWord() = default;
    explicit FreeWord(std::span<Letter const> letters);
    FreeWord(std::initializer_list<Letter> letters);

    // Generator i to the power e (for |e| >= 0).
    static FreeWord power(std::size_t generator, long exponent);
    // Signed 1-based indices: +k is generator k-1, -k its inverse.
    static FreeWord from_signed(std::span<long const> indices);
    std::vector<long> to_signed() const;

    std::vector<Letter> const& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    bool is_identity() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    FreeWord inverse() const;
    FreeWord pow(long n) const;
    // Sum of exponents of every letter, optionally weighted per generator.
    long exponent_sum() const;
    long exponent_sum(std::span<int const> weights) const;
    // Largest generator index used plus one.
    std::size_t generator_bound() const;

    FreeWord& operator*=(FreeWord const& other);
    friend FreeWord operator*(FreeWord lhs, FreeWord const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    // Append a single letter, cancelling against the last letter if needed.
    void push_back(Letter x);

    // Cyclic reduction (removes matching first/last inverse pairs).
    FreeWord cyclically_reduced() const;

    // Apply a substitution g_i -> images[i] to every letter.
    FreeWord substitute(std::span<FreeWord const> images) const;

    std::string to_string() const;

    friend bool operator==(FreeWord const&, FreeWord const&) = default;
    friend auto operator<=>(FreeWord const& a, FreeWord const& b) {
      // shortlex
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return a.letters_ <=> b.letters_;
    }

   private:
    std::vector<Letter> letters_;
  };

  // Free reduction of an arbitrary letter sequence.
  std::vector<Letter> free_reduce(std::span<Letter const> letters);

  struct FreeWordHash {
    std::size_t operator()(FreeWord const& w) const noexcept;
  };

}  // namespace kch

template <>
struct std::hash<kch::FreeWord> : kch::FreeWordHash {};
