#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kch/integer.hpp"

namespace kch {

  // Integer Laurent polynomial sum c_i t^(lo + i), stored densely with no
  // zero coefficient at either end. The zero polynomial has no coefficients.
  class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(Integer c);  // NOLINT: constants convert implicitly
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT
    LaurentPoly(long lo, std::vector<Integer> coeffs);

    static LaurentPoly monomial(Integer c, long exponent);
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    // +-t^k
    bool is_unit() const noexcept { return c_.size() == 1 && abs(c_[0]) == 1; }
    long min_exponent() const noexcept { return lo_; }
    long max_exponent() const noexcept { return lo_ + static_cast<long>(c_.size()) - 1; }
    std::vector<Integer> const& coeffs() const noexcept { return c_; }
    Integer coefficient(long e) const;

    Integer evaluate(Integer const& x) const;  // x must be +-1 for negative exponents
    Integer content() const;
    LaurentPoly primitive() const;

    LaurentPoly& operator+=(LaurentPoly const& o);
    LaurentPoly& operator-=(LaurentPoly const& o);
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    LaurentPoly operator-() const;
    LaurentPoly shifted(long k) const;  // times t^k

    // Exact division; throws InvariantError if b does not divide a.
    friend LaurentPoly exact_div(LaurentPoly const& a, LaurentPoly const& b);

    // Lowest exponent 0 and positive leading coefficient. For an Alexander
    // polynomial the value at 1 is then +-1 (t^2 - 3t + 1 for the figure-eight).
    LaurentPoly normalized() const;
    bool is_palindromic() const;

    std::string to_string(char var = 't') const;

    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

   private:
    void trim();

    long lo_ = 0;
    std::vector<Integer> c_;
  };

  // gcd up to units, normalized.
  LaurentPoly gcd(LaurentPoly const& a, LaurentPoly const& b);

  using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

  // Fraction-free (Bareiss) determinant of a square matrix.
  LaurentPoly determinant(LaurentMatrix m);

  // gcd of all k x k minors, normalized; 1 for k = 0.
  LaurentPoly minor_gcd(LaurentMatrix const& m, std::size_t k);

}  // namespace kch
