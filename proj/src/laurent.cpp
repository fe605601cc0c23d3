#include "kch/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "kch/error.hpp"

namespace kch {

  namespace {

    using Dense = std::vector<Integer>;  // ordinary polynomial, index = exponent

    void trim_top(Dense& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    Integer dense_content(Dense const& p) {
      Integer g = 0;
      for (auto const& c : p) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) {
          break;
        }
      }
      return g;
    }

    void make_primitive(Dense& p) {
      Integer g = dense_content(p);
      if (g > 1) {
        for (auto& c : p) {
          c /= g;
        }
      }
    }

    // Pseudo-remainder of a by b (deg a >= deg b >= 0).
    Dense pseudo_rem(Dense a, Dense const& b) {
      std::size_t const db = b.size() - 1;
      Integer const lb = b.back();
      while (!a.empty() && a.size() - 1 >= db) {
        Integer la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) {
          c *= lb;
        }
        for (std::size_t i = 0; i <= db; ++i) {
          a[i + shift] -= la * b[i];
        }
        trim_top(a);
      }
      return a;
    }

    Dense dense_gcd(Dense a, Dense b) {
      trim_top(a);
      trim_top(b);
      if (a.empty()) {
        return b;
      }
      if (b.empty()) {
        return a;
      }
      Integer g = boost::multiprecision::gcd(dense_content(a), dense_content(b));
      make_primitive(a);
      make_primitive(b);
      if (a.size() < b.size()) {
        std::swap(a, b);
      }
      while (!b.empty()) {
        Dense r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
      }
      for (auto& c : a) {
        c *= g;
      }
      return a;
    }

  }  // namespace

  LaurentPoly::LaurentPoly(Integer c) {
    if (c != 0) {
      c_.push_back(std::move(c));
    }
  }

  LaurentPoly::LaurentPoly(long lo, std::vector<Integer> coeffs) : lo_(lo), c_(std::move(coeffs)) {
    trim();
  }

  LaurentPoly LaurentPoly::monomial(Integer c, long exponent) { return {exponent, {std::move(c)}}; }

  void LaurentPoly::trim() {
    trim_top(c_);
    auto first = std::find_if(c_.begin(), c_.end(), [](Integer const& c) { return c != 0; });
    lo_ += static_cast<long>(first - c_.begin());
    c_.erase(c_.begin(), first);
    if (c_.empty()) {
      lo_ = 0;
    }
  }

  Integer LaurentPoly::coefficient(long e) const {
    if (c_.empty() || e < lo_ || e > max_exponent()) {
      return 0;
    }
    return c_[static_cast<std::size_t>(e - lo_)];
  }

  Integer LaurentPoly::evaluate(Integer const& x) const {
    if (lo_ < 0 && abs(x) != 1) {
      throw InvariantError("evaluation of a Laurent polynomial needs a unit");
    }
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + *it;
    }
    // x^lo with x = +-1 or lo >= 0
    Integer p = 1;
    long e = lo_ < 0 ? -lo_ : lo_;
    for (long i = 0; i < e; ++i) {
      p *= x;
    }
    return acc * p;  // x^-k = x^k for units
  }

  Integer LaurentPoly::content() const { return dense_content(c_); }

  LaurentPoly LaurentPoly::primitive() const {
    LaurentPoly out = *this;
    make_primitive(out.c_);
    return out;
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
    if (o.is_zero()) {
      return *this;
    }
    if (is_zero()) {
      return *this = o;
    }
    long lo = std::min(lo_, o.lo_);
    long hi = std::max(max_exponent(), o.max_exponent());
    Dense r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r[static_cast<std::size_t>(lo_ - lo) + i] += c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      r[static_cast<std::size_t>(o.lo_ - lo) + i] += o.c_[i];
    }
    lo_ = lo;
    c_ = std::move(r);
    trim();
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) { return *this += -o; }

  LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    Dense r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return {a.lo_ + b.lo_, std::move(r)};
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.c_) {
      c = -c;
    }
    return out;
  }

  LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) {
      out.lo_ += k;
    }
    return out;
  }

  LaurentPoly exact_div(LaurentPoly const& a, LaurentPoly const& b) {
    if (b.is_zero()) {
      throw InvariantError("division by the zero polynomial");
    }
    if (a.is_zero()) {
      return {};
    }
    Dense rem = a.c_;
    std::size_t const db = b.c_.size() - 1;
    if (rem.size() < b.c_.size()) {
      throw InvariantError("inexact polynomial division");
    }
    Dense q(rem.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
      Integer const& top = rem[k + db];
      if (top == 0) {
        continue;
      }
      if (top % b.c_.back() != 0) {
        throw InvariantError("inexact polynomial division");
      }
      q[k] = top / b.c_.back();
      for (std::size_t i = 0; i <= db; ++i) {
        rem[k + i] -= q[k] * b.c_[i];
      }
    }
    if (std::any_of(rem.begin(), rem.end(), [](Integer const& c) { return c != 0; })) {
      throw InvariantError("inexact polynomial division");
    }
    return {a.lo_ - b.lo_, std::move(q)};
  }

  LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) {
      return {};
    }
    LaurentPoly out = shifted(-lo_);
    return out.c_.back() < 0 ? -out : out;
  }

  bool LaurentPoly::is_palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j--; ++i) {
      if (c_[i] != c_[j]) {
        return false;
      }
    }
    return true;
  }

  std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      Integer const& c = c_[k];
      if (c == 0) {
        continue;
      }
      long e = lo_ + static_cast<long>(k);
      if (!first) {
        os << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        os << "-";
      }
      Integer a = abs(c);
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) {
          os << a << "*";
        }
        os << var;
        if (e != 1) {
          os << "^" << e;
        }
      }
      first = false;
    }
    return os.str();
  }

  LaurentPoly gcd(LaurentPoly const& a, LaurentPoly const& b) {
    Dense r = dense_gcd(a.shifted(-a.min_exponent()).coeffs(),
                        b.shifted(-b.min_exponent()).coeffs());
    return LaurentPoly(0, std::move(r)).normalized();
  }

  LaurentPoly determinant(LaurentMatrix m) {
    std::size_t const n = m.size();
    for (auto const& row : m) {
      if (row.size() != n) {
        throw InvariantError("determinant of a non-square matrix");
      }
    }
    if (n == 0) {
      return 1;
    }
    // Clear negative exponents row by row; the shifts are units.
    long shift = 0;
    for (auto& row : m) {
      long lo = 0;
      for (auto const& e : row) {
        if (!e.is_zero()) {
          lo = std::min(lo, e.min_exponent());
        }
      }
      for (auto& e : row) {
        e = e.shifted(-lo);
      }
      shift += lo;
    }
    bool negate = false;
    LaurentPoly prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k].is_zero()) {
        std::size_t p = k + 1;
        while (p < n && m[p][k].is_zero()) {
          ++p;
        }
        if (p == n) {
          return {};
        }
        std::swap(m[k], m[p]);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        }
      }
      prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1].shifted(shift);
    return negate ? -d : d;
  }

  namespace {

    bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
      std::size_t k = c.size();
      for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
          ++c[i];
          for (std::size_t j = i + 1; j < k; ++j) {
            c[j] = c[j - 1] + 1;
          }
          return true;
        }
      }
      return false;
    }

  }  // namespace

  LaurentPoly minor_gcd(LaurentMatrix const& m, std::size_t k) {
    if (k == 0) {
      return 1;
    }
    std::size_t const rows = m.size();
    std::size_t const cols = rows == 0 ? 0 : m[0].size();
    if (k > rows || k > cols) {
      return {};
    }
    LaurentPoly g;
    std::vector<std::size_t> rs(k);
    for (std::size_t i = 0; i < k; ++i) {
      rs[i] = i;
    }
    do {
      std::vector<std::size_t> cs(k);
      for (std::size_t i = 0; i < k; ++i) {
        cs[i] = i;
      }
      do {
        LaurentMatrix sub(k, std::vector<LaurentPoly>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            sub[i][j] = m[rs[i]][cs[j]];
          }
        }
        LaurentPoly d = determinant(std::move(sub));
        if (!d.is_zero()) {
          g = g.is_zero() ? d.normalized() : gcd(g, d);
          if (g.is_unit()) {
            return g.normalized();
          }
        }
      } while (next_combination(cs, cols));
    } while (next_combination(rs, rows));
    return g.normalized();
  }

}  // namespace kch
