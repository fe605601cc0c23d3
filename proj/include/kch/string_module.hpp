#pragma once

// The module S of alternating bracket words [x]{alpha}[y]... with x in the
// knot group and alpha in the peripheral subgroup, its string relations,
// and the evaluation phi into the group ring.
//
// phi substitutes [x] -> x, a leading {alpha} -> alpha and every other
// {alpha} -> alpha (1 - m). With this placement {1}[x]{1} -> x(1 - m) and
// [x1]{alpha}[x2] -> x1 alpha (1 - m) x2.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/group_ring.hpp"
#include "kch/integer.hpp"

namespace kch {

  // l^l_exp m^m_exp in the peripheral subgroup, which is free abelian.
  struct PeripheralClass {
    long l = 0;
    long m = 0;

    PeripheralClass operator+(PeripheralClass o) const { return {l + o.l, m + o.m}; }
    PeripheralClass operator-(PeripheralClass o) const { return {l - o.l, m - o.m}; }
    PeripheralClass operator-() const { return {-l, -m}; }
    bool is_zero() const { return l == 0 && m == 0; }
    friend auto operator<=>(PeripheralClass const&, PeripheralClass const&) = default;
  };

  FreeWord hat_embed(PeripheralClass a, PeripheralSystem const& ps);

  struct SLetter {
    bool curly = false;
    FreeWord word;          // square letters
    PeripheralClass alpha;  // curly letters

    static SLetter square(FreeWord w) { return {false, std::move(w), {}}; }
    static SLetter brace(PeripheralClass a) { return {true, {}, a}; }

    friend auto operator<=>(SLetter const&, SLetter const&) = default;
  };

  enum class Classification { KK, Kp, pK, pp };
  std::string to_string(Classification c);

  struct BracketWord {
    std::vector<SLetter> letters;

    // Throws ValidationError if empty or not alternating.
    Classification classification() const;
    std::string to_string() const;

    friend auto operator<=>(BracketWord const&, BracketWord const&) = default;
  };

  class SElement {
   public:
    using Terms = std::map<BracketWord, Integer>;

    explicit SElement(Context ctx);
    static SElement word(Context ctx, BracketWord w, Integer coeff = 1);

    Context const& context() const noexcept { return ctx_; }
    Terms const& terms() const noexcept { return terms_; }
    std::optional<Classification> classification() const noexcept { return class_; }
    bool empty() const noexcept { return terms_.empty(); }

    // Throws ClassificationError on a mixed classification.
    void add_term(BracketWord const& w, Integer const& c);
    SElement& operator+=(SElement const& o);
    SElement& operator-=(SElement const& o);
    friend SElement operator+(SElement a, SElement const& b) {
      a += b;
      return a;
    }
    friend SElement operator-(SElement a, SElement const& b) {
      a -= b;
      return a;
    }
    SElement& operator*=(Integer const& n);

    std::string to_string() const;

   private:
    Context ctx_;
    Terms terms_;
    std::optional<Classification> class_;
  };

  enum class StringRelation { Str1, Str2, Str3, Str4 };
  std::string to_string(StringRelation r);

  // Where and how a relation is applied.
  //  str1: square at `index` followed by a curly: [x a]{b} -> [x]{a b}, a = alpha.
  //  str2: square at `index` preceded by a curly: {a}[b x] -> {a b}[x], b = alpha.
  //  str3: square at `index`: [x1 x2] -> [x1 m x2] + [x1]{1}[x2], x1 = split;
  //        reversed, a curly {1} at `index` between squares is merged back.
  //  str4: curly at `index`: {a b} -> {a m b} + {a}[1]{b}, a = alpha;
  //        reversed, a square [1] at `index` between curlies is merged back.
  struct RelationSite {
    std::size_t index = 0;
    bool reverse = false;
    PeripheralClass alpha;
    FreeWord split;
  };

  // Throws PatternMismatch when the relation does not apply at the site.
  SElement apply_relation(Context const& ctx, BracketWord const& w, StringRelation r,
                          RelationSite const& site);

  // Removes every internal curly letter and absorbs end curlies into {1};
  // square words are keyed by the backend.
  SElement normalize_s(SElement const& e);

  GroupRingElement phi(SElement const& e);
  GroupRingElement phi(Context const& ctx, BracketWord const& w);

  // Bilinear concatenation merging the junction letters ([x][y] -> [xy],
  // {a}{b} -> {a b}). With curly junctions this is the right R_KK action on
  // R_pK, the left action on R_Kp and the balanced tensor R_pK x R_Kp -> R_pp.
  SElement concat(SElement const& a, SElement const& b);

  // Product R_Kp x R_pK -> R_KK by concatenation.
  SElement mu(SElement const& u, SElement const& v);

  // Z + R_pp with (n1, r1)(n2, r2) = (n1 n2, n1 r2 + n2 r1 + r1 r2).
  struct PPElement {
    Integer n;
    SElement e;
  };
  PPElement pp_mul(PPElement const& a, PPElement const& b);
  GroupRingElement phi_hat(PPElement const& a);

  // m^-deg(x) x
  FreeWord unframe(FreeWord const& x, RingContext const& ctx);

}  // namespace kch
