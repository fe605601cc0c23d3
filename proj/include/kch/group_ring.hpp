#pragma once

// The integral group ring R = Z[pi] of a knot group.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/integer.hpp"
#include "kch/presentation.hpp"
#include "kch/word_backend.hpp"

namespace kch {

  // Shared, immutable arithmetic context: the group, its distinguished
  // meridian and longitude, and the word backend that keys terms.
  class RingContext {
   public:
    RingContext(KnotGroup group, std::shared_ptr<WordBackend const> backend);

    static std::shared_ptr<RingContext const> make(KnotGroup group,
                                                   BackendOptions const& options = {});

    KnotGroup const& group() const noexcept { return group_; }
    WordBackend const& backend() const noexcept { return *backend_; }
    std::shared_ptr<WordBackend const> const& backend_ptr() const noexcept { return backend_; }
    FreeWord const& meridian() const noexcept { return group_.peripheral.meridian; }
    FreeWord const& longitude() const noexcept { return group_.peripheral.longitude; }
    std::size_t generators() const noexcept { return group_.presentation.generators; }

    // Canonical key when the backend decides, a sound reduction otherwise.
    FreeWord key(FreeWord const& w) const;
    bool exact() const noexcept { return backend_->decides(); }
    long degree(FreeWord const& w) const { return abelianize(w, group_.degrees); }

   private:
    KnotGroup group_;
    std::shared_ptr<WordBackend const> backend_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<FreeWord, FreeWord> cache_;
  };

  using Context = std::shared_ptr<RingContext const>;

  class GroupRingElement {
   public:
    using Terms = std::map<FreeWord, Integer>;

    explicit GroupRingElement(Context ctx);  // zero

    static GroupRingElement word(Context ctx, FreeWord const& w, Integer coeff = 1);
    static GroupRingElement integer(Context ctx, Integer n);
    static GroupRingElement one(Context ctx) { return integer(std::move(ctx), 1); }
    // 1 - m
    static GroupRingElement one_minus_meridian(Context ctx);

    Context const& context() const noexcept { return ctx_; }
    Terms const& terms() const noexcept { return terms_; }
    std::size_t support_size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    // False when two terms could not be proved distinct or equal.
    bool exact() const noexcept { return exact_; }

    // Coefficient of the class of w (0 if absent). Uses key lookup only.
    Integer coefficient(FreeWord const& w) const;

    void add_term(FreeWord const& w, Integer const& c);

    GroupRingElement& operator+=(GroupRingElement const& o);
    GroupRingElement& operator-=(GroupRingElement const& o);
    GroupRingElement& operator*=(Integer const& n);
    friend GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) {
      a += b;
      return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, GroupRingElement const& b) {
      a -= b;
      return a;
    }
    friend GroupRingElement operator*(GroupRingElement const& a, GroupRingElement const& b);
    friend GroupRingElement operator*(Integer const& n, GroupRingElement a) {
      a *= n;
      return a;
    }
    GroupRingElement operator-() const;

    // Left and right multiplication by a group element.
    GroupRingElement left_mul(FreeWord const& g) const;
    GroupRingElement right_mul(FreeWord const& g) const;

    Integer augmentation() const;

    // Yes if provably zero, No if provably nonzero, otherwise Unknown.
    Answer is_zero() const;
    Answer equals(GroupRingElement const& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;

   private:
    void require_same(GroupRingElement const& o) const;

    Context ctx_;
    Terms terms_;
    bool exact_ = true;
  };

  // a in R(1 - m)? Terms are grouped into cosets x<m>; y^-1 x in <m> is
  // checked as y^-1 x = m^k with k its abelianization degree.
  Answer in_left_ideal(GroupRingElement const& a, FreeWord const& m);

  // Two-sided ideal R(1-m)R, which equals the augmentation kernel.
  bool in_augmentation_ideal(GroupRingElement const& a);

  // a in Z[l, m] + R(1-m)? Subtracts the terms recognised as l^i m^j
  // (|i| <= longitude_bound) and tests the rest; answers Yes or Unknown.
  Answer in_peripheral_plus_left_ideal(GroupRingElement const& a, long longitude_bound = 3);

  // coeff * gamma (1 - m) delta
  struct WitnessTerm {
    Integer coeff;
    FreeWord gamma, delta;
  };

  // Writes a with augmentation 0 as a sum of witness terms, using the stored
  // conjugators g_i = c_i m c_i^-1. Throws WitnessUnavailable otherwise.
  std::vector<WitnessTerm> ideal_witness(GroupRingElement const& a);
  GroupRingElement expand_witness(Context const& ctx, std::vector<WitnessTerm> const& w);

}  // namespace kch
