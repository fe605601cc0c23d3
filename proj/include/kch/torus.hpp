#pragma once

// Normal forms in G = <x, y | x^p = y^q>. The element c = x^p is central and
// G / <c> = Z/p * Z/q, so every element is uniquely c^N times an alternating
// product of syllables x^i (0 < i < p) and y^j (0 < j < q).

#include <cstddef>
#include <optional>
#include <vector>

#include "kch/free_word.hpp"

namespace kch {

  class TorusStructure {
   public:
    TorusStructure(long p, long q);

    long p() const noexcept { return p_; }
    long q() const noexcept { return q_; }

    // Words over {a, b}: the two generators of the detected presentation.
    FreeWord normalize(FreeWord const& w) const;

    // Normal form on the x, y alphabet (x = generator 0, y = generator 1).
    FreeWord normal_form_xy(FreeWord const& w) const;

    // Recognizes <a,b | r> as a torus knot group: either r is literally a
    // cyclic conjugate of (a^p b^-q)^+-1, or, with x = (ab)^k a and y = ab,
    // r becomes such a conjugate for x^2 = y^(2k+1).
    static std::optional<TorusStructure> detect(FreeWord const& relator);

   private:
    long p_, q_;
    // {a,b} <-> {x,y}
    std::vector<FreeWord> to_xy_, from_xy_;
  };

}  // namespace kch
