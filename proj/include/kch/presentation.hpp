#pragma once

#include <cstddef>
#include <vector>

#include "kch/free_word.hpp"
#include "kch/integer.hpp"
#include "kch/knot_diagram.hpp"

namespace kch {

  struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<FreeWord> relators;  // freely and cyclically reduced

    friend bool operator==(GroupPresentation const&, GroupPresentation const&) = default;
  };

  struct PeripheralSystem {
    FreeWord meridian;
    FreeWord longitude;

    friend bool operator==(PeripheralSystem const&, PeripheralSystem const&) = default;
  };

  // A knot group together with the data the group-ring layer needs: the
  // abelianization degree of every generator and, for each generator g_i, a
  // word c_i with g_i = c_i m c_i^-1.
  struct KnotGroup {
    GroupPresentation presentation;
    PeripheralSystem peripheral;
    std::vector<int> degrees;
    std::vector<FreeWord> conjugators;
  };

  // One generator per arc, one relator per crossing, meridian = base arc
  // generator, longitude Seifert-framed.
  KnotGroup wirtinger(KnotDiagram const& d);

  // Generator elimination. The result keeps generator 0 of the input as its
  // generator 0; `images[i]` expresses input generator i in the reduced
  // generators and `kept[j]` is the input index of reduced generator j.
  struct TietzeReduction {
    GroupPresentation reduced;
    std::vector<FreeWord> images;
    std::vector<std::size_t> kept;

    // Word in the reduced generators -> word in the input generators.
    FreeWord lift(FreeWord const& w) const;
    FreeWord push(FreeWord const& w) const { return w.substitute(images); }
  };

  // `drop_redundant` removes the last relator first (valid for Wirtinger
  // presentations, where any one relator follows from the others).
  TietzeReduction tietze(GroupPresentation const& p, bool drop_redundant = false);

  // Rewrite a knot group into its Tietze-reduced generators.
  KnotGroup reduce_knot_group(KnotGroup const& g, TietzeReduction const& t);

  struct AbelianInvariants {
    std::vector<Integer> factors;  // nonzero Smith diagonal entries, ascending divisibility
    std::size_t free_rank = 0;
  };

  AbelianInvariants abelian_invariants(GroupPresentation const& p);

  // The homomorphism to Z sending `meridian` to 1, as per-generator degrees.
  // Throws InvariantError unless the abelianization is infinite cyclic and
  // generated by the meridian class.
  std::vector<int> abelianization_degrees(GroupPresentation const& p, FreeWord const& meridian);

  long abelianize(FreeWord const& w, std::vector<int> const& degrees);
  long abelianize(FreeWord const& w, GroupPresentation const& p);

  // Validates a presentation read from outside: indices in range, relators
  // reduced. Throws ValidationError.
  void validate(GroupPresentation const& p);

}  // namespace kch
