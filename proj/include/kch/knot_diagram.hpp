#pragma once

// Oriented knot diagrams in planar-diagram (PD) form.
//
// Conventions: each crossing X[i,j,k,l] lists its four edge labels
// counterclockwise starting from the incoming under-strand, so the under
// strand runs i -> k. The over strand runs l -> j at a positive crossing and
// j -> l at a negative one; signs are derived from a single orientation pass,
// never supplied by the caller.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kch {

  struct Crossing {
    std::size_t id = 0;
    std::array<int, 4> edges{};
    int sign = 0;  // +1 or -1

    friend bool operator==(Crossing const&, Crossing const&) = default;
  };

  // Maximal over-strand run: the edges from one under-crossing to the next.
  struct Arc {
    std::vector<int> edges;
    std::size_t start_crossing = 0;  // crossing the arc leaves (under, out)
    std::size_t end_crossing = 0;    // crossing the arc enters (under, in)

    friend bool operator==(Arc const&, Arc const&) = default;
  };

  class KnotDiagram {
   public:
    // The zero-crossing diagram of the unknot.
    KnotDiagram();

    // Validates the crossings, orients the diagram and computes arcs and
    // signs. Throws ValidationError for non-knots or inconsistent input.
    static KnotDiagram from_crossings(std::vector<std::array<int, 4>> const& xs);

    std::vector<Crossing> const& crossings() const noexcept { return crossings_; }
    std::vector<Arc> const& arcs() const noexcept { return arcs_; }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::size_t base_arc() const noexcept { return 0; }

    // Edge labels in the order they are traversed, starting with the edge
    // leaving crossing 0 along its under-strand.
    std::vector<int> const& traversal() const noexcept { return traversal_; }
    // successor(e) is the edge following e along the orientation.
    int successor(int edge) const;

    // For crossing c: the arcs entering / leaving it under and passing over.
    std::size_t in_arc(std::size_t c) const { return in_arc_.at(c); }
    std::size_t out_arc(std::size_t c) const { return out_arc_.at(c); }
    std::size_t over_arc(std::size_t c) const { return over_arc_.at(c); }

    // Crossings passed under, in order, walking from the start of the base
    // arc; under_sequence()[k] is where arc k ends.
    std::vector<std::size_t> const& under_sequence() const noexcept {
      return under_sequence_;
    }

    std::vector<std::array<int, 4>> raw_crossings() const;

    friend bool operator==(KnotDiagram const& a, KnotDiagram const& b) {
      return a.crossings_ == b.crossings_;
    }

   private:
    std::vector<Crossing> crossings_;
    std::vector<Arc> arcs_;
    std::vector<int> traversal_;
    std::vector<int> successor_;  // indexed by edge label
    std::vector<std::size_t> in_arc_, out_arc_, over_arc_;
    std::vector<std::size_t> under_sequence_;
  };

  struct BraidWord {
    std::size_t strands = 1;
    std::vector<int> letters;  // +i is sigma_i, -i its inverse, 1 <= i < strands

    friend bool operator==(BraidWord const&, BraidWord const&) = default;
  };

  // Grammar: PD[X[i,j,k,l](,X[...])*], whitespace-insensitive.
  KnotDiagram parse_pd(std::string_view text);
  std::string render_pd(KnotDiagram const& d);

  // Signed Gauss code: tokens O<k><s> / U<k><s> with s in {+,-}, separated by
  // whitespace or commas, listing over/under passages along the knot.
  KnotDiagram parse_gauss(std::string_view text);

  // Whitespace separated signed generator indices. When strands is 0 it is
  // taken to be 1 + max |index|.
  BraidWord parse_braid(std::string_view text, std::size_t strands = 0);
  KnotDiagram braid_closure(BraidWord const& b);

  // Swap over and under at every crossing.
  KnotDiagram mirror(KnotDiagram const& d);
  // Reflect the projection plane. Also a diagram of the mirror knot, but one
  // that keeps every arc of d (so Wirtinger generators correspond).
  KnotDiagram reflect(KnotDiagram const& d);

  int writhe(KnotDiagram const& d);

}  // namespace kch
