#pragma once

// The bundled table of prime knots. The source table lists "name PD[...]"
// lines; the built census is JSON lines {name, pd, expected_alexander} with
// the expected polynomial computed by the Fox-calculus oracle.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kch/knot_diagram.hpp"
#include "kch/laurent.hpp"

namespace kch {

  struct CensusEntry {
    std::string name;
    std::string pd;
    std::optional<LaurentPoly> expected_alexander;

    KnotDiagram diagram() const { return parse_pd(pd); }
  };

  // Blank lines and lines starting with '#' are skipped.
  std::vector<CensusEntry> read_census_table(std::istream& in);
  std::vector<CensusEntry> read_census_jsonl(std::istream& in);
  // JSON lines when the file ends in ".jsonl", the plain table otherwise.
  std::vector<CensusEntry> load_census(std::string const& path);

  // Fills expected_alexander from the Fox oracle on the Wirtinger presentation.
  CensusEntry with_oracle(CensusEntry e);
  void write_census_jsonl(std::ostream& out, std::vector<CensusEntry> const& entries);

  // $KNOT_CENSUS if set, otherwise the path configured at build time.
  std::string default_census_path();

  std::optional<CensusEntry> find_knot(std::vector<CensusEntry> const& census,
                                       std::string const& name);

}  // namespace kch
