#pragma once

#include <string>
#include <vector>

#include "kch/census.hpp"
#include "kch/error.hpp"

#ifndef KCH_TEST_CENSUS_TABLE
#error "KCH_TEST_CENSUS_TABLE must point at data/census_pd.txt"
#endif

namespace kch::test {

  inline std::vector<CensusEntry> const& census_table() {
    static std::vector<CensusEntry> const table = load_census(KCH_TEST_CENSUS_TABLE);
    return table;
  }

  inline KnotDiagram census_knot(std::string const& name) {
    for (auto const& e : census_table()) {
      if (e.name == name) {
        return e.diagram();
      }
    }
    throw ValidationError("no census knot " + name);
  }

}  // namespace kch::test
