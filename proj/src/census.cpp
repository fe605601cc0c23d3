#include "kch/census.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kch/alexander.hpp"
#include "kch/error.hpp"
#include "kch/json_io.hpp"
#include "kch/presentation.hpp"

#ifndef KCH_CENSUS_DEFAULT
#define KCH_CENSUS_DEFAULT "census.jsonl"
#endif

namespace kch {

  namespace {

    bool skipped(std::string const& line) {
      auto p = line.find_first_not_of(" \t\r");
      return p == std::string::npos || line[p] == '#';
    }

    bool ends_with(std::string const& s, std::string const& suffix) {
      return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
    }

  }  // namespace

  std::vector<CensusEntry> read_census_table(std::istream& in) {
    std::vector<CensusEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (skipped(line)) {
        continue;
      }
      std::istringstream ls(line);
      CensusEntry e;
      ls >> e.name;
      std::getline(ls >> std::ws, e.pd);
      while (!e.pd.empty() && (e.pd.back() == '\r' || e.pd.back() == ' ')) {
        e.pd.pop_back();
      }
      if (e.name.empty() || e.pd.empty()) {
        throw SyntaxError("census line " + std::to_string(lineno) + ": expected '<name> PD[...]'");
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<CensusEntry> read_census_jsonl(std::istream& in) {
    std::vector<CensusEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (skipped(line)) {
        continue;
      }
      try {
        out.push_back(census_entry_from_json(Json::parse(line)));
      } catch (Json::exception const& ex) {
        throw SchemaError("census line " + std::to_string(lineno) + ": " + ex.what());
      }
    }
    return out;
  }

  std::vector<CensusEntry> load_census(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot open census file '" + path + "'");
    }
    return ends_with(path, ".jsonl") ? read_census_jsonl(in) : read_census_table(in);
  }

  CensusEntry with_oracle(CensusEntry e) {
    KnotGroup g = wirtinger(e.diagram());
    e.expected_alexander = fox_oracle(g.presentation, g.peripheral);
    return e;
  }

  void write_census_jsonl(std::ostream& out, std::vector<CensusEntry> const& entries) {
    for (auto const& e : entries) {
      out << census_entry_to_json(e).dump() << '\n';
    }
  }

  std::string default_census_path() {
    if (char const* env = std::getenv("KNOT_CENSUS"); env != nullptr && *env != '\0') {
      return env;
    }
    return KCH_CENSUS_DEFAULT;
  }

  std::optional<CensusEntry> find_knot(std::vector<CensusEntry> const& census,
                                       std::string const& name) {
    for (auto const& e : census) {
      if (e.name == name) {
        return e;
      }
    }
    return std::nullopt;
  }

}  // namespace kch
