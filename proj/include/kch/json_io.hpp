#pragma once

// JSON forms of the library's values. Words are lists of signed 1-based
// generator indices; integers are numbers when they fit in 64 bits and
// decimal strings otherwise.

#include <json.hpp>

#include "kch/census.hpp"
#include "kch/error.hpp"
#include "kch/group_ring.hpp"
#include "kch/kch_suite.hpp"
#include "kch/knot_diagram.hpp"
#include "kch/laurent.hpp"
#include "kch/presentation.hpp"
#include "kch/recovery.hpp"
#include "kch/string_module.hpp"

namespace kch {

  using Json = nlohmann::ordered_json;

  Json integer_to_json(Integer const& n);
  Integer integer_from_json(Json const& j);

  Json word_to_json(FreeWord const& w);
  FreeWord word_from_json(Json const& j);

  // {min, coeffs}
  Json laurent_to_json(LaurentPoly const& p);
  LaurentPoly laurent_from_json(Json const& j);

  // {generators, relators, meridian, longitude}
  Json presentation_to_json(GroupPresentation const& p, PeripheralSystem const& ps);
  std::pair<GroupPresentation, PeripheralSystem> presentation_from_json(Json const& j);

  // [{coeff, word}]
  Json element_to_json(GroupRingElement const& e);
  Json terms_to_json(RingTerms const& t);
  RingTerms terms_from_json(Json const& j);

  // [{coeff, letters: [{kind: "sq", word} | {kind: "cu", l, m}]}]
  Json selement_to_json(SElement const& e);

  // {source, target, psi, matrix, x, xprime}; shape errors throw SchemaError,
  // semantic checks are left to validate(IsoData).
  Json iso_to_json(IsoData const& d);
  IsoData iso_from_json(Json const& j);

  Json diagram_summary(KnotDiagram const& d);
  Json census_entry_to_json(CensusEntry const& e);
  CensusEntry census_entry_from_json(Json const& j);
  Json suite_to_json(SuiteReport const& r);
  Json recovery_to_json(RecoveryResult const& r);
  Json lemma_to_json(LemmaReport const& r);

  // Indented "key: value" rendering of a report for humans.
  std::string render_text(Json const& j);

}  // namespace kch
