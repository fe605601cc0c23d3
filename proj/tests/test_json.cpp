#include <doctest.h>

#include <sstream>

#include "common.hpp"
#include "kch/error.hpp"
#include "kch/json_io.hpp"

using namespace kch;

TEST_CASE("integers and words") {
  Integer big = Integer(1) << 80;
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_to_json(Integer(-7)) == Json(-7));
  CHECK_THROWS_AS(integer_from_json(Json("12a")), SchemaError);
  FreeWord w = FreeWord::power(0, 2) * FreeWord::power(2, -1);
  CHECK(word_to_json(w) == Json::parse("[1,1,-3]"));
  CHECK(word_from_json(word_to_json(w)) == w);
  CHECK_THROWS_AS(word_from_json(Json::parse("[1,0]")), SchemaError);
  CHECK_THROWS_AS(word_from_json(Json::parse("{}")), SchemaError);
}

TEST_CASE("polynomials and census entries") {
  LaurentPoly p(-1, {1, -3, 1});
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CensusEntry e = with_oracle({"4_1", "PD[X[8,5,1,6],X[4,1,5,2],X[2,8,3,7],X[6,4,7,3]]", {}});
  CensusEntry back = census_entry_from_json(census_entry_to_json(e));
  CHECK(back.name == e.name);
  CHECK(back.pd == e.pd);
  CHECK(back.expected_alexander == e.expected_alexander);
  std::stringstream ss;
  write_census_jsonl(ss, {e, e});
  CHECK(read_census_jsonl(ss).size() == 2);
  std::istringstream bad("{\"name\": \"x\"}\n");
  CHECK_THROWS_AS(read_census_jsonl(bad), SchemaError);
  std::istringstream table("# comment\n3_1 PD[X[6,3,1,4],X[4,1,5,2],X[2,5,3,6]]\n\n");
  CHECK(read_census_table(table).size() == 1);
}

TEST_CASE("isomorphism data round trip") {
  KnotDiagram d = test::census_knot("3_1");
  for (IsoData const& iso : {identity_iso(wirtinger(d)), mirror_iso(d)}) {
    IsoData back = iso_from_json(iso_to_json(iso));
    CHECK(back.source == iso.source);
    CHECK(back.target == iso.target);
    CHECK(back.source_peripheral == iso.source_peripheral);
    CHECK(back.target_peripheral == iso.target_peripheral);
    CHECK(back.psi == iso.psi);
    CHECK(back.matrix == iso.matrix);
    CHECK(back.x == iso.x);
    CHECK(back.xprime == iso.xprime);
  }
  Json j = iso_to_json(identity_iso(wirtinger(d)));
  j.erase("psi");
  CHECK_THROWS_AS(iso_from_json(j), SchemaError);
  Json k = iso_to_json(identity_iso(wirtinger(d)));
  k["matrix"] = Json::parse("[1,0,0]");
  CHECK_THROWS_AS(iso_from_json(k), SchemaError);
}

TEST_CASE("presentations and reports") {
  KnotGroup g = wirtinger(test::census_knot("4_1"));
  auto [p, ps] = presentation_from_json(presentation_to_json(g.presentation, g.peripheral));
  CHECK(p == g.presentation);
  CHECK(ps == g.peripheral);
  Json s = diagram_summary(KnotDiagram());
  CHECK(s["crossings"] == 0);
  CHECK(s["writhe"] == 0);
  SuiteReport r{"3_1", 7, 0, {}};
  CHECK(suite_to_json(r)["ok"] == true);
  std::string text = render_text(Json::parse(R"({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": "f"}]})"));
  CHECK(text == "a: 1\nb:\n  c: [1,2]\nd:\n  -\n    e: f\n");
}
