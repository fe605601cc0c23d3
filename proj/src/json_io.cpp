#include "kch/json_io.hpp"

#include <limits>
#include <sstream>

namespace kch {

  namespace {

    [[noreturn]] void schema(std::string const& what) { throw SchemaError(what); }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object()) {
        schema(std::string("expected an object with field '") + key + "'");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        schema(std::string("missing field '") + key + "'");
      }
      return *it;
    }

    Json const& array_field(Json const& j, char const* key) {
      Json const& a = field(j, key);
      if (!a.is_array()) {
        schema(std::string("field '") + key + "' must be an array");
      }
      return a;
    }

    std::string answer_name(Answer a) { return to_string(a); }

  }  // namespace

  Json integer_to_json(Integer const& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(n);
    }
    return n.str();
  }

  Integer integer_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      auto const& s = j.get_ref<std::string const&>();
      std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
      if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
        schema("not an integer: '" + s + "'");
      }
      return Integer(s);
    }
    schema("expected an integer");
  }

  Json word_to_json(FreeWord const& w) { return w.to_signed(); }

  FreeWord word_from_json(Json const& j) {
    if (!j.is_array()) {
      schema("a word must be an array of signed generator indices");
    }
    std::vector<long> idx;
    for (auto const& x : j) {
      if (!x.is_number_integer() || x.get<long>() == 0) {
        schema("word letters must be nonzero integers");
      }
      idx.push_back(x.get<long>());
    }
    return FreeWord::from_signed(idx);
  }

  Json laurent_to_json(LaurentPoly const& p) {
    Json c = Json::array();
    for (auto const& x : p.coeffs()) {
      c.push_back(integer_to_json(x));
    }
    return {{"min", p.min_exponent()}, {"coeffs", c}};
  }

  LaurentPoly laurent_from_json(Json const& j) {
    Json const& lo = field(j, "min");
    if (!lo.is_number_integer()) {
      schema("'min' must be an integer");
    }
    std::vector<Integer> c;
    for (auto const& x : array_field(j, "coeffs")) {
      c.push_back(integer_from_json(x));
    }
    return LaurentPoly(lo.get<long>(), std::move(c));
  }

  Json presentation_to_json(GroupPresentation const& p, PeripheralSystem const& ps) {
    Json rel = Json::array();
    for (auto const& r : p.relators) {
      rel.push_back(word_to_json(r));
    }
    return {{"generators", p.generators},
            {"relators", rel},
            {"meridian", word_to_json(ps.meridian)},
            {"longitude", word_to_json(ps.longitude)}};
  }

  std::pair<GroupPresentation, PeripheralSystem> presentation_from_json(Json const& j) {
    Json const& g = field(j, "generators");
    if (!g.is_number_unsigned()) {
      schema("'generators' must be a non-negative integer");
    }
    GroupPresentation p;
    p.generators = g.get<std::size_t>();
    for (auto const& r : array_field(j, "relators")) {
      p.relators.push_back(word_from_json(r));
    }
    PeripheralSystem ps{word_from_json(field(j, "meridian")), word_from_json(field(j, "longitude"))};
    return {std::move(p), std::move(ps)};
  }

  Json element_to_json(GroupRingElement const& e) {
    Json out = Json::array();
    for (auto const& [w, c] : e.terms()) {
      out.push_back({{"coeff", integer_to_json(c)}, {"word", word_to_json(w)}});
    }
    return out;
  }

  Json terms_to_json(RingTerms const& t) {
    Json out = Json::array();
    for (auto const& [c, w] : t) {
      out.push_back({{"coeff", integer_to_json(c)}, {"word", word_to_json(w)}});
    }
    return out;
  }

  RingTerms terms_from_json(Json const& j) {
    if (!j.is_array()) {
      schema("a group ring element must be an array of {coeff, word}");
    }
    RingTerms out;
    for (auto const& t : j) {
      out.emplace_back(integer_from_json(field(t, "coeff")), word_from_json(field(t, "word")));
    }
    return out;
  }

  Json selement_to_json(SElement const& e) {
    Json out = Json::array();
    for (auto const& [w, c] : e.terms()) {
      Json letters = Json::array();
      for (auto const& x : w.letters) {
        if (x.curly) {
          letters.push_back({{"kind", "cu"}, {"l", x.alpha.l}, {"m", x.alpha.m}});
        } else {
          letters.push_back({{"kind", "sq"}, {"word", word_to_json(x.word)}});
        }
      }
      out.push_back({{"coeff", integer_to_json(c)}, {"letters", letters}});
    }
    return out;
  }

  Json iso_to_json(IsoData const& d) {
    Json psi = Json::array();
    for (auto const& w : d.psi) {
      psi.push_back(word_to_json(w));
    }
    return {{"source", presentation_to_json(d.source, d.source_peripheral)},
            {"target", presentation_to_json(d.target, d.target_peripheral)},
            {"psi", psi},
            {"matrix", d.matrix},
            {"x", terms_to_json(d.x)},
            {"xprime", terms_to_json(d.xprime)}};
  }

  IsoData iso_from_json(Json const& j) {
    IsoData d;
    std::tie(d.source, d.source_peripheral) = presentation_from_json(field(j, "source"));
    std::tie(d.target, d.target_peripheral) = presentation_from_json(field(j, "target"));
    for (auto const& w : array_field(j, "psi")) {
      d.psi.push_back(word_from_json(w));
    }
    Json const& m = array_field(j, "matrix");
    if (m.size() != 4) {
      schema("'matrix' must have four entries [n1, n2, n3, n4]");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (!m[i].is_number_integer()) {
        schema("'matrix' entries must be integers");
      }
      d.matrix[i] = m[i].get<long>();
    }
    d.x = terms_from_json(field(j, "x"));
    d.xprime = terms_from_json(field(j, "xprime"));
    return d;
  }

  Json diagram_summary(KnotDiagram const& d) {
    std::size_t arcs = d.crossing_count() == 0 ? 0 : d.arc_count();
    return {{"crossings", d.crossing_count()},
            {"arcs", arcs},
            {"writhe", writhe(d)},
            {"valid", true},
            {"pd", render_pd(d)}};
  }

  Json census_entry_to_json(CensusEntry const& e) {
    Json j = {{"name", e.name}, {"pd", e.pd}};
    j["expected_alexander"] = e.expected_alexander ? laurent_to_json(*e.expected_alexander) : Json();
    return j;
  }

  CensusEntry census_entry_from_json(Json const& j) {
    CensusEntry e;
    Json const& name = field(j, "name");
    Json const& pd = field(j, "pd");
    if (!name.is_string() || !pd.is_string()) {
      schema("census 'name' and 'pd' must be strings");
    }
    e.name = name.get<std::string>();
    e.pd = pd.get<std::string>();
    if (auto it = j.find("expected_alexander"); it != j.end() && !it->is_null()) {
      e.expected_alexander = laurent_from_json(*it);
    }
    return e;
  }

  Json suite_to_json(SuiteReport const& r) {
    Json props = Json::array();
    for (auto const& p : r.properties) {
      props.push_back({{"name", p.name},
                       {"pass", p.pass},
                       {"fail", p.fail},
                       {"unknown", p.unknown},
                       {"failures", p.failures}});
    }
    return {{"knot", r.knot},
            {"seed", r.seed},
            {"samples", r.samples},
            {"ok", r.ok()},
            {"properties", props}};
  }

  Json recovery_to_json(RecoveryResult const& r) {
    Json checks = Json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name}, {"answer", answer_name(c.answer)}});
    }
    return {{"conjugator", word_to_json(r.conjugator)},
            {"conjugator_text", r.conjugator.to_string()},
            {"sign_m", r.sign_m},
            {"sign_l", r.sign_l},
            {"n3_check", r.n3_check},
            {"verified", true},
            {"checks", checks}};
  }

  Json lemma_to_json(LemmaReport const& r) {
    return {{"candidates", r.candidates},
            {"instances", r.instances},
            {"counterexamples", r.counterexamples},
            {"solver_failures", r.solver_failures}};
  }

  namespace {

    bool scalar(Json const& j) { return !j.is_object() && !j.is_array(); }

    std::string scalar_text(Json const& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

    bool flat_array(Json const& j) {
      for (auto const& x : j) {
        if (!scalar(x) && !(x.is_array() && flat_array(x))) {
          return false;
        }
      }
      return true;
    }

    void render(std::ostringstream& os, Json const& j, std::size_t indent) {
      std::string const pad(indent, ' ');
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          if (scalar(v) || (v.is_array() && flat_array(v))) {
            os << pad << k << ": " << (v.is_array() ? v.dump() : scalar_text(v)) << '\n';
          } else {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
          }
        }
        return;
      }
      if (j.is_array()) {
        for (auto const& v : j) {
          if (scalar(v)) {
            os << pad << "- " << scalar_text(v) << '\n';
          } else {
            os << pad << "-\n";
            render(os, v, indent + 2);
          }
        }
        return;
      }
      os << pad << scalar_text(j) << '\n';
    }

  }  // namespace

  std::string render_text(Json const& j) {
    std::ostringstream os;
    render(os, j, 0);
    return os.str();
  }

}  // namespace kch
