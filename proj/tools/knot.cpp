// knot: command-line front end.
//
// Exit codes: 0 success, 1 usage or schema error, 2 invalid input,
// 3 Alexander route disagreement, 4 failed identity, 5 recovery match
// failure, 6 uncertified recovery.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kch/alexander.hpp"
#include "kch/census.hpp"
#include "kch/error.hpp"
#include "kch/json_io.hpp"
#include "kch/kch_suite.hpp"
#include "kch/presentation.hpp"
#include "kch/recovery.hpp"

using namespace kch;

namespace {

  enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kInvalid = 2,
    kDisagree = 3,
    kIdentityFailed = 4,
    kMatchFailure = 5,
    kUnknown = 6,
  };

  struct UsageError : Error {
    using Error::Error;
  };

  struct Config {
    std::string format = "json";
    std::string backend = "kb";
    std::size_t max_rules = CompletionBudget{}.max_rules;
    std::size_t max_length = CompletionBudget{}.max_length;
    std::size_t quotient_degree = BackendOptions{}.quotient_degree;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::string census;

    BackendOptions backend_options() const {
      BackendOptions o;
      o.kind = backend_kind_from_string(backend);
      o.budget.max_rules = max_rules;
      o.budget.max_length = max_length;
      o.quotient_degree = quotient_degree;
      return o;
    }
  };

  // Values from --config; explicit flags are applied afterwards.
  void merge_config_file(Config& c, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open config file '" + path + "'");
    }
    Json j;
    try {
      j = Json::parse(in);
    } catch (Json::exception const& e) {
      throw SchemaError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
      throw SchemaError("config must be a JSON object");
    }
    try {
      if (j.contains("format")) c.format = j["format"].get<std::string>();
      if (j.contains("backend")) c.backend = j["backend"].get<std::string>();
      if (j.contains("budget")) c.max_rules = j["budget"].get<std::size_t>();
      if (j.contains("max_length")) c.max_length = j["max_length"].get<std::size_t>();
      if (j.contains("quotient_degree")) c.quotient_degree = j["quotient_degree"].get<std::size_t>();
      if (j.contains("samples")) c.samples = j["samples"].get<std::size_t>();
      if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("census")) c.census = j["census"].get<std::string>();
    } catch (Json::exception const& e) {
      throw SchemaError(std::string("config: ") + e.what());
    }
  }

  void check_config(Config const& c) {
    if (c.format != "json" && c.format != "text") {
      throw UsageError("format must be json or text");
    }
    if (c.max_rules == 0 || c.max_length == 0) {
      throw UsageError("budgets must be positive");
    }
    try {
      (void)backend_kind_from_string(c.backend);
    } catch (Error const& e) {
      throw UsageError(e.what());
    }
  }

  struct KnotInput {
    std::string knot_arg;  // census name or PD text
    std::string pd, braid, gauss;
    std::size_t strands = 0;

    void add_to(CLI::App* app, bool positional) {
      if (positional) {
        app->add_option("knot", knot_arg, "census name (e.g. 4_1), 'unknot' or PD code");
      }
      app->add_option("--pd", pd, "PD code");
      app->add_option("--braid", braid, "braid word, e.g. \"1 1 1\"");
      app->add_option("--strands", strands, "braid strand count");
      app->add_option("--gauss", gauss, "signed Gauss code");
    }
  };

  struct Resolved {
    std::string name;
    KnotDiagram diagram;
  };

  Resolved resolve(KnotInput const& in, Config const& cfg) {
    int given = !in.pd.empty() + !in.braid.empty() + !in.gauss.empty() + !in.knot_arg.empty();
    if (given != 1) {
      throw UsageError("give exactly one knot: a name, --pd, --braid or --gauss");
    }
    if (!in.pd.empty()) {
      return {"pd", parse_pd(in.pd)};
    }
    if (!in.braid.empty()) {
      return {"braid", braid_closure(parse_braid(in.braid, in.strands))};
    }
    if (!in.gauss.empty()) {
      return {"gauss", parse_gauss(in.gauss)};
    }
    if (in.knot_arg.rfind("PD[", 0) == 0) {
      return {"pd", parse_pd(in.knot_arg)};
    }
    if (in.knot_arg == "unknot" || in.knot_arg == "0_1") {
      return {in.knot_arg, KnotDiagram()};
    }
    auto census = load_census(cfg.census.empty() ? default_census_path() : cfg.census);
    auto e = find_knot(census, in.knot_arg);
    if (!e) {
      throw ValidationError("unknown knot '" + in.knot_arg + "'");
    }
    return {e->name, e->diagram()};
  }

  void emit(Config const& cfg, Json const& j) {
    if (cfg.format == "text") {
      std::cout << render_text(j);
    } else {
      std::cout << j.dump(2) << '\n';
    }
  }

  Json alexander_json(LaurentPoly const& p) {
    Json j = laurent_to_json(p);
    j["polynomial"] = p.to_string();
    return j;
  }

  int cmd_parse(Config const& cfg, KnotInput const& in) {
    Resolved r = resolve(in, cfg);
    emit(cfg, diagram_summary(r.diagram));
    return kOk;
  }

  int cmd_pi1(Config const& cfg, KnotInput const& in, bool wirtinger_only) {
    Resolved r = resolve(in, cfg);
    KnotGroup g = wirtinger(r.diagram);
    if (!wirtinger_only) {
      g = reduce_knot_group(g, tietze(g.presentation, true));
    }
    auto backend = make_backend(g.presentation, cfg.backend_options());
    Json j = presentation_to_json(g.presentation, g.peripheral);
    j["degrees"] = g.degrees;
    j["backend"] = {{"kind", to_string(backend->options().kind)},
                    {"method", backend->method()},
                    {"decides", backend->decides()}};
    j["peripheral_commute"] =
        to_string(backend->equal(g.peripheral.meridian * g.peripheral.longitude,
                                 g.peripheral.longitude * g.peripheral.meridian)
                      .answer);
    emit(cfg, j);
    return kOk;
  }

  int cmd_alexander(Config const& cfg, KnotInput const& in, std::string const& oracle, bool compare) {
    Resolved r = resolve(in, cfg);
    auto quandle = [&] { return alexander_polynomial(quandle_matrix(r.diagram)); };
    auto fox = [&] {
      KnotGroup g = wirtinger(r.diagram);
      return fox_oracle(g.presentation, g.peripheral);
    };
    Json j = {{"knot", r.name}};
    if (compare) {
      LaurentPoly a = quandle(), b = fox();
      j["quandle"] = alexander_json(a);
      j["fox"] = alexander_json(b);
      j["agree"] = a == b;
      emit(cfg, j);
      return a == b ? kOk : kDisagree;
    }
    if (oracle != "quandle" && oracle != "fox") {
      throw UsageError("--oracle must be quandle or fox");
    }
    LaurentPoly p = oracle == "fox" ? fox() : quandle();
    j["route"] = oracle;
    j["alexander"] = alexander_json(p);
    if (oracle == "quandle" && r.diagram.crossing_count() > 0) {
      Json inv = Json::array();
      for (auto const& q : module_invariants(quandle_matrix(r.diagram))) {
        inv.push_back(alexander_json(q));
      }
      j["module_invariants"] = inv;
    }
    emit(cfg, j);
    return kOk;
  }

  int cmd_verify(Config const& cfg, KnotInput const& in) {
    Resolved r = resolve(in, cfg);
    SuiteReport report;
    if (cfg.samples == 0) {
      report.knot = r.name;
      report.seed = cfg.seed;
    } else {
      Context ctx = knot_context(r.diagram, cfg.backend_options());
      report = run_kch_suite(ctx, r.name, cfg.samples, cfg.seed);
    }
    emit(cfg, suite_to_json(report));
    return report.ok() ? kOk : kIdentityFailed;
  }

  IsoData generate_iso(Config const& cfg, KnotInput const& in, std::string const& kind,
                       std::string const& gamma) {
    Resolved r = resolve(in, cfg);
    if (kind == "mirror") {
      return mirror_iso(r.diagram);
    }
    KnotGroup g = wirtinger(r.diagram);
    if (kind == "identity") {
      return identity_iso(g);
    }
    if (kind == "conjugated") {
      std::vector<long> idx;
      std::istringstream is(gamma);
      for (long x; is >> x;) {
        idx.push_back(x);
      }
      FreeWord w = FreeWord::from_signed(idx);
      if (w.generator_bound() > g.presentation.generators) {
        throw ValidationError("--gamma uses a generator outside the presentation");
      }
      return conjugated_iso(g, w);
    }
    throw UsageError("--generate must be identity, conjugated or mirror");
  }

  IsoData read_iso(std::string const& path) {
    std::ifstream f(path);
    if (!f) {
      throw UsageError("cannot open '" + path + "'");
    }
    try {
      return iso_from_json(Json::parse(f));
    } catch (Json::exception const& e) {
      throw SchemaError(e.what());
    }
  }

  int cmd_recover(Config const& cfg, std::string const& file, KnotInput const& in,
                  std::string const& generate, std::string const& gamma, bool emit_only) {
    IsoData data;
    if (!generate.empty()) {
      data = generate_iso(cfg, in, generate, gamma);
    } else if (!file.empty()) {
      data = read_iso(file);
    } else {
      throw UsageError("recover needs an IsoData file or --generate");
    }
    try {
      validate(data);
    } catch (ValidationError const& e) {
      // structurally unusable isomorphism data counts as a schema error
      throw SchemaError(e.what());
    }
    if (emit_only) {
      emit(cfg, iso_to_json(data));
      return kOk;
    }
    emit(cfg, recovery_to_json(recover_peripheral(data, cfg.backend_options())));
    return kOk;
  }

  int cmd_census_build(std::string const& input, std::string const& output) {
    auto entries = load_census(input);
    for (auto& e : entries) {
      e = with_oracle(std::move(e));
    }
    if (output.empty() || output == "-") {
      write_census_jsonl(std::cout, entries);
      return kOk;
    }
    std::ofstream out(output);
    if (!out) {
      throw UsageError("cannot write '" + output + "'");
    }
    write_census_jsonl(out, entries);
    return out ? kOk : kUsage;
  }

  int cmd_census_list(Config const& cfg) {
    Json j = Json::array();
    for (auto const& e : load_census(cfg.census.empty() ? default_census_path() : cfg.census)) {
      j.push_back(census_entry_to_json(e));
    }
    emit(cfg, j);
    return kOk;
  }

  int report_error(int code, std::string const& kind, std::string const& what) {
    std::cerr << "knot: " << kind << ": " << what << '\n';
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot contact homology toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Config flags;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags take precedence");
  auto* o_format = app.add_option("--format", flags.format, "json or text");
  auto* o_backend = app.add_option("--backend", flags.backend,
                                   "free, kb, torus or quotient");
  auto* o_budget = app.add_option("--budget", flags.max_rules, "Knuth-Bendix rule budget");
  auto* o_census = app.add_option("--census", flags.census, "census file (.jsonl or table)");

  KnotInput parse_in, pi1_in, alex_in, verify_in, recover_in;

  auto* parse = app.add_subcommand("parse", "parse and validate a diagram");
  parse_in.add_to(parse, false);

  auto* pi1 = app.add_subcommand("pi1", "knot group presentation");
  pi1_in.add_to(pi1, true);
  bool wirtinger_only = false;
  pi1->add_flag("--wirtinger", wirtinger_only, "skip Tietze reduction");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex_in.add_to(alex, true);
  std::string oracle = "quandle";
  bool compare = false;
  alex->add_option("--oracle", oracle, "quandle (default) or fox");
  alex->add_flag("--compare", compare, "compute both routes and compare");

  auto* kch_cmd = app.add_subcommand("kch", "KCH identity suites");
  kch_cmd->require_subcommand(1);
  kch_cmd->fallthrough();
  auto* verify = kch_cmd->add_subcommand("verify", "run the identity suite");
  verify_in.add_to(verify, true);
  auto* o_samples = verify->add_option("--samples", flags.samples, "samples per property");
  auto* o_seed = verify->add_option("--seed", flags.seed, "random seed");
  auto* o_vbackend = verify->add_option("--backend", flags.backend, "per-command backend");

  auto* recover = app.add_subcommand("recover", "recover the peripheral structure");
  std::string iso_file, generate, gamma;
  bool emit_only = false;
  recover->add_option("file", iso_file, "IsoData JSON file");
  recover->add_option("--generate", generate, "identity, conjugated or mirror");
  recover->add_option("--knot", recover_in.knot_arg, "knot for --generate");
  recover->add_option("--pd", recover_in.pd, "PD code for --generate");
  recover->add_option("--gamma", gamma, "planted conjugator as signed indices");
  recover->add_flag("--emit", emit_only, "print the IsoData instead of recovering");

  auto* census = app.add_subcommand("census", "bundled knot census");
  census->require_subcommand(1);
  census->fallthrough();
  auto* build = census->add_subcommand("build", "fill expected polynomials by the Fox oracle");
  std::string input = "census_pd.txt", output;
  build->add_option("--input", input, "source table");
  build->add_option("--output", output, "JSON lines output (default stdout)");
  auto* list = census->add_subcommand("list", "print the census");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) {
      merge_config_file(cfg, config_path);
    }
    if (o_format->count()) cfg.format = flags.format;
    if (o_backend->count() || o_vbackend->count()) cfg.backend = flags.backend;
    if (o_budget->count()) cfg.max_rules = flags.max_rules;
    if (o_census->count()) cfg.census = flags.census;
    if (o_samples->count()) cfg.samples = flags.samples;
    if (o_seed->count()) cfg.seed = flags.seed;
    check_config(cfg);

    if (parse->parsed()) return cmd_parse(cfg, parse_in);
    if (pi1->parsed()) return cmd_pi1(cfg, pi1_in, wirtinger_only);
    if (alex->parsed()) return cmd_alexander(cfg, alex_in, oracle, compare);
    if (verify->parsed()) return cmd_verify(cfg, verify_in);
    if (recover->parsed()) return cmd_recover(cfg, iso_file, recover_in, generate, gamma, emit_only);
    if (build->parsed()) return cmd_census_build(input, output);
    if (list->parsed()) return cmd_census_list(cfg);
    return kUsage;
  } catch (UsageError const& e) {
    return report_error(kUsage, "usage", e.what());
  } catch (SchemaError const& e) {
    return report_error(kUsage, "schema", e.what());
  } catch (SyntaxError const& e) {
    return report_error(kInvalid, "syntax", e.what());
  } catch (ValidationError const& e) {
    return report_error(kInvalid, "validation", e.what());
  } catch (KnotednessViolation const& e) {
    return report_error(kInvalid, "knottedness", e.what());
  } catch (MatchFailure const& e) {
    return report_error(kMatchFailure, "match failure", e.what());
  } catch (UnknownAnswer const& e) {
    return report_error(kUnknown, "unknown", e.what());
  } catch (Error const& e) {
    return report_error(kInvalid, "error", e.what());
  }
}
