#include "plastic_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "plastic/bounds.hpp"
#include "plastic/constructions.hpp"
#include "plastic/io.hpp"
#include "plastic/search.hpp"
#include "plastic/separation.hpp"
#include "plastic/verify.hpp"
#include "plastic_cli/suites.hpp"

namespace plastic::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct RunConfig {
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::size_t max_size = 12;               // points, for separation searches
  std::uint64_t max_maps = 100'000'000;    // maps, for enumeration
};

/// Carries a ready report together with the exit code.
struct Stop {
  int code;
  Json report;
  std::string message;
};

Json error_report(const std::string& message, const std::string& where = {}) {
  Json out{{"verdict", "error"}, {"error", message}};
  if (!where.empty()) out["where"] = where;
  out["witnesses"] = Json::array();
  return out;
}

[[noreturn]] void usage(const std::string& message) { throw Stop{kExitUsage, error_report(message), message}; }

[[noreturn]] void refuse(const std::string& message) {
  Json report{{"verdict", "refused"}, {"error", message}, {"witnesses", Json::array()}};
  throw Stop{kExitRefused, std::move(report), message};
}

Rational parse_param(const std::string& text, const std::string& name) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    usage("--" + name + ": " + e.what());
  }
}

Rational parse_eps(const std::string& text) {
  const Rational eps = parse_param(text, "eps");
  if (eps.sign() <= 0) usage("--eps must be positive, got " + eps.str());
  return eps;
}

FiniteMetricSpace load(const std::string& path) {
  try {
    const SpaceData data = io::space_data_from_json(io::read_json_file(path));
    const ValidationReport report = validate(data);
    if (!report.ok()) {
      Json j = io::to_json(report, data);
      j["file"] = path;
      throw Stop{kExitInput, std::move(j), path + ": " + report.message};
    }
    return FiniteMetricSpace::create(data);
  } catch (const io::FormatError& e) {
    const bool file_level = e.where() == path;
    throw Stop{kExitInput, error_report(e.what(), file_level ? path : path + ": " + e.where()),
               file_level ? std::string(e.what()) : path + ": " + e.what()};
  }
}

void limit_points(const FiniteMetricSpace& space, const RunConfig& cfg, const std::string& what) {
  if (space.size() > cfg.max_size) {
    refuse(what + " has " + std::to_string(space.size()) + " points; separation searches are limited to --max-size " +
           std::to_string(cfg.max_size));
  }
}

void limit_maps(std::size_t nx, std::size_t ny, MapClass c, const RunConfig& cfg) {
  const std::uint64_t count = enumeration_size(nx, ny, c);
  if (count > cfg.max_maps) {
    refuse("enumerating " + std::string(to_string(c)) + " from " + std::to_string(nx) + " to " + std::to_string(ny) +
           " points exceeds the limit of " + std::to_string(cfg.max_maps) + " maps");
  }
}

Json map_witness(const PointMap& f) {
  Json j = io::to_json(f);
  if (f.domain().size() >= 2) {
    const MapMargins mm = margins(f);
    j["expansion"] = mm.expansion.str();
    j["contraction"] = mm.contraction.str();
    j["expansion_pair"] = io::pair_json(f.domain(), mm.expansion_pair);
    j["contraction_pair"] = io::pair_json(f.domain(), mm.contraction_pair);
  }
  return j;
}

// ---------------------------------------------------------------------------

Json cmd_validate(const std::string& path) {
  // load() throws with the full report for an invalid space.
  const FiniteMetricSpace space = load(path);
  Json j = io::to_json(validate(space.data()), space.data());
  j["file"] = path;
  return j;
}

Json cmd_profile(const std::string& path, const RunConfig& cfg) {
  const FiniteMetricSpace space = load(path);
  limit_points(space, cfg, path);
  const SeparationProfile p = profile(space);
  Json j{{"verdict", "ok"}, {"size", space.size()}};
  const Json body = io::to_json(p);
  j["breakpoints"] = body["breakpoints"];
  j["samples"] = body["samples"];
  Json witnesses = Json::array();
  for (const auto& s : p.samples) {
    witnesses.push_back(Json{{"eps", s.eps.str()},
                             {"s", io::subset_json(space, s.s.witness)},
                             {"alpha", io::subset_json(space, s.alpha.witness)},
                             {"N", io::subset_json(space, s.n_sep.witness)},
                             {"n", io::subset_json(space, s.n_net.witness)}});
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json cmd_modulus(const std::string& px, const std::string& py, const std::string& eps_text,
                 const std::string& class_text, const RunConfig& cfg) {
  const Rational eps = parse_eps(eps_text);
  const auto c = parse_map_class(class_text);
  if (!c || (*c != MapClass::kBijections && *c != MapClass::kAllMaps)) {
    usage("--class must be Bijections or AllMaps, got " + class_text);
  }
  const FiniteMetricSpace x = load(px);
  const FiniteMetricSpace y = load(py);
  if (x.size() < 2) usage("the domain needs at least two points");
  limit_maps(x.size(), y.size(), *c, cfg);
  SearchOptions options;
  options.workers = cfg.workers;
  return io::to_json(exact_modulus(x, y, eps, *c, options), x);
}

Json plasticity_json(const PlasticityCheck& check, const std::string& kind) {
  Json witnesses = Json::object();
  if (check.counterexample) witnesses["expansion"] = map_witness(*check.counterexample);
  Json j{{"verdict", check.holds ? "plastic" : "not-plastic"}, {"kind", kind}, {"maps_checked", check.maps_checked}};
  if (!check.note.empty()) j["note"] = check.note;
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json cmd_check(const std::string& kind, const std::string& px, const std::string& py, const RunConfig& cfg) {
  const FiniteMetricSpace x = load(px);
  const FiniteMetricSpace y = load(py);
  if (kind == "ec") {
    limit_maps(x.size(), y.size(), MapClass::kBijections, cfg);
    return plasticity_json(is_ec_plastic(x, y), kind);
  }
  if (kind == "strong") {
    limit_maps(x.size(), y.size(), MapClass::kAllMaps, cfg);
    return plasticity_json(is_strongly_plastic(x, y), kind);
  }
  limit_points(x, cfg, px);
  limit_points(y, cfg, py);
  limit_maps(x.size(), y.size(), MapClass::kAllMaps, cfg);
  if (kind == "surjection-theorem") {
    const SurjectionTheoremReport r = verify_surjection_theorem(x, y);
    Json j{{"verdict", !r.hypothesis_holds ? "n/a" : r.counterexample ? "counterexample" : "confirmed"},
           {"kind", kind},
           {"hypothesis", "alpha(X, t) <= alpha(Y, t) for all t"},
           {"surjections_checked", r.surjections_checked}};
    Json witnesses = Json::object();
    if (r.hypothesis_fails_at) witnesses["hypothesis_fails_at"] = r.hypothesis_fails_at->str();
    if (r.counterexample) witnesses["surjection"] = map_witness(*r.counterexample);
    j["witnesses"] = std::move(witnesses);
    return j;
  }
  const SComparisonReport r = verify_s_comparison_plasticity(x, y);
  Json j{{"verdict", !r.hypothesis_holds ? "n/a" : r.passed() ? "confirmed" : "counterexample"},
         {"kind", kind},
         {"hypothesis", "s(X, t) >= s(Y, t) for all t"}};
  Json witnesses = Json::object();
  if (r.hypothesis_fails_at) witnesses["hypothesis_fails_at"] = r.hypothesis_fails_at->str();
  if (r.plasticity) {
    j["maps_checked"] = r.plasticity->maps_checked;
    if (r.plasticity->counterexample) witnesses["expansion"] = map_witness(*r.plasticity->counterexample);
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json not_applicable(const std::string& reason) { return Json{{"verdict", "n/a"}, {"reason", reason}}; }

Json cmd_bounds(const std::string& px, const std::string& py, std::optional<std::int64_t> n_opt,
                const std::string& eps_text, const RunConfig& cfg) {
  const Rational eps = parse_eps(eps_text);
  std::optional<FiniteMetricSpace> x;
  std::optional<FiniteMetricSpace> y;
  if (!px.empty()) {
    x = load(px);
    limit_points(*x, cfg, px);
  }
  if (!py.empty()) {
    if (!x) usage("--other needs --space");
    y = load(py);
    limit_points(*y, cfg, py);
  }
  if (!n_opt && !x) usage("bounds needs --n or --space");
  const std::int64_t n = n_opt ? *n_opt : static_cast<std::int64_t>(x->size());
  if (x && n_opt && *n_opt != static_cast<std::int64_t>(x->size())) {
    usage("--n " + std::to_string(*n_opt) + " disagrees with the space size " + std::to_string(x->size()));
  }
  if (n < 2) usage("N must be at least 2");

  Json bounds = Json::object();
  const std::int64_t m = m_of_n(n);
  if (n >= 3) {
    bounds["pair_sum"] = bound_pair_sum(n, eps).str();
  } else {
    bounds["pair_sum"] = not_applicable("N(N-1)/2 - 1 = 0 for N = 2");
  }
  if (m > 1) {
    bounds["orbit"] = bound_orbit(n, eps).str();
  } else {
    bounds["orbit"] = not_applicable("M(N) = 1");
  }
  if (x) {
    bounds["nitka"] = nitka_bound(*x, eps).str();
    const FiniteMetricSpace& target = y ? *y : *x;
    bounds["lemma_certificate"] = io::to_json(certify_separated_delta(*x, target, eps));
    bounds["theorem_certificate"] = io::to_json(certify_plasticity_delta(*x, target, eps));
  }
  return Json{{"verdict", "ok"}, {"eps", eps.str()}, {"N", n}, {"bounds", std::move(bounds)},
              {"witnesses", Json{{"M", m}}}};
}

struct GenerateArgs {
  std::string recipe_path;
  std::string kind;
  std::string n;
  std::string eps;
  std::string a;
  std::string m;
  std::string step;
  std::string t;
  std::string samples;
  std::string precision;
  std::string out_dir;
};

std::int64_t parse_int(const std::string& text, const std::string& name) {
  const Rational r = parse_param(text, name);
  if (!r.is_integer() || !r.numerator().fits_slong_p()) usage("--" + name + " must be an integer, got " + text);
  return r.numerator().get_si();
}

GeneratorRecipe recipe_from_flags(const GenerateArgs& g, const RunConfig& cfg, bool seed_given) {
  if (!g.recipe_path.empty()) {
    if (!g.kind.empty()) usage("give either --recipe or --kind, not both");
    try {
      return io::recipe_from_json(io::read_json_file(g.recipe_path));
    } catch (const io::FormatError& e) {
      throw Stop{kExitInput, error_report(e.what(), g.recipe_path), g.recipe_path + ": " + e.what()};
    }
  }
  if (g.kind.empty()) usage("generate needs --recipe or --kind");
  const auto kind = parse_recipe_kind(g.kind);
  if (!kind) usage("unknown --kind " + g.kind);
  GeneratorRecipe r;
  r.kind = *kind;
  if (!g.n.empty()) r.n = parse_int(g.n, "n");
  if (!g.eps.empty()) r.eps = parse_param(g.eps, "eps");
  if (!g.a.empty()) r.a = parse_param(g.a, "a");
  if (!g.m.empty()) r.m = static_cast<int>(parse_int(g.m, "m"));
  if (!g.step.empty()) r.step = parse_param(g.step, "step");
  if (!g.t.empty()) r.t = parse_param(g.t, "t");
  if (!g.samples.empty()) r.samples = static_cast<int>(parse_int(g.samples, "samples"));
  if (!g.precision.empty()) r.precision = static_cast<int>(parse_int(g.precision, "precision"));
  if (seed_given) r.seed = cfg.seed;
  return r;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Stop{kExitInput, error_report("cannot write " + path.string()), "cannot write " + path.string()};
  out << text;
}

Json cmd_generate(const GenerateArgs& g, const RunConfig& cfg, bool seed_given) {
  const GeneratorRecipe recipe = recipe_from_flags(g, cfg, seed_given);
  GeneratedArtifact art;
  try {
    art = generate(recipe);
  } catch (const std::invalid_argument& e) {
    usage(e.what());
  }

  const auto space_name = [&](const FiniteMetricSpace& s) {
    for (const auto& [name, space] : art.spaces) {
      if (space == s) return name;
    }
    return std::string("?");
  };

  Json report{{"verdict", "ok"}, {"recipe", io::to_json(recipe)}};
  Json witnesses = Json::object();
  for (const auto& [name, f] : art.maps) {
    Json w = map_witness(f);
    w["domain"] = space_name(f.domain());
    w["codomain"] = space_name(f.codomain());
    witnesses[name] = std::move(w);
  }
  if (art.hilbert) {
    report["all_noncontractive"] = art.hilbert->all_noncontractive;
    report["pairs_checked"] = art.hilbert->pairs.size();
    witnesses["expansion_pair"] = io::to_json(*art.hilbert).at("witness");
  }

  if (g.out_dir.empty()) {
    Json spaces = Json::object();
    for (const auto& [name, space] : art.spaces) spaces[name] = io::to_json(space);
    if (!art.spaces.empty()) report["spaces"] = std::move(spaces);
    if (art.hilbert) report["hilbert"] = io::to_json(*art.hilbert);
  } else {
    const fs::path dir(g.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Stop{kExitInput, error_report("cannot create " + dir.string()), "cannot create " + dir.string()};
    Json files = Json::array();
    const auto put = [&](const std::string& file, const Json& content) {
      write_file(dir / file, io::dump(content));
      files.push_back(file);
    };
    put("recipe.json", io::to_json(recipe));
    for (const auto& [name, space] : art.spaces) put(name + ".json", io::to_json(space));
    for (const auto& [name, f] : art.maps) {
      Json j{{"domain", space_name(f.domain()) + ".json"}, {"codomain", space_name(f.codomain()) + ".json"}};
      j.update(io::to_json(f));
      put(name + ".map.json", j);
    }
    if (art.hilbert) put("hilbert.json", io::to_json(*art.hilbert));
    report["files"] = std::move(files);
  }
  report["witnesses"] = std::move(witnesses);
  return report;
}

struct VerifyArgs {
  std::size_t instances = 50;
  std::size_t points = 4;
};

Json cmd_verify_all(const VerifyArgs& v, const RunConfig& cfg, int& code) {
  if (v.points < 3 || v.points > 5) usage("--points must be between 3 and 5");
  if (v.instances == 0) usage("--instances must be positive");
  const std::uint64_t s = cfg.seed;
  const std::size_t few = std::max<std::size_t>(1, v.instances * 2 / 5);
  std::vector<SuiteResult> results;

  SuiteResult orbit{"orbit length formula"};
  for (std::int64_t n = 2; n <= 300; ++n) {
    ++orbit.checks;
    if (m_of_n(n) != m_bruteforce(n)) {
      orbit.passed = false;
      orbit.failure = Json{{"N", n}, {"closed_form", m_of_n(n)}, {"brute_force", m_bruteforce(n)}};
      break;
    }
  }
  orbit.instances = orbit.attempts = static_cast<std::size_t>(orbit.checks);
  results.push_back(std::move(orbit));

  results.push_back(suite_pair_sum_bound(s, 2 * v.instances, v.points));
  results.push_back(suite_nitka_bound(s + 1, v.instances, v.points));
  results.push_back(suite_proper_measurements(s + 2, std::min<std::size_t>(30, v.instances), v.points));
  results.push_back(suite_s_comparison(s + 3, v.instances, v.points));
  results.push_back(suite_surjection_rigidity(s + 4, v.instances, v.points));
  results.push_back(suite_lemma_certificate(s + 5, few, v.points, std::min<std::size_t>(5, v.points + 1)));
  results.push_back(suite_theorem_certificate(s + 6, few, v.points, std::min<std::size_t>(5, v.points + 1)));

  bool all = true;
  Json suites = Json::array();
  Json witnesses = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    suites.push_back(r.to_json());
    if (!r.passed) witnesses.push_back(Json{{"suite", r.name}, {"failure", r.failure}});
  }
  code = all ? kExitOk : kExitFailed;
  return Json{{"verdict", all ? "pass" : "fail"},
              {"seed", s},
              {"instances", v.instances},
              {"points", v.points},
              {"suites", std::move(suites)},
              {"witnesses", std::move(witnesses)}};
}

void emit(std::ostream& out, const Json& report, const std::string& format) {
  out << (format == "text" ? io::render_text(report) : io::dump(report));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite metric spaces: separation profiles, plasticity moduli and bounds"};
  app.name("plastic");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--workers", cfg.workers, "Worker threads for the modulus search")->check(CLI::Range(1u, 256u));
  CLI::Option* seed_opt = app.add_option("--seed", cfg.seed, "Seed for random instances");
  app.add_option("--max-size", cfg.max_size, "Largest space accepted for separation searches")
      ->check(CLI::Range(std::size_t{1}, kMaxSearchPoints));
  app.add_option("--max-maps", cfg.max_maps, "Largest map enumeration accepted");

  std::string px;
  std::string py;
  std::string eps;
  std::string map_class = "Bijections";
  std::string kind;

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check the metric axioms of a space file");
  validate_cmd->add_option("space", px, "Space file")->required();

  CLI::App* profile_cmd = app.add_subcommand("profile", "Separation profile of a space");
  profile_cmd->add_option("space", px, "Space file")->required();

  CLI::App* modulus_cmd = app.add_subcommand("modulus", "Exact plasticity modulus of a pair at eps");
  modulus_cmd->add_option("x", px, "Domain space file")->required();
  modulus_cmd->add_option("y", py, "Codomain space file")->required();
  modulus_cmd->add_option("--eps", eps, "Expansion level (rational)")->required();
  modulus_cmd->add_option("--class", map_class, "Bijections or AllMaps");

  CLI::App* check_cmd = app.add_subcommand("check", "Plasticity checks and finite theorem instances");
  check_cmd->add_option("kind", kind, "ec | strong | surjection-theorem | s-comparison")
      ->required()
      ->check(CLI::IsMember({"ec", "strong", "surjection-theorem", "s-comparison"}));
  check_cmd->add_option("x", px, "Domain space file")->required();
  check_cmd->add_option("y", py, "Codomain space file")->required();

  std::optional<std::int64_t> bound_n;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on the modulus and certified deltas");
  bounds_cmd->add_option("--space", px, "Space file X");
  bounds_cmd->add_option("--other", py, "Codomain Y for certificates (default X)");
  bounds_cmd->add_option("--n", bound_n, "Cardinality N");
  bounds_cmd->add_option("--eps", eps, "Expansion level (rational)")->required();

  GenerateArgs gen;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Build a construction from a recipe");
  generate_cmd->add_option("--recipe", gen.recipe_path, "Recipe JSON file");
  generate_cmd->add_option("--kind", gen.kind, "Recipe kind");
  generate_cmd->add_option("--n", gen.n, "N for the sharp families");
  generate_cmd->add_option("--eps", gen.eps, "eps for the sharp families");
  generate_cmd->add_option("--a", gen.a, "Base distance for the sharp families");
  generate_cmd->add_option("--m", gen.m, "Number of pieces for the union truncation");
  generate_cmd->add_option("--step", gen.step, "Grid step 1/K");
  generate_cmd->add_option("--t", gen.t, "Scale t in (0, 1)");
  generate_cmd->add_option("--samples", gen.samples, "Sample vectors for the shift demo");
  generate_cmd->add_option("--precision", gen.precision, "Decimal digits for the shift demo");
  generate_cmd->add_option("--out", gen.out_dir, "Directory for the generated files");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify-all", "Run every seeded property suite");
  verify_cmd->add_option("--instances", verify.instances, "Instances per suite");
  verify_cmd->add_option("--points", verify.points, "Points per random space (3 to 5)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int code = kExitOk;
  Json report;
  try {
    if (validate_cmd->parsed()) {
      report = cmd_validate(px);
    } else if (profile_cmd->parsed()) {
      report = cmd_profile(px, cfg);
    } else if (modulus_cmd->parsed()) {
      report = cmd_modulus(px, py, eps, map_class, cfg);
    } else if (check_cmd->parsed()) {
      report = cmd_check(kind, px, py, cfg);
      if (report["verdict"] == "counterexample") code = kExitFailed;
    } else if (bounds_cmd->parsed()) {
      report = cmd_bounds(px, py, bound_n, eps, cfg);
    } else if (generate_cmd->parsed()) {
      report = cmd_generate(gen, cfg, seed_opt->count() > 0);
    } else if (verify_cmd->parsed()) {
      report = cmd_verify_all(verify, cfg, code);
    }
  } catch (const Stop& stop) {
    emit(out, stop.report, cfg.format);
    err << "plastic: " << stop.message << '\n';
    return stop.code;
  } catch (const std::exception& e) {
    emit(out, error_report(e.what()), cfg.format);
    err << "plastic: " << e.what() << '\n';
    return kExitInput;
  }
  emit(out, report, cfg.format);
  return code;
}

}  // namespace plastic::cli
