#include "plastic/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace plastic::io {

namespace {

std::string at_index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::string field(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : where + "." + std::string(key);
}

const Json& require_field(const Json& j, std::string_view key, const std::string& where) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw FormatError(field(where, key), "missing field");
  return *it;
}

std::int64_t integer_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where, "expected an integer");
  return j.get<std::int64_t>();
}

Json label_or_index(const SpaceData& data, Index i) {
  if (i < data.labels.size()) return data.labels[i];
  return i;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw FormatError(where, "expected a rational string such as \"3/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(where, e.what());
  }
}

SpaceData space_data_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("", "space must be a JSON object with \"labels\" and \"dist\"");
  const Json& labels = require_field(j, "labels", "");
  if (!labels.is_array()) throw FormatError("labels", "expected an array of strings");
  SpaceData data;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw FormatError(at_index("labels", i), "expected a string");
    data.labels.push_back(labels[i].get<std::string>());
  }
  const Json& dist = require_field(j, "dist", "");
  if (!dist.is_array()) throw FormatError("dist", "expected an array of rows");
  for (std::size_t r = 0; r < dist.size(); ++r) {
    const std::string row_where = at_index("dist", r);
    if (!dist[r].is_array()) throw FormatError(row_where, "expected an array");
    std::vector<Rational> row;
    for (std::size_t c = 0; c < dist[r].size(); ++c) row.push_back(rational_from_json(dist[r][c], at_index(row_where, c)));
    data.dist.push_back(std::move(row));
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "labels" && key != "dist") throw FormatError(key, "unknown field");
  }
  return data;
}

FiniteMetricSpace space_from_json(const Json& j) { return FiniteMetricSpace::create(space_data_from_json(j)); }

Json to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (Index i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < space.size(); ++k) row.push_back(space.d(i, k).str());
    dist.push_back(std::move(row));
  }
  return Json{{"labels", space.labels()}, {"dist", std::move(dist)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string(), e.what());
  }
}

FiniteMetricSpace load_space(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return space_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.where(), e.what());
  }
}

Json to_json(const PointMap& f) {
  Json table = Json::array();
  Json pairs = Json::array();
  for (Index i = 0; i < f.domain().size(); ++i) {
    table.push_back(f.codomain().label(f(i)));
    pairs.push_back(Json{{"from", f.domain().label(i)}, {"to", f.codomain().label(f(i))}});
  }
  return Json{{"table", std::move(table)}, {"pairs", std::move(pairs)}};
}

PointMap map_from_json(const Json& j, const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (!j.is_object()) throw FormatError("", "map must be a JSON object with a \"table\"");
  const Json& table = require_field(j, "table", "");
  if (!table.is_array() || table.size() != x.size()) {
    throw FormatError("table", "expected " + std::to_string(x.size()) + " codomain labels");
  }
  std::vector<Index> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i].is_string()) throw FormatError(at_index("table", i), "expected a label");
    const auto idx = y.index_of(table[i].get<std::string>());
    if (!idx) throw FormatError(at_index("table", i), "unknown codomain label " + table[i].get<std::string>());
    out.push_back(*idx);
  }
  return PointMap(x, y, std::move(out));
}

Json pair_json(const FiniteMetricSpace& space, const IndexPair& p) {
  return Json::array({space.label(p.first), space.label(p.second)});
}

Json subset_json(const FiniteMetricSpace& space, std::span<const Index> subset) {
  Json out = Json::array();
  for (Index i : subset) out.push_back(space.label(i));
  return out;
}

Json to_json(const ValidationReport& report, const SpaceData& data) {
  Json witnesses = Json::array();
  for (Index i : report.witness) witnesses.push_back(label_or_index(data, i));
  return Json{{"verdict", report.ok() ? "valid" : "invalid"},
              {"axiom", to_string(report.violation)},
              {"message", report.message},
              {"size", data.labels.size()},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const SeparationProfile& profile) {
  Json breakpoints = Json::array();
  for (const auto& b : profile.breakpoints) breakpoints.push_back(b.str());
  Json samples = Json::array();
  for (const auto& s : profile.samples) {
    samples.push_back(Json{{"eps", s.eps.str()},
                           {"s", s.s.value.str()},
                           {"alpha", s.alpha.value.str()},
                           {"N", s.n_sep.count},
                           {"n", s.n_net.count}});
  }
  return Json{{"breakpoints", std::move(breakpoints)}, {"samples", std::move(samples)}};
}

Json to_json(const ModulusReport& report, const FiniteMetricSpace& x) {
  Json witnesses = Json::object();
  if (report.minimizing_map) witnesses["map"] = to_json(*report.minimizing_map);
  if (report.expansion_witness) witnesses["expansion_pair"] = pair_json(x, *report.expansion_witness);
  if (report.contraction_witness) witnesses["contraction_pair"] = pair_json(x, *report.contraction_witness);
  Json out{{"verdict", to_string(report.verdict)},
           {"eps", report.eps.str()},
           {"class", to_string(report.map_class)},
           {"value", report.value ? Json(report.value->str()) : Json(nullptr)},
           {"min_contraction", report.min_contraction ? Json(report.min_contraction->str()) : Json(nullptr)},
           {"witnesses", std::move(witnesses)}};
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json to_json(const CertifiedDelta& c) {
  Json out{{"applicable", c.applicable}, {"eps", c.eps.str()}};
  if (c.eps0) out["eps0"] = c.eps0->str();
  if (c.applicable) {
    out["delta"] = c.delta.str();
    out["nu"] = c.nu.str();
  }
  out["N"] = c.n_sep;
  out["s_x"] = c.s_x.str();
  out["s_y"] = c.s_y.str();
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

namespace {

Json interval_json(const CertifiedInterval& i) { return Json{{"lo", i.lo.str()}, {"hi", i.hi.str()}}; }

Json shift_pair_json(const ShiftPairResult& r) {
  return Json{{"before", r.before.str()},
              {"after", interval_json(r.after)},
              {"noncontractive", r.noncontractive},
              {"expanding", r.expanding}};
}

}  // namespace

Json to_json(const HilbertShiftReport& report) {
  Json pairs = Json::array();
  for (const auto& r : report.pairs) {
    Json p = shift_pair_json(r);
    p["first"] = r.first;
    p["second"] = r.second;
    pairs.push_back(std::move(p));
  }
  Json witness = shift_pair_json(report.witness);
  witness["x"] = "0";
  witness["y"] = "e1";
  return Json{{"precision", report.precision},
              {"all_noncontractive", report.all_noncontractive},
              {"witness", std::move(witness)},
              {"pairs", std::move(pairs)}};
}

Json to_json(const GeneratorRecipe& r) {
  Json out{{"kind", to_string(r.kind)}};
  switch (r.kind) {
    case RecipeKind::kSharpCase1:
    case RecipeKind::kPaddedSharp:
    case RecipeKind::kSharpCyclic:
      out["n"] = r.n;
      out["eps"] = r.eps.str();
      out["a"] = r.a.str();
      break;
    case RecipeKind::kNonuniformUnionTruncation: out["m"] = r.m; break;
    case RecipeKind::kIntervalPairGrid:
      out["step"] = r.step.str();
      out["t"] = r.t.str();
      break;
    case RecipeKind::kHilbertShiftSample:
      out["seed"] = r.seed;
      out["samples"] = r.samples;
      out["precision"] = r.precision;
      break;
  }
  return out;
}

GeneratorRecipe recipe_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("", "recipe must be a JSON object");
  const Json& kind = require_field(j, "kind", "");
  if (!kind.is_string()) throw FormatError("kind", "expected a string");
  const auto parsed = parse_recipe_kind(kind.get<std::string>());
  if (!parsed) throw FormatError("kind", "unknown recipe kind " + kind.get<std::string>());
  GeneratorRecipe r;
  r.kind = *parsed;
  // Keys a kind may carry; anything else is treated as a typo.
  std::set<std::string> allowed{"kind"};
  switch (r.kind) {
    case RecipeKind::kSharpCase1:
    case RecipeKind::kPaddedSharp:
    case RecipeKind::kSharpCyclic: allowed.insert({"n", "eps", "a"}); break;
    case RecipeKind::kNonuniformUnionTruncation: allowed.insert("m"); break;
    case RecipeKind::kIntervalPairGrid: allowed.insert({"step", "t"}); break;
    case RecipeKind::kHilbertShiftSample: allowed.insert({"seed", "samples", "precision"}); break;
  }
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw FormatError(key, "field not used by recipe kind " + std::string(to_string(r.kind)));
    if (key == "n") r.n = integer_from_json(value, key);
    if (key == "eps") r.eps = rational_from_json(value, key);
    if (key == "a") r.a = rational_from_json(value, key);
    if (key == "m") r.m = static_cast<int>(integer_from_json(value, key));
    if (key == "step") r.step = rational_from_json(value, key);
    if (key == "t") r.t = rational_from_json(value, key);
    if (key == "seed") {
      if (!value.is_number_unsigned()) throw FormatError(key, "expected a nonnegative integer");
      r.seed = value.get<std::uint64_t>();
    }
    if (key == "samples") r.samples = static_cast<int>(integer_from_json(value, key));
    if (key == "precision") r.precision = static_cast<int>(integer_from_json(value, key));
  }
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& e) { return e.is_primitive(); });
}

void render(std::ostringstream& out, const Json& j, int depth);

void render_value(std::ostringstream& out, const std::string& prefix, const Json& v, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  if (v.is_primitive()) {
    out << pad << prefix << scalar_text(v) << '\n';
  } else if (v.is_array() && all_scalars(v)) {
    out << pad << prefix << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else if (v.empty()) {
    out << pad << prefix << (v.is_array() ? "[]" : "{}") << '\n';
  } else {
    std::string head = prefix;
    while (!head.empty() && head.back() == ' ') head.pop_back();
    out << pad << head << '\n';
    render(out, v, depth + 1);
  }
}

void render(std::ostringstream& out, const Json& j, int depth) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_value(out, key + ": ", value, depth);
  } else if (j.is_array()) {
    for (const auto& item : j) render_value(out, "- ", item, depth);
  } else {
    render_value(out, "", j, depth);
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace plastic::io
