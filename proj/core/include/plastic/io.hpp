#pragma once

// JSON encoding of spaces, maps, profiles, reports and recipes. Rationals are
// written as canonical strings ("p/q", or "p" for integers).

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "plastic/bounds.hpp"
#include "plastic/constructions.hpp"
#include "plastic/hilbert.hpp"
#include "plastic/metric_space.hpp"
#include "plastic/point_map.hpp"
#include "plastic/search.hpp"
#include "plastic/separation.hpp"

namespace plastic::io {

using Json = nlohmann::ordered_json;

/// Malformed input; `where` names the offending field, e.g. "dist[2][0]".
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

[[nodiscard]] Json to_json(const Rational& r);
/// Accepts a rational string or a JSON integer.
[[nodiscard]] Rational rational_from_json(const Json& j, const std::string& where);

/// { "labels": [...], "dist": [[...]...] }. Throws FormatError for shape
/// problems and InvalidSpace when the matrix is not a metric.
[[nodiscard]] SpaceData space_data_from_json(const Json& j);
[[nodiscard]] FiniteMetricSpace space_from_json(const Json& j);
[[nodiscard]] Json to_json(const FiniteMetricSpace& space);

/// Reads a JSON file; FormatError carries the path for syntax errors.
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
[[nodiscard]] FiniteMetricSpace load_space(const std::filesystem::path& path);

/// { "table": [codomain label per domain point, in domain order] } plus the
/// explicit pairs { "from": label, "to": label }.
[[nodiscard]] Json to_json(const PointMap& f);
[[nodiscard]] PointMap map_from_json(const Json& j, const FiniteMetricSpace& x, const FiniteMetricSpace& y);

[[nodiscard]] Json pair_json(const FiniteMetricSpace& space, const IndexPair& p);
[[nodiscard]] Json subset_json(const FiniteMetricSpace& space, std::span<const Index> subset);

[[nodiscard]] Json to_json(const ValidationReport& report, const SpaceData& data);
[[nodiscard]] Json to_json(const SeparationProfile& profile);
[[nodiscard]] Json to_json(const ModulusReport& report, const FiniteMetricSpace& x);
[[nodiscard]] Json to_json(const CertifiedDelta& certificate);
[[nodiscard]] Json to_json(const HilbertShiftReport& report);

[[nodiscard]] Json to_json(const GeneratorRecipe& recipe);
[[nodiscard]] GeneratorRecipe recipe_from_json(const Json& j);

/// Canonical serialization: two-space indent and a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

/// Indented "key: value" rendering of a report.
[[nodiscard]] std::string render_text(const Json& j);

}  // namespace plastic::io
