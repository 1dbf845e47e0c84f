#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsta/engine.hpp"
#include "dsta/params.hpp"
#include "dsta/problems.hpp"

namespace dsta {

// ---- TSPLIB ----------------------------------------------------------------

enum class EdgeWeightType { Euc2D, Geo, Explicit };
enum class EdgeWeightFormat { FullMatrix, LowerDiagRow, UpperRow };
enum class Rounding {
  RealValued,     // no rounding
  TsplibInteger,  // TSPLIB95 nint / GEO truncation conventions
};

std::string_view to_string(EdgeWeightType type) noexcept;
std::string_view to_string(Rounding rounding) noexcept;
Rounding parse_rounding(std::string_view text);

struct TsplibDocument {
  std::string name;
  std::string comment;
  std::size_t dimension = 0;
  EdgeWeightType edge_weight_type = EdgeWeightType::Euc2D;
  std::optional<EdgeWeightFormat> edge_weight_format;
  std::vector<Point> coordinates;     // iff edge_weight_type != Explicit
  std::vector<double> edge_weights;   // raw EDGE_WEIGHT_SECTION payload
  std::vector<std::string> warnings;  // unknown keywords and similar
};

// Accepts "KEY: value" / "KEY : value" headers, NODE_COORD_SECTION,
// EDGE_WEIGHT_SECTION, DISPLAY_DATA_SECTION (skipped) and an optional EOF.
// Throws ParseError (with a 1-based line) or UnsupportedType.
TsplibDocument parse_tsplib(std::istream& in);
TsplibDocument parse_tsplib(std::string_view text);
TsplibDocument load_tsplib(const std::string& path);

// TSPLIB95 geographic distance between (latitude, longitude) points given in
// DDD.MM degree-minute notation, earth radius 6378.388 km. Real-valued: the
// TSPLIB integer form is floor(geo_distance + 1).
double geo_distance(const Point& a, const Point& b);
double euclidean_distance(const Point& a, const Point& b);

// Full symmetric matrix. Throws UnsupportedType.
TspInstance build_distances(const TsplibDocument& doc, Rounding rounding);

// W := distance matrix; QUBO by fixing the last city's vertex.
MaxCutInstance maxcut_from_tsp(const TspInstance& instance);

// ---- Random instances ------------------------------------------------------

struct EuclideanTspSpec {
  std::size_t n;
};
struct WeightedGraphSpec {
  std::size_t vertices;
  double density;  // probability that an edge is present
};
struct DvsSpec {
  std::size_t n;
  std::size_t m;
};
using RandomSpec = std::variant<EuclideanTspSpec, WeightedGraphSpec, DvsSpec>;

// Deterministic in (spec, seed). Euclidean: coordinates uniform on the unit
// square, real-valued distances. Weighted graph: each edge present with
// probability `density`, weight uniform on [0, 1). DVS: m distinct sorted
// values uniform on [-1, 1) and the separable objective sum_i (x_i - t_i)^2
// with targets t_i uniform on [-1, 1).
// Throws InvalidSize.
ProblemInstance random_instance(const RandomSpec& spec, std::uint64_t seed);

// ---- Results and traces ----------------------------------------------------

// A self-contained record of one trial: re-running with `params` (whose seed
// is the trial seed) reproduces `best_cost`.
struct ResultRecord {
  std::string instance;
  Mode algorithm = Mode::Dynamic;
  StaParams params;
  std::uint64_t trial_seed = 0;
  double best_cost = 0.0;
  std::optional<double> wall_time_ms;
  std::optional<std::vector<int>> best_solution;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Line-delimited JSON. The first line is a header object
// {"format":"dsta-results","version":1}; each further line is one record with
// the fields instance, algorithm, params{se, ma, mb, mc, md, p1, p2, iters,
// mode, seed, operators}, trial_seed, best_cost and optionally wall_time_ms
// and best_solution. Returns bytes written; throws IoError.
std::size_t write_results(std::span<const ResultRecord> records, std::ostream& out);
// Throws ParseError.
std::vector<ResultRecord> read_results(std::istream& in);

// CSV with header "iteration,current_cost,incumbent_cost"; costs use the
// shortest round-trip decimal form. Returns bytes written; throws IoError.
std::size_t write_trace(std::span<const TraceEntry> trace, std::ostream& out);
// Throws ParseError.
std::vector<TraceEntry> read_trace(std::istream& in);

// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace dsta
