#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "dsta/errors.hpp"
#include "dsta/instance_io.hpp"

namespace dsta {

namespace {

constexpr std::size_t kMaxDimension = 1'000'000;
constexpr std::size_t kMaxMatrixDimension = 20'000;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_number(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

bool is_numeric_line(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.empty()) return false;
  double ignored = 0.0;
  return parse_number(tokens.front(), ignored);
}

class Parser {
 public:
  explicit Parser(std::istream& in) : in_(in) {}

  TsplibDocument parse() {
    std::string line;
    while (next_line(line)) {
      const std::string_view text = trim(line);
      if (text.empty()) continue;
      if (text == "EOF") break;
      const auto colon = text.find(':');
      const std::string_view key = trim(text.substr(0, colon));
      const std::string_view value =
          colon == std::string_view::npos ? std::string_view{} : trim(text.substr(colon + 1));
      handle(key, value);
    }
    finish();
    return std::move(doc_);
  }

 private:
  bool next_line(std::string& line) {
    if (!pending_.empty()) {
      line = std::move(pending_);
      pending_.clear();
      return true;
    }
    if (!std::getline(in_, line)) return false;
    ++line_;
    return true;
  }

  void push_back(std::string line) { pending_ = std::move(line); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  void handle(std::string_view key, std::string_view value) {
    if (key == "NAME") {
      doc_.name = std::string(value);
    } else if (key == "COMMENT") {
      if (!doc_.comment.empty()) doc_.comment += '\n';
      doc_.comment += std::string(value);
    } else if (key == "TYPE") {
      const auto tokens = split_ws(value);
      if (tokens.empty()) fail("TYPE has no value");
      if (tokens.front() != "TSP") {
        throw UnsupportedType("TSPLIB type '" + std::string(value) +
                              "' is not supported (only symmetric TSP)");
      }
      saw_type_ = true;
    } else if (key == "DIMENSION") {
      double d = 0.0;
      if (!parse_number(value, d) || d < 1 || d != std::floor(d)) {
        fail("DIMENSION must be a positive integer, got '" + std::string(value) + "'");
      }
      if (d > static_cast<double>(kMaxDimension)) fail("DIMENSION is too large");
      doc_.dimension = static_cast<std::size_t>(d);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value == "EUC_2D") {
        doc_.edge_weight_type = EdgeWeightType::Euc2D;
      } else if (value == "GEO") {
        doc_.edge_weight_type = EdgeWeightType::Geo;
      } else if (value == "EXPLICIT") {
        doc_.edge_weight_type = EdgeWeightType::Explicit;
      } else {
        throw UnsupportedType("EDGE_WEIGHT_TYPE '" + std::string(value) + "' is not supported");
      }
      saw_weight_type_ = true;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value == "FULL_MATRIX") {
        doc_.edge_weight_format = EdgeWeightFormat::FullMatrix;
      } else if (value == "LOWER_DIAG_ROW") {
        doc_.edge_weight_format = EdgeWeightFormat::LowerDiagRow;
      } else if (value == "UPPER_ROW") {
        doc_.edge_weight_format = EdgeWeightFormat::UpperRow;
      } else if (value == "FUNCTION") {
        // Used by coordinate-based files; carries no payload.
      } else {
        throw UnsupportedType("EDGE_WEIGHT_FORMAT '" + std::string(value) + "' is not supported");
      }
    } else if (key == "NODE_COORD_SECTION") {
      read_coordinates();
    } else if (key == "EDGE_WEIGHT_SECTION") {
      read_edge_weights();
    } else if (key == "DISPLAY_DATA_SECTION") {
      skip_numeric_lines();
    } else if (key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
      // Informational.
    } else {
      doc_.warnings.push_back("line " + std::to_string(line_) + ": ignoring unknown keyword '" +
                              std::string(key) + "'");
      if (key.ends_with("_SECTION")) skip_numeric_lines();
    }
  }

  void require_dimension(const char* section) const {
    if (doc_.dimension == 0) fail(std::string(section) + " before DIMENSION");
  }

  void read_coordinates() {
    require_dimension("NODE_COORD_SECTION");
    if (!doc_.coordinates.empty()) fail("duplicate NODE_COORD_SECTION");
    const std::size_t n = doc_.dimension;
    std::vector<Point> points;
    std::vector<bool> seen;
    std::string line;
    std::size_t rows = 0;
    while (next_line(line)) {
      const std::string_view text = trim(line);
      if (text.empty()) continue;
      if (!is_numeric_line(text)) {
        push_back(line);
        break;
      }
      const auto tokens = split_ws(text);
      if (tokens.size() != 3) fail("coordinate row needs 'index x y'");
      double index = 0.0, x = 0.0, y = 0.0;
      if (!parse_number(tokens[0], index) || !parse_number(tokens[1], x) ||
          !parse_number(tokens[2], y)) {
        fail("malformed coordinate row");
      }
      ++rows;
      if (rows > n) fail("more coordinate rows than DIMENSION " + std::to_string(n));
      if (index < 1 || index > static_cast<double>(n) || index != std::floor(index)) {
        fail("node index out of range 1.." + std::to_string(n));
      }
      if (points.empty()) {
        points.resize(n);
        seen.assign(n, false);
      }
      const auto i = static_cast<std::size_t>(index) - 1;
      if (seen[i]) fail("node " + std::to_string(i + 1) + " listed twice");
      seen[i] = true;
      points[i] = {x, y};
    }
    if (rows != n) {
      fail("DIMENSION is " + std::to_string(n) + " but NODE_COORD_SECTION has " +
           std::to_string(rows) + " rows");
    }
    doc_.coordinates = std::move(points);
  }

  std::size_t expected_weights() const {
    const std::size_t n = doc_.dimension;
    if (!doc_.edge_weight_format) fail("EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT");
    switch (*doc_.edge_weight_format) {
      case EdgeWeightFormat::FullMatrix:
        return n * n;
      case EdgeWeightFormat::LowerDiagRow:
        return n * (n + 1) / 2;
      case EdgeWeightFormat::UpperRow:
        return n * (n - 1) / 2;
    }
    return 0;
  }

  void read_edge_weights() {
    require_dimension("EDGE_WEIGHT_SECTION");
    if (doc_.dimension > kMaxMatrixDimension) fail("DIMENSION too large for an explicit matrix");
    if (!doc_.edge_weights.empty()) fail("duplicate EDGE_WEIGHT_SECTION");
    const std::size_t expected = expected_weights();
    std::vector<double> weights;
    std::string line;
    while (weights.size() < expected && next_line(line)) {
      const std::string_view text = trim(line);
      if (text.empty()) continue;
      if (!is_numeric_line(text)) {
        fail("EDGE_WEIGHT_SECTION has " + std::to_string(weights.size()) + " values, expected " +
             std::to_string(expected));
      }
      for (auto token : split_ws(text)) {
        double w = 0.0;
        if (!parse_number(token, w)) fail("malformed edge weight '" + std::string(token) + "'");
        if (weights.size() == expected) fail("more edge weights than DIMENSION implies");
        weights.push_back(w);
      }
    }
    if (weights.size() != expected) {
      fail("EDGE_WEIGHT_SECTION has " + std::to_string(weights.size()) + " values, expected " +
           std::to_string(expected));
    }
    doc_.edge_weights = std::move(weights);
  }

  void skip_numeric_lines() {
    std::string line;
    while (next_line(line)) {
      const std::string_view text = trim(line);
      if (text.empty()) continue;
      if (!is_numeric_line(text)) {
        push_back(line);
        return;
      }
    }
  }

  void finish() {
    if (!saw_type_) fail("missing TYPE");
    require_dimension("end of file");
    if (!saw_weight_type_) fail("missing EDGE_WEIGHT_TYPE");
    const bool is_explicit = doc_.edge_weight_type == EdgeWeightType::Explicit;
    if (is_explicit) {
      if (doc_.edge_weights.empty()) fail("EXPLICIT instance without EDGE_WEIGHT_SECTION");
      if (!doc_.coordinates.empty()) fail("EXPLICIT instance with NODE_COORD_SECTION");
    } else {
      if (doc_.coordinates.empty()) fail("missing NODE_COORD_SECTION");
      if (!doc_.edge_weights.empty()) fail("EDGE_WEIGHT_SECTION in a coordinate instance");
    }
  }

  std::istream& in_;
  TsplibDocument doc_;
  std::size_t line_ = 0;
  std::string pending_;
  bool saw_type_ = false;
  bool saw_weight_type_ = false;
};

// TSPLIB95 degree-minute to radians. Degrees are truncated toward zero, as in
// the reference implementations the published optima were computed with.
double to_radians(double ddd_mm) {
  constexpr double kPi = 3.141592;
  const double degrees = std::trunc(ddd_mm);
  const double minutes = ddd_mm - degrees;
  return kPi * (degrees + 5.0 * minutes / 3.0) / 180.0;
}

}  // namespace

std::string_view to_string(EdgeWeightType type) noexcept {
  switch (type) {
    case EdgeWeightType::Euc2D:
      return "EUC_2D";
    case EdgeWeightType::Geo:
      return "GEO";
    case EdgeWeightType::Explicit:
      return "EXPLICIT";
  }
  return "?";
}

std::string_view to_string(Rounding rounding) noexcept {
  return rounding == Rounding::RealValued ? "real" : "tsplib";
}

Rounding parse_rounding(std::string_view text) {
  if (text == "real") return Rounding::RealValued;
  if (text == "tsplib") return Rounding::TsplibInteger;
  throw InvalidParams("unknown rounding '" + std::string(text) + "' (expected real or tsplib)");
}

TsplibDocument parse_tsplib(std::istream& in) { return Parser(in).parse(); }

TsplibDocument parse_tsplib(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tsplib(in);
}

TsplibDocument load_tsplib(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_tsplib(in);
}

double geo_distance(const Point& a, const Point& b) {
  constexpr double kEarthRadius = 6378.388;
  const double lat_a = to_radians(a.x), lon_a = to_radians(a.y);
  const double lat_b = to_radians(b.x), lon_b = to_radians(b.y);
  const double q1 = std::cos(lon_a - lon_b);
  const double q2 = std::cos(lat_a - lat_b);
  const double q3 = std::cos(lat_a + lat_b);
  const double arg = std::clamp(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3), -1.0, 1.0);
  return kEarthRadius * std::acos(arg);
}

double euclidean_distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

TspInstance build_distances(const TsplibDocument& doc, Rounding rounding) {
  const std::size_t n = doc.dimension;
  if (n > kMaxMatrixDimension) {
    throw InvalidSize("instance with " + std::to_string(n) + " cities is too large for a dense matrix");
  }
  std::vector<double> d(n * n, 0.0);
  switch (doc.edge_weight_type) {
    case EdgeWeightType::Euc2D:
    case EdgeWeightType::Geo: {
      if (doc.coordinates.size() != n) throw UnsupportedType("coordinate instance without coordinates");
      const bool geo = doc.edge_weight_type == EdgeWeightType::Geo;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Point& a = doc.coordinates[i];
          const Point& b = doc.coordinates[j];
          double w = geo ? geo_distance(a, b) : euclidean_distance(a, b);
          if (rounding == Rounding::TsplibInteger) w = geo ? std::floor(w + 1.0) : std::floor(w + 0.5);
          d[i * n + j] = d[j * n + i] = w;
        }
      }
      return TspInstance(doc.name, n, std::move(d), doc.coordinates);
    }
    case EdgeWeightType::Explicit: {
      if (!doc.edge_weight_format) throw UnsupportedType("EXPLICIT instance without a weight format");
      const auto& w = doc.edge_weights;
      std::size_t k = 0;
      switch (*doc.edge_weight_format) {
        case EdgeWeightFormat::FullMatrix:
          if (w.size() != n * n) throw UnsupportedType("FULL_MATRIX payload has the wrong size");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if (i != j && w[i * n + j] != w[j * n + i]) {
                throw UnsupportedType("asymmetric matrix (ATSP) is not supported");
              }
              d[i * n + j] = i == j ? 0.0 : w[i * n + j];
            }
          }
          break;
        case EdgeWeightFormat::LowerDiagRow:
          if (w.size() != n * (n + 1) / 2) throw UnsupportedType("LOWER_DIAG_ROW payload has the wrong size");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j, ++k) {
              if (i != j) d[i * n + j] = d[j * n + i] = w[k];
            }
          }
          break;
        case EdgeWeightFormat::UpperRow:
          if (w.size() != n * (n - 1) / 2) throw UnsupportedType("UPPER_ROW payload has the wrong size");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++k) d[i * n + j] = d[j * n + i] = w[k];
          }
          break;
      }
      for (double x : d) {
        if (x < 0.0) throw UnsupportedType("negative edge weight");
      }
      return TspInstance(doc.name, n, std::move(d));
    }
  }
  throw UnsupportedType("unsupported edge weight type");
}

MaxCutInstance maxcut_from_tsp(const TspInstance& instance) {
  const auto m = instance.matrix();
  return MaxCutInstance(instance.name(), instance.size(), std::vector<double>(m.begin(), m.end()));
}

}  // namespace dsta
