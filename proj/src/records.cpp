#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dsta/errors.hpp"
#include "dsta/instance_io.hpp"

namespace dsta {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "dsta-results";
constexpr int kVersion = 1;
constexpr const char* kTraceHeader = "iteration,current_cost,incumbent_cost";

std::string algorithm_name(Mode mode) { return mode == Mode::Simple ? "STA" : "DSTA"; }

Mode parse_algorithm(const std::string& text) {
  if (text == "STA") return Mode::Simple;
  if (text == "DSTA") return Mode::Dynamic;
  throw InvalidParams("unknown algorithm '" + text + "'");
}

json params_to_json(const StaParams& p) {
  json ops = json::array();
  for (auto kind : p.operators) ops.push_back(std::string(to_string(kind)));
  return json{{"se", p.search_enforcement},
              {"ma", p.swap_factor},
              {"mb", p.shift_factor},
              {"mc", p.symmetry_factor},
              {"md", p.substitute_factor},
              {"p1", p.restore_probability},
              {"p2", p.risk_probability},
              {"iters", p.max_iterations},
              {"mode", std::string(to_string(p.mode))},
              {"seed", p.seed},
              {"operators", ops}};
}

StaParams params_from_json(const json& j) {
  StaParams p;
  p.search_enforcement = j.at("se").get<int>();
  p.swap_factor = j.at("ma").get<int>();
  p.shift_factor = j.at("mb").get<int>();
  p.symmetry_factor = j.at("mc").get<int>();
  p.substitute_factor = j.at("md").get<int>();
  p.restore_probability = j.at("p1").get<double>();
  p.risk_probability = j.at("p2").get<double>();
  p.max_iterations = j.at("iters").get<int>();
  p.mode = parse_mode(j.at("mode").get<std::string>());
  p.seed = j.at("seed").get<std::uint64_t>();
  p.operators.clear();
  for (const auto& op : j.at("operators")) p.operators.push_back(parse_operator(op.get<std::string>()));
  return p;
}

std::size_t emit(std::ostream& out, const std::string& text) {
  out << text;
  if (!out) throw IoError("write failed");
  return text.size();
}

bool parse_double(std::string_view token, double& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::size_t write_results(std::span<const ResultRecord> records, std::ostream& out) {
  std::size_t bytes = emit(out, json{{"format", kFormat}, {"version", kVersion}}.dump() + "\n");
  for (const auto& r : records) {
    json j{{"instance", r.instance},
           {"algorithm", algorithm_name(r.algorithm)},
           {"params", params_to_json(r.params)},
           {"trial_seed", r.trial_seed},
           {"best_cost", r.best_cost}};
    if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
    if (r.best_solution) j["best_solution"] = *r.best_solution;
    bytes += emit(out, j.dump() + "\n");
  }
  out.flush();
  return bytes;
}

std::vector<ResultRecord> read_results(std::istream& in) {
  std::vector<ResultRecord> records;
  std::string line;
  std::size_t line_number = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (!header) {
        if (j.value("format", "") != kFormat || j.value("version", 0) != kVersion) {
          throw ParseError(line_number, "missing results header");
        }
        header = true;
        continue;
      }
      ResultRecord r;
      r.instance = j.at("instance").get<std::string>();
      r.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
      r.params = params_from_json(j.at("params"));
      r.trial_seed = j.at("trial_seed").get<std::uint64_t>();
      r.best_cost = j.at("best_cost").get<double>();
      if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<double>();
      if (j.contains("best_solution")) r.best_solution = j["best_solution"].get<std::vector<int>>();
      records.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_number, e.what());
    }
  }
  if (!header) throw ParseError(line_number, "missing results header");
  return records;
}

std::size_t write_trace(std::span<const TraceEntry> trace, std::ostream& out) {
  std::string text = kTraceHeader;
  text += '\n';
  for (const auto& e : trace) {
    text += std::to_string(e.iteration);
    text += ',';
    text += format_double(e.current_cost);
    text += ',';
    text += format_double(e.incumbent_cost);
    text += '\n';
  }
  const std::size_t bytes = emit(out, text);
  out.flush();
  return bytes;
}

std::vector<TraceEntry> read_trace(std::istream& in) {
  std::vector<TraceEntry> trace;
  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw ParseError(1, "expected trace header '" + std::string(kTraceHeader) + "'");
  }
  ++line_number;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto a = line.find(',');
    const auto b = a == std::string::npos ? a : line.find(',', a + 1);
    if (b == std::string::npos) throw ParseError(line_number, "trace row needs 3 columns");
    TraceEntry e;
    double iteration = 0.0;
    const std::string_view view(line);
    if (!parse_double(view.substr(0, a), iteration) ||
        !parse_double(view.substr(a + 1, b - a - 1), e.current_cost) ||
        !parse_double(view.substr(b + 1), e.incumbent_cost)) {
      throw ParseError(line_number, "malformed trace row");
    }
    e.iteration = static_cast<int>(iteration);
    trace.push_back(e);
  }
  return trace;
}

}  // namespace dsta
