#include "dsta/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsta/errors.hpp"

namespace dsta {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Simple ? "sta" : "dsta";
}

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::Swap:
      return "swap";
    case OperatorKind::Shift:
      return "shift";
    case OperatorKind::Symmetry:
      return "symmetry";
    case OperatorKind::Substitute:
      return "substitute";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "sta" || text == "simple") return Mode::Simple;
  if (text == "dsta" || text == "dynamic") return Mode::Dynamic;
  throw InvalidParams("unknown mode '" + std::string(text) + "' (expected sta or dsta)");
}

OperatorKind parse_operator(std::string_view text) {
  for (auto kind : {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::Symmetry,
                    OperatorKind::Substitute}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidParams("unknown operator '" + std::string(text) + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

void StaParams::validate() const {
  require(search_enforcement >= 1, "se must be >= 1");
  require(swap_factor >= 2, "swap factor m_a must be >= 2");
  require(shift_factor >= 1, "shift factor m_b must be >= 1");
  require(symmetry_factor >= 0, "symmetry factor m_c must be >= 0");
  require(substitute_factor >= 1, "substitute factor m_d must be >= 1");
  require(is_probability(restore_probability), "p1 must lie in [0, 1]");
  require(is_probability(risk_probability), "p2 must lie in [0, 1]");
  require(max_iterations >= 1, "max iterations must be >= 1");
  require(!operators.empty(), "operator set must not be empty");
  for (auto it = operators.begin(); it != operators.end(); ++it) {
    require(std::find(operators.begin(), it, *it) == it,
            "operator '" + std::string(to_string(*it)) + "' listed twice");
  }
}

}  // namespace dsta
