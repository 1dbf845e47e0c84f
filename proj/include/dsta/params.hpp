#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dsta {

enum class Mode {
  Simple,   // greedy criterion only
  Dynamic,  // greedy criterion plus risk (p2) and restore (p1)
};

enum class OperatorKind { Swap, Shift, Symmetry, Substitute };

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(OperatorKind kind) noexcept;
// Accepts "sta"/"simple" and "dsta"/"dynamic". Throws InvalidParams.
Mode parse_mode(std::string_view text);
OperatorKind parse_operator(std::string_view text);

inline constexpr double kDefaultRestoreProbability = 0.1459;
inline constexpr double kDefaultRiskProbability = 0.0557;

struct StaParams {
  int search_enforcement = 32;  // candidates sampled per operator round
  int swap_factor = 2;          // max positions exchanged, >= 2
  int shift_factor = 1;         // max segment length moved, >= 1
  int symmetry_factor = 0;      // max center length of a reversal, >= 0
  int substitute_factor = 1;    // max positions substituted, >= 1
  double restore_probability = kDefaultRestoreProbability;  // p1
  double risk_probability = kDefaultRiskProbability;        // p2
  int max_iterations = 1500;
  Mode mode = Mode::Dynamic;
  std::uint64_t seed = 1;
  std::vector<OperatorKind> operators = {OperatorKind::Swap, OperatorKind::Shift,
                                         OperatorKind::Symmetry,
                                         OperatorKind::Substitute};

  // Throws InvalidParams naming the first violated bound.
  void validate() const;

  friend bool operator==(const StaParams&, const StaParams&) = default;
};

}  // namespace dsta
