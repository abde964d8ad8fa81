#include "ssvepkit/decision.hpp"

#include "ssvepkit/error.hpp"

namespace ssvep {

std::optional<Decision> decide(const std::vector<std::size_t>& candidates,
                               const DecisionRule& rule) {
  if (rule.t_required == 0 || rule.window_t == 0 || rule.t_required > rule.window_t) {
    throw Error(ErrorCode::invalid_config, "decision rule needs 0 < t <= T");
  }
  // Only the current candidate can reach the threshold for the first time,
  // so checking it alone still finds the earliest firing of any class.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t lo = i + 1 >= rule.window_t ? i + 1 - rule.window_t : 0;
    std::size_t count = 0;
    for (std::size_t j = lo; j <= i; ++j) {
      if (candidates[j] == candidates[i]) ++count;
    }
    if (count >= rule.t_required) return Decision{candidates[i], i};
  }
  return std::nullopt;
}

}  // namespace ssvep
