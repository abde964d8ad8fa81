#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ssvep {

// Fire when the same candidate occurs at least t_required times within the
// trailing window of window_t iterations.
struct DecisionRule {
  std::size_t t_required{3};
  std::size_t window_t{4};
};

struct Decision {
  std::size_t class_index{0};
  std::size_t candidate_index{0};  // position in the stream where the rule fired
};

// Scans the candidate stream in order and returns the earliest firing point,
// or nullopt for an unsuccessful recognition. The window is truncated at the
// start of the stream.
std::optional<Decision> decide(const std::vector<std::size_t>& candidates,
                               const DecisionRule& rule);

}  // namespace ssvep
