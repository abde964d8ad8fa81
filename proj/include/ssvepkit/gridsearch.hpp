#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssvepkit/config.hpp"
#include "ssvepkit/metrics.hpp"
#include "ssvepkit/pipeline.hpp"

namespace ssvep {

struct GridPoint {
  std::vector<double> values;  // one per axis, axis order of the spec
  std::optional<double> pooled_itr;
  double pooled_accuracy{0.0};
  std::optional<double> pooled_mrt_s;
};

struct GridResult {
  std::vector<std::string> keys;
  std::vector<GridPoint> table;  // full grid, enumeration order
  std::size_t best_index{0};
  ExperimentConfig best_config;
};

// Exhaustive search over the config's grid axes; objective is pooled ITR
// under leave-one-out cross-validation. Ties break toward shorter segment
// length, then lower lambda, then enumeration order.
GridResult grid_search(const Dataset& ds, const ExperimentConfig& base,
                       std::size_t jobs = 1);

}  // namespace ssvep
