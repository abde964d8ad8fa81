#include "ssvepkit/gridsearch.hpp"

#include "ssvepkit/error.hpp"
#include "ssvepkit/parallel.hpp"

namespace ssvep {

namespace {

ExperimentConfig config_at(const ExperimentConfig& base, const GridSpec& grid,
                           const std::vector<double>& values) {
  ExperimentConfig cfg = base;
  for (std::size_t a = 0; a < grid.axes.size(); ++a) {
    apply_axis_value(cfg, grid.axes[a].key, values[a]);
  }
  return cfg;
}

}  // namespace

GridResult grid_search(const Dataset& ds, const ExperimentConfig& base,
                       std::size_t jobs) {
  const GridSpec& grid = base.grid;
  if (grid.axes.empty()) {
    throw Error(ErrorCode::invalid_config, "grid has no axes");
  }
  const std::size_t total = grid.total_points();

  GridResult result;
  for (const auto& axis : grid.axes) result.keys.push_back(axis.key);
  result.table.resize(total);

  // Enumerate the Cartesian product, last axis fastest.
  std::vector<std::vector<double>> points(total);
  for (std::size_t p = 0; p < total; ++p) {
    std::vector<double> values(grid.axes.size());
    std::size_t rem = p;
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      const auto& axis_values = grid.axes[a].values;
      values[a] = axis_values[rem % axis_values.size()];
      rem /= axis_values.size();
    }
    points[p] = std::move(values);
  }

  parallel_for(total, jobs, [&](std::size_t p) {
    const ExperimentConfig cfg = config_at(base, grid, points[p]);
    GridPoint& gp = result.table[p];
    gp.values = points[p];
    const auto outcomes = loo_cv(ds, cfg, 1);
    try {
      const EvalReport report = summarize(outcomes, ds.manifest.n_classes());
      gp.pooled_itr = report.pooled.itr_bits_per_min;
      gp.pooled_accuracy = report.pooled.accuracy;
      gp.pooled_mrt_s = report.pooled.mrt_s;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_decisions) throw;
      // No decision anywhere: keep accuracy, leave ITR/MRT empty.
      std::size_t correct = 0;
      for (const auto& o : outcomes) {
        if (o.correct()) ++correct;
      }
      gp.pooled_accuracy =
          outcomes.empty() ? 0.0 : static_cast<double>(correct) / outcomes.size();
    }
  });

  // Objective: pooled ITR; a missing ITR loses to any present one.
  auto better = [&](std::size_t a, std::size_t b) {
    const auto& ga = result.table[a];
    const auto& gb = result.table[b];
    const double ia = ga.pooled_itr.value_or(-1.0);
    const double ib = gb.pooled_itr.value_or(-1.0);
    if (ia != ib) return ia > ib;
    // Tie-breaks: shorter segment length, then lower lambda, then order.
    const ExperimentConfig ca = config_at(base, grid, result.table[a].values);
    const ExperimentConfig cb = config_at(base, grid, result.table[b].values);
    if (ca.segment.length_s != cb.segment.length_s) {
      return ca.segment.length_s < cb.segment.length_s;
    }
    if (ca.train.lambda != cb.train.lambda) return ca.train.lambda < cb.train.lambda;
    return a < b;
  };

  std::size_t best = 0;
  for (std::size_t p = 1; p < total; ++p) {
    if (better(p, best)) best = p;
  }
  result.best_index = best;
  result.best_config = config_at(base, grid, result.table[best].values);
  return result;
}

}  // namespace ssvep
