#pragma once

#include <cstddef>
#include <vector>

#include "ssvepkit/config.hpp"
#include "ssvepkit/dataset.hpp"
#include "ssvepkit/filterbank.hpp"
#include "ssvepkit/metrics.hpp"

namespace ssvep {

// The filter bank backing the configured method (shaped defaults unless the
// config pins explicit gains/bandwidths). Only valid for bifb/uf.
FilterBank make_method_bank(const ExperimentConfig& cfg,
                            const std::vector<double>& stimuli_hz,
                            double sampling_rate_hz);

// One leave-one-out fold over a subject's n trials (local indices).
struct LooFold {
  std::size_t held_out{0};
  std::vector<std::size_t> training;
};

std::vector<LooFold> loo_folds(std::size_t n_trials);

// Leave-one-out cross-validation over each subject's trials, running the
// full preprocess -> segment -> PSD -> features -> candidate -> decide
// pipeline. Training-free methods (psda/cca) skip the training stage and
// yield the same outcome a direct evaluation would. Outcomes are sorted by
// (subject_id, trial_id) and do not depend on manifest order or on jobs.
std::vector<TrialOutcome> loo_cv(const Dataset& ds, const ExperimentConfig& cfg,
                                 std::size_t jobs = 1);

}  // namespace ssvep
