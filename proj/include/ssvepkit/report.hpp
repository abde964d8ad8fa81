#pragma once

#include <string>
#include <vector>

#include "ssvepkit/gridsearch.hpp"
#include "ssvepkit/metrics.hpp"

namespace ssvep {

// Aligned plain-text table: one row per subject plus a pooled row.
std::string render_report(const EvalReport& report, const std::string& dataset_name);

// Side-by-side per-subject ITR for several methods plus paired t-tests of
// the first method against each other one.
std::string render_comparison(const std::vector<EvalReport>& reports,
                              const std::string& dataset_name);

void write_text(const std::string& text, const std::string& path);

// Per-trial outcome CSV (method, subject, trial, truth, recognition, time).
void write_outcomes_csv(const std::vector<TrialOutcome>& outcomes,
                        const std::string& path);
std::vector<TrialOutcome> read_outcomes_csv(const std::string& path);

void write_report_csv(const EvalReport& report, const std::string& path);
void write_grid_csv(const GridResult& grid, const std::string& path);

}  // namespace ssvep
