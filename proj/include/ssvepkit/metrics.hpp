#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ssvep {

// Wolpaw information transfer rate in bits/min for K equiprobable commands,
// accuracy delta and s commands per minute. Below-chance accuracies clamp to
// zero (the raw formula turns back up below 1/K, which is not meaningful for
// reporting).
double itr(std::size_t k, double delta, double commands_per_min);

struct TrialOutcome {
  std::string trial_id;
  std::string subject_id;
  std::string method;
  double true_freq_hz{0.0};
  std::optional<double> recognized_freq_hz;
  std::optional<double> recognition_time_s;  // trial start to firing segment end

  bool decided() const { return recognized_freq_hz.has_value(); }
  bool correct() const {
    return recognized_freq_hz.has_value() && *recognized_freq_hz == true_freq_hz;
  }
};

// Accuracy / MRT / ITR for one group of trials. Undecided trials count as
// errors; MRT averages decided trials only; ITR is absent when nothing was
// decided.
struct GroupStats {
  std::string label;  // subject id or "pooled"
  std::size_t n_trials{0};
  std::size_t n_decided{0};
  std::size_t n_correct{0};
  double accuracy{0.0};
  std::optional<double> mrt_s;
  std::optional<double> commands_per_min;
  std::optional<double> itr_bits_per_min;
};

struct EvalReport {
  std::string method;
  std::size_t n_classes{0};
  std::vector<GroupStats> per_subject;
  GroupStats pooled;
};

EvalReport summarize(const std::vector<TrialOutcome>& outcomes, std::size_t n_classes);

// Paired two-sided Student t-test; returns (t statistic, p value).
struct TTestResult {
  double t{0.0};
  double p{1.0};
  std::size_t df{0};
};

TTestResult paired_ttest(const std::vector<double>& a, const std::vector<double>& b);

// Regularized incomplete beta I_x(a, b) and the two-sided Student-t tail
// probability, exposed for verification.
double regularized_incomplete_beta(double a, double b, double x);
double student_t_two_sided_p(double t, std::size_t df);

}  // namespace ssvep
