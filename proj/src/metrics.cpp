#include "ssvepkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ssvepkit/error.hpp"

namespace ssvep {

double itr(std::size_t k, double delta, double commands_per_min) {
  if (k < 2) throw Error(ErrorCode::k_too_small, "ITR needs K >= 2");
  if (delta < 0.0 || delta > 1.0) {
    throw Error(ErrorCode::invalid_accuracy, "accuracy must lie in [0,1]");
  }
  if (commands_per_min < 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "command rate must be non-negative");
  }
  const double kd = static_cast<double>(k);
  // At or below chance the formula carries no usable information.
  if (delta <= 1.0 / kd) return 0.0;

  double bits = std::log2(kd);
  if (delta > 0.0) bits += delta * std::log2(delta);
  if (delta < 1.0) bits += (1.0 - delta) * std::log2((1.0 - delta) / (kd - 1.0));
  return commands_per_min * std::max(bits, 0.0);
}

namespace {

GroupStats stats_for(const std::string& label,
                     const std::vector<const TrialOutcome*>& outcomes,
                     std::size_t n_classes) {
  GroupStats g;
  g.label = label;
  g.n_trials = outcomes.size();
  double time_sum = 0.0;
  for (const auto* o : outcomes) {
    if (o->decided()) {
      ++g.n_decided;
      time_sum += *o->recognition_time_s;
    }
    if (o->correct()) ++g.n_correct;
  }
  g.accuracy = g.n_trials > 0
                   ? static_cast<double>(g.n_correct) / static_cast<double>(g.n_trials)
                   : 0.0;
  if (g.n_decided > 0) {
    g.mrt_s = time_sum / static_cast<double>(g.n_decided);
    g.commands_per_min = 60.0 / *g.mrt_s;
    g.itr_bits_per_min = itr(n_classes, g.accuracy, *g.commands_per_min);
  }
  return g;
}

}  // namespace

EvalReport summarize(const std::vector<TrialOutcome>& outcomes, std::size_t n_classes) {
  if (outcomes.empty()) {
    throw Error(ErrorCode::invalid_config, "no outcomes to summarize");
  }
  const std::string& method = outcomes.front().method;
  for (const auto& o : outcomes) {
    if (o.method != method) {
      throw Error(ErrorCode::invalid_config, "summarize expects a single method");
    }
  }

  EvalReport report;
  report.method = method;
  report.n_classes = n_classes;

  std::vector<std::string> subject_order;
  std::map<std::string, std::vector<const TrialOutcome*>> by_subject;
  std::vector<const TrialOutcome*> all;
  for (const auto& o : outcomes) {
    if (by_subject.find(o.subject_id) == by_subject.end()) {
      subject_order.push_back(o.subject_id);
    }
    by_subject[o.subject_id].push_back(&o);
    all.push_back(&o);
  }
  for (const auto& sid : subject_order) {
    report.per_subject.push_back(stats_for(sid, by_subject[sid], n_classes));
  }
  report.pooled = stats_for("pooled", all, n_classes);
  if (report.pooled.n_decided == 0) {
    throw Error(ErrorCode::no_decisions,
                "no trial produced a decision; MRT and ITR are undefined");
  }
  return report;
}

}  // namespace ssvep
