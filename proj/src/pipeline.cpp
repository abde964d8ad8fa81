#include "ssvepkit/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "ssvepkit/cca.hpp"
#include "ssvepkit/decision.hpp"
#include "ssvepkit/dsp.hpp"
#include "ssvepkit/error.hpp"
#include "ssvepkit/linalg.hpp"
#include "ssvepkit/logistic.hpp"
#include "ssvepkit/parallel.hpp"
#include "ssvepkit/preprocess.hpp"
#include "ssvepkit/psda.hpp"

namespace ssvep {

FilterBank make_method_bank(const ExperimentConfig& cfg,
                            const std::vector<double>& stimuli_hz,
                            double sampling_rate_hz) {
  if (cfg.method == Method::uf) {
    return build_unit_bank(stimuli_hz, cfg.uf_half_width_hz, sampling_rate_hz);
  }
  if (cfg.method != Method::bifb) {
    throw Error(ErrorCode::invalid_config, "no filter bank for this method");
  }
  if (cfg.bifb.gains.has_value() != cfg.bifb.bandwidths_hz.has_value()) {
    throw Error(ErrorCode::invalid_config,
                "explicit bifb parameters need both gains and bandwidths");
  }
  if (cfg.bifb.gains) {
    return build_bifb(stimuli_hz, *cfg.bifb.gains, *cfg.bifb.bandwidths_hz,
                      sampling_rate_hz);
  }
  const ResponseProfile profile =
      cfg.bifb.profile ? *cfg.bifb.profile : default_response_profile();
  const BifbParams params = shaped_bifb_params(
      stimuli_hz, profile, BifbShaping{cfg.bifb.gamma, cfg.bifb.bw_base_hz, cfg.bifb.bw_scale});
  return build_bifb(stimuli_hz, params.gains, params.bandwidths_hz, sampling_rate_hz);
}

namespace {

// Everything the per-fold work needs, computed once per trial.
struct PreparedTrial {
  std::string trial_id;
  std::string subject_id;
  double true_freq_hz{0.0};
  std::size_t class_idx{0};
  std::vector<double> segment_end_s;
  std::vector<std::vector<double>> features;  // bifb/uf: one row per segment
  std::vector<std::size_t> direct_candidates;  // psda/cca: one per segment
};

PreparedTrial prepare_trial(const Recording& raw, const TrialEntry& entry,
                            const Dataset& ds, const ExperimentConfig& cfg,
                            const FilterBank* bank) {
  const Recording rec = preprocess(raw, cfg.preprocess);
  const double fs = rec.sampling_rate_hz;
  const auto& stimuli = ds.manifest.stimulus_frequencies_hz;

  PreparedTrial out;
  out.trial_id = entry.trial_id;
  out.subject_id = entry.subject_id;
  out.true_freq_hz = entry.stimulus_freq_hz;
  out.class_idx = static_cast<std::size_t>(ds.manifest.class_index(entry.stimulus_freq_hz));

  if (cfg.method == Method::cca) {
    // Multi-channel time-domain segments against sinusoidal references.
    const auto seg_len = static_cast<std::size_t>(
        std::llround(cfg.segment.length_s * fs));
    if (seg_len < 8) {
      throw Error(ErrorCode::non_positive_parameter, "segment length must be >= 8 samples");
    }
    if (rec.n_samples() < seg_len) {
      throw Error(ErrorCode::signal_too_short,
                  "trial '" + entry.trial_id + "' shorter than one segment");
    }
    const std::size_t hop = hop_samples(seg_len, cfg.segment.overlap);
    for (std::size_t start : segment_starts(rec.n_samples(), seg_len, hop)) {
      Matrix seg(rec.n_channels(), seg_len);
      for (std::size_t ch = 0; ch < rec.n_channels(); ++ch) {
        for (std::size_t t = 0; t < seg_len; ++t) {
          seg(ch, t) = rec.samples[ch][start + t];
        }
      }
      out.direct_candidates.push_back(
          cca_recognize(seg, stimuli, cfg.cca_harmonics, fs));
      out.segment_end_s.push_back(static_cast<double>(start + seg_len) / fs);
    }
    return out;
  }

  const auto& channel = rec.channel(cfg.preprocess.analysis_channel);
  const auto segments =
      segment_stream(channel, fs, cfg.segment.length_s, cfg.segment.overlap);
  for (const auto& seg : segments) {
    const Spectrum spec = psd(seg, cfg.segment.zero_pad_factor);
    out.segment_end_s.push_back(seg.end_time_s());
    if (cfg.method == Method::psda) {
      out.direct_candidates.push_back(
          psda_recognize(spec, stimuli, cfg.psda_half_width_hz));
    } else {
      out.features.push_back(extract_features(spec, *bank).x);
    }
  }
  return out;
}

TrialOutcome outcome_from_candidates(const PreparedTrial& trial,
                                     const std::vector<std::size_t>& candidates,
                                     const Dataset& ds, const ExperimentConfig& cfg) {
  TrialOutcome o;
  o.trial_id = trial.trial_id;
  o.subject_id = trial.subject_id;
  o.method = method_name(cfg.method);
  o.true_freq_hz = trial.true_freq_hz;
  const auto decision = decide(candidates, cfg.decision.rule());
  if (decision) {
    o.recognized_freq_hz = ds.manifest.stimulus_frequencies_hz[decision->class_index];
    o.recognition_time_s = trial.segment_end_s[decision->candidate_index];
  }
  return o;
}

}  // namespace

std::vector<LooFold> loo_folds(std::size_t n_trials) {
  std::vector<LooFold> folds(n_trials);
  for (std::size_t i = 0; i < n_trials; ++i) {
    folds[i].held_out = i;
    folds[i].training.reserve(n_trials - 1);
    for (std::size_t j = 0; j < n_trials; ++j) {
      if (j != i) folds[i].training.push_back(j);
    }
  }
  return folds;
}

std::vector<TrialOutcome> loo_cv(const Dataset& ds, const ExperimentConfig& cfg,
                                 std::size_t jobs) {
  if (ds.recordings.size() != ds.manifest.trials.size()) {
    throw Error(ErrorCode::malformed_manifest, "dataset recordings do not match manifest");
  }
  const auto& stimuli = ds.manifest.stimulus_frequencies_hz;

  FilterBank bank;
  const bool needs_bank = cfg.method == Method::bifb || cfg.method == Method::uf;
  if (needs_bank) {
    bank = make_method_bank(cfg, stimuli, ds.manifest.sampling_rate_hz);
  }

  // Per-trial preparation is fold-independent; do it once, in parallel.
  std::vector<PreparedTrial> prepared(ds.recordings.size());
  parallel_for(ds.recordings.size(), jobs, [&](std::size_t i) {
    prepared[i] = prepare_trial(ds.recordings[i], ds.manifest.trials[i], ds, cfg,
                                needs_bank ? &bank : nullptr);
  });

  // Stable processing order regardless of manifest order.
  std::vector<std::size_t> order(prepared.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (prepared[a].subject_id != prepared[b].subject_id) {
      return prepared[a].subject_id < prepared[b].subject_id;
    }
    return prepared[a].trial_id < prepared[b].trial_id;
  });

  std::vector<TrialOutcome> outcomes(prepared.size());

  if (!cfg.trainable()) {
    parallel_for(order.size(), jobs, [&](std::size_t oi) {
      const PreparedTrial& trial = prepared[order[oi]];
      outcomes[oi] = outcome_from_candidates(trial, trial.direct_candidates, ds, cfg);
    });
    return outcomes;
  }

  // Group fold indices per subject, in the stable order.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> subjects;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const auto& sid = prepared[order[oi]].subject_id;
    if (subjects.empty() || subjects.back().first != sid) {
      subjects.push_back({sid, {}});
    }
    subjects.back().second.push_back(oi);
  }

  for (const auto& [sid, slots] : subjects) {
    // Every fold must still cover all classes.
    std::vector<std::size_t> counts(stimuli.size(), 0);
    for (std::size_t oi : slots) ++counts[prepared[order[oi]].class_idx];
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] < 2) {
        throw Error(ErrorCode::missing_class,
                    "subject '" + sid + "' needs at least 2 trials of " +
                        std::to_string(stimuli[k]) +
                        " Hz for leave-one-out training");
      }
    }

    const auto& fold_slots = slots;
    const auto folds = loo_folds(fold_slots.size());
    parallel_for(folds.size(), jobs, [&](std::size_t fi) {
      const std::size_t oi = fold_slots[folds[fi].held_out];
      const PreparedTrial& held_out = prepared[order[oi]];

      std::vector<std::vector<double>> train_rows;
      std::vector<std::size_t> train_classes;
      for (std::size_t local : folds[fi].training) {
        const PreparedTrial& t = prepared[order[fold_slots[local]]];
        for (const auto& row : t.features) {
          train_rows.push_back(row);
          train_classes.push_back(t.class_idx);
        }
      }
      const OvaModel model =
          train_ova(train_rows, train_classes, stimuli.size(), stimuli, cfg.train);

      std::vector<std::size_t> candidates;
      candidates.reserve(held_out.features.size());
      for (const auto& row : held_out.features) {
        candidates.push_back(predict_candidate(model, row).class_index);
      }
      outcomes[oi] = outcome_from_candidates(held_out, candidates, ds, cfg);
    });
  }
  return outcomes;
}

}  // namespace ssvep
