#pragma once

#include <stdexcept>
#include <string>

namespace ssvep {

// Stable error identifiers. The CLI maps these onto exit codes, tests match
// on them instead of message text.
enum class ErrorCode {
  missing_file,
  malformed_manifest,
  label_not_in_stimulus_set,
  channel_mismatch,
  unknown_channel,
  band_edges_above_nyquist,
  nyquist_violation,
  out_of_profile_range,
  signal_too_short,
  non_positive_parameter,
  bank_exceeds_spectrum_range,
  band_exceeds_spectrum_range,
  missing_class,
  dimension_mismatch,
  degenerate_covariance,
  invalid_accuracy,
  k_too_small,
  no_decisions,
  zero_variance,
  length_mismatch,
  dataset_mismatch,
  invalid_config,
  io_failure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::missing_file: return "MissingFile";
    case ErrorCode::malformed_manifest: return "MalformedManifest";
    case ErrorCode::label_not_in_stimulus_set: return "LabelNotInStimulusSet";
    case ErrorCode::channel_mismatch: return "ChannelMismatch";
    case ErrorCode::unknown_channel: return "UnknownChannel";
    case ErrorCode::band_edges_above_nyquist: return "BandEdgesAboveNyquist";
    case ErrorCode::nyquist_violation: return "NyquistViolation";
    case ErrorCode::out_of_profile_range: return "OutOfProfileRange";
    case ErrorCode::signal_too_short: return "SignalTooShort";
    case ErrorCode::non_positive_parameter: return "NonPositiveParameter";
    case ErrorCode::bank_exceeds_spectrum_range: return "BankExceedsSpectrumRange";
    case ErrorCode::band_exceeds_spectrum_range: return "BandExceedsSpectrumRange";
    case ErrorCode::missing_class: return "MissingClass";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::degenerate_covariance: return "DegenerateCovariance";
    case ErrorCode::invalid_accuracy: return "InvalidAccuracy";
    case ErrorCode::k_too_small: return "KTooSmall";
    case ErrorCode::no_decisions: return "NoDecisions";
    case ErrorCode::zero_variance: return "ZeroVariance";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::dataset_mismatch: return "DatasetMismatch";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::io_failure: return "IoFailure";
  }
  return "Error";
}

}  // namespace ssvep
