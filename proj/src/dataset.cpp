#include "ssvepkit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssvepkit/error.hpp"
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace ssvep {

std::size_t Recording::channel_index(const std::string& name) const {
  for (std::size_t i = 0; i < channel_names.size(); ++i) {
    if (channel_names[i] == name) return i;
  }
  throw Error(ErrorCode::unknown_channel, "no channel named '" + name + "'");
}

const std::vector<double>& Recording::channel(const std::string& name) const {
  return samples[channel_index(name)];
}

void validate_recording(const Recording& rec) {
  if (rec.samples.size() != rec.channel_names.size()) {
    throw Error(ErrorCode::channel_mismatch,
                "trial '" + rec.trial_id + "': sample rows (" +
                    std::to_string(rec.samples.size()) + ") != channel names (" +
                    std::to_string(rec.channel_names.size()) + ")");
  }
  if (rec.sampling_rate_hz <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "sampling rate must be positive");
  }
  if (rec.stimulus_freq_hz <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "stimulus frequency must be positive");
  }
  if (rec.sampling_rate_hz < 4.0 * rec.stimulus_freq_hz) {
    throw Error(ErrorCode::nyquist_violation,
                "trial '" + rec.trial_id + "': sampling rate " +
                    std::to_string(rec.sampling_rate_hz) +
                    " Hz cannot represent the second harmonic of " +
                    std::to_string(rec.stimulus_freq_hz) + " Hz");
  }
  const std::size_t n = rec.n_samples();
  if (n == 0) {
    throw Error(ErrorCode::malformed_manifest, "trial '" + rec.trial_id + "' has no samples");
  }
  for (std::size_t ch = 0; ch < rec.samples.size(); ++ch) {
    if (rec.samples[ch].size() != n) {
      throw Error(ErrorCode::channel_mismatch,
                  "trial '" + rec.trial_id + "': ragged channel lengths");
    }
    for (double v : rec.samples[ch]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::malformed_manifest,
                    "trial '" + rec.trial_id + "' contains non-finite samples");
      }
    }
  }
}

namespace {

// Shortest fixed-decimal representation that parses back to the same bits.
// Keeps trial CSVs diffable while making save/load round-trips exact.
std::string format_sample(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  int digits = 17;
  const double a = std::fabs(v);
  if (a < 1.0) {
    digits += static_cast<int>(-std::floor(std::log10(a)));
  } else {
    digits = std::max(1, digits - static_cast<int>(std::floor(std::log10(a))) - 1);
  }
  char buf[512];
  for (; digits <= 400; ++digits) {
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    const double back = std::strtod(buf, nullptr);
    if (std::memcmp(&back, &v, sizeof(double)) == 0) break;
  }
  return buf;
}

double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::malformed_manifest,
                context + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

Recording load_trial_csv(const fs::path& path, const TrialEntry& entry,
                         const DatasetManifest& manifest) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::missing_file, "cannot open trial file " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::malformed_manifest, "empty trial file " + path.string());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  if (header != manifest.channel_names) {
    throw Error(ErrorCode::channel_mismatch,
                "trial file " + path.string() + " header does not match manifest channels");
  }

  Recording rec;
  rec.sampling_rate_hz = manifest.sampling_rate_hz;
  rec.channel_names = manifest.channel_names;
  rec.stimulus_freq_hz = entry.stimulus_freq_hz;
  rec.subject_id = entry.subject_id;
  rec.trial_id = entry.trial_id;
  rec.samples.resize(header.size());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::malformed_manifest,
                  path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    for (std::size_t ch = 0; ch < fields.size(); ++ch) {
      rec.samples[ch].push_back(
          parse_double(fields[ch], path.string() + ":" + std::to_string(line_no)));
    }
  }
  validate_recording(rec);
  return rec;
}

}  // namespace

void validate_manifest(const DatasetManifest& manifest) {
  if (manifest.stimulus_frequencies_hz.size() < 2) {
    throw Error(ErrorCode::malformed_manifest, "need at least 2 stimulus frequencies");
  }
  for (std::size_t i = 0; i < manifest.stimulus_frequencies_hz.size(); ++i) {
    if (manifest.stimulus_frequencies_hz[i] <= 0.0) {
      throw Error(ErrorCode::malformed_manifest, "stimulus frequencies must be positive");
    }
    if (i > 0 && manifest.stimulus_frequencies_hz[i] <= manifest.stimulus_frequencies_hz[i - 1]) {
      throw Error(ErrorCode::malformed_manifest,
                  "stimulus frequencies must be strictly increasing");
    }
  }
  if (manifest.sampling_rate_hz <= 0.0) {
    throw Error(ErrorCode::malformed_manifest, "sampling rate must be positive");
  }
  if (manifest.channel_names.empty()) {
    throw Error(ErrorCode::malformed_manifest, "channel list is empty");
  }
  if (manifest.trials.empty()) {
    throw Error(ErrorCode::malformed_manifest, "trial list is empty");
  }
  for (const auto& t : manifest.trials) {
    if (manifest.class_index(t.stimulus_freq_hz) < 0) {
      throw Error(ErrorCode::label_not_in_stimulus_set,
                  "trial '" + t.trial_id + "' labeled " +
                      std::to_string(t.stimulus_freq_hz) +
                      " Hz which is not in the stimulus set");
    }
  }
}

int DatasetManifest::class_index(double stimulus_freq_hz) const {
  for (std::size_t k = 0; k < stimulus_frequencies_hz.size(); ++k) {
    if (stimulus_frequencies_hz[k] == stimulus_freq_hz) return static_cast<int>(k);
  }
  return -1;
}

std::vector<std::string> Dataset::subject_ids() const {
  std::vector<std::string> ids;
  for (const auto& t : manifest.trials) {
    if (std::find(ids.begin(), ids.end(), t.subject_id) == ids.end()) {
      ids.push_back(t.subject_id);
    }
  }
  return ids;
}

std::vector<std::size_t> Dataset::subject_trials(const std::string& subject_id) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < manifest.trials.size(); ++i) {
    if (manifest.trials[i].subject_id == subject_id) idx.push_back(i);
  }
  return idx;
}

Dataset load_dataset(const std::string& manifest_path) {
  const fs::path path(manifest_path);
  if (!fs::exists(path)) {
    throw Error(ErrorCode::missing_file, "manifest not found: " + manifest_path);
  }
  std::ifstream in(path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::malformed_manifest,
                manifest_path + ": " + std::string(e.what()));
  }

  Dataset ds;
  try {
    ds.manifest.name = j.at("name").get<std::string>();
    ds.manifest.stimulus_frequencies_hz =
        j.at("stimulus_frequencies_hz").get<std::vector<double>>();
    ds.manifest.sampling_rate_hz = j.at("sampling_rate_hz").get<double>();
    ds.manifest.channel_names = j.at("channel_names").get<std::vector<std::string>>();
    for (const auto& t : j.at("trials")) {
      TrialEntry entry;
      entry.trial_id = t.at("trial_id").get<std::string>();
      entry.subject_id = t.at("subject_id").get<std::string>();
      entry.stimulus_freq_hz = t.at("stimulus_freq_hz").get<double>();
      entry.file = t.at("file").get<std::string>();
      ds.manifest.trials.push_back(std::move(entry));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::malformed_manifest, manifest_path + ": " + std::string(e.what()));
  }
  validate_manifest(ds.manifest);

  const fs::path base = path.parent_path();
  for (const auto& entry : ds.manifest.trials) {
    const fs::path trial_path = base / entry.file;
    if (!fs::exists(trial_path)) {
      throw Error(ErrorCode::missing_file, "trial file not found: " + trial_path.string());
    }
    ds.recordings.push_back(load_trial_csv(trial_path, entry, ds.manifest));
  }
  return ds;
}

void save_dataset(const Dataset& ds, const std::string& manifest_path) {
  const fs::path path(manifest_path);
  const fs::path base = path.parent_path();
  std::error_code ec;
  if (!base.empty()) fs::create_directories(base, ec);

  ordered_json j;
  j["name"] = ds.manifest.name;
  j["stimulus_frequencies_hz"] = ds.manifest.stimulus_frequencies_hz;
  j["sampling_rate_hz"] = ds.manifest.sampling_rate_hz;
  j["channel_names"] = ds.manifest.channel_names;
  j["trials"] = ordered_json::array();
  for (const auto& t : ds.manifest.trials) {
    j["trials"].push_back(ordered_json{{"trial_id", t.trial_id},
                                       {"subject_id", t.subject_id},
                                       {"stimulus_freq_hz", t.stimulus_freq_hz},
                                       {"file", t.file}});
  }

  {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io_failure, "cannot write " + manifest_path);
    out << j.dump(2) << "\n";
  }

  if (ds.recordings.size() != ds.manifest.trials.size()) {
    throw Error(ErrorCode::malformed_manifest,
                "recording count does not match manifest trials");
  }
  for (std::size_t i = 0; i < ds.recordings.size(); ++i) {
    const fs::path trial_path = base / ds.manifest.trials[i].file;
    if (!trial_path.parent_path().empty()) {
      fs::create_directories(trial_path.parent_path(), ec);
    }
    std::ofstream out(trial_path);
    if (!out) throw Error(ErrorCode::io_failure, "cannot write " + trial_path.string());
    const Recording& rec = ds.recordings[i];
    for (std::size_t ch = 0; ch < rec.channel_names.size(); ++ch) {
      out << (ch == 0 ? "" : ",") << rec.channel_names[ch];
    }
    out << "\n";
    const std::size_t n = rec.n_samples();
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t ch = 0; ch < rec.samples.size(); ++ch) {
        out << (ch == 0 ? "" : ",") << format_sample(rec.samples[ch][t]);
      }
      out << "\n";
    }
  }
}

}  // namespace ssvep
