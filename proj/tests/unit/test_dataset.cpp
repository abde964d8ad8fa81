#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "ssvepkit/config.hpp"
#include "ssvepkit/dataset.hpp"
#include "ssvepkit/error.hpp"

using namespace ssvep;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           fs::path("ssvepkit_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

SynthDatasetConfig small_config() {
  SynthDatasetConfig cfg;
  cfg.name = "unit-synth";
  cfg.stimulus_frequencies_hz = {8.0, 14.0, 28.0};
  cfg.sampling_rate_hz = 128.0;
  cfg.n_channels = 2;
  cfg.n_subjects = 4;
  cfg.repetitions = 5;
  cfg.duration_s = 1.0;
  cfg.seed = 42;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("3 stimuli x 4 subjects x 5 repetitions load as 60 recordings") {
  TempDir tmp;
  const Dataset ds = synthesize_dataset(small_config());
  REQUIRE(ds.recordings.size() == 60);
  save_dataset(ds, (tmp.path / "manifest.json").string());

  const Dataset loaded = load_dataset((tmp.path / "manifest.json").string());
  CHECK(loaded.recordings.size() == 60);
  CHECK(loaded.manifest.n_classes() == 3);
  CHECK(loaded.subject_ids().size() == 4);
  CHECK(loaded.subject_trials("s01").size() == 15);
}

TEST_CASE("sample data survives save/load bit-exactly") {
  TempDir tmp;
  const Dataset ds = synthesize_dataset(small_config());
  save_dataset(ds, (tmp.path / "manifest.json").string());
  const Dataset loaded = load_dataset((tmp.path / "manifest.json").string());

  REQUIRE(loaded.recordings.size() == ds.recordings.size());
  for (std::size_t i = 0; i < ds.recordings.size(); ++i) {
    const auto& a = ds.recordings[i].samples;
    const auto& b = loaded.recordings[i].samples;
    REQUIRE(a.size() == b.size());
    for (std::size_t ch = 0; ch < a.size(); ++ch) {
      REQUIRE(a[ch].size() == b[ch].size());
      CHECK(std::memcmp(a[ch].data(), b[ch].data(), a[ch].size() * sizeof(double)) == 0);
    }
  }

  // Re-serializing the loaded dataset reproduces the files byte for byte.
  fs::create_directories(tmp.path / "again");
  save_dataset(loaded, (tmp.path / "again" / "manifest.json").string());
  CHECK(slurp(tmp.path / "manifest.json") == slurp(tmp.path / "again" / "manifest.json"));
  const auto trial_file = ds.manifest.trials.front().file;
  CHECK(slurp(tmp.path / trial_file) == slurp(tmp.path / "again" / trial_file));
}

TEST_CASE("empty trial list is a malformed manifest") {
  TempDir tmp;
  write_file(tmp.path / "manifest.json", R"({
    "name": "x",
    "stimulus_frequencies_hz": [8, 14, 28],
    "sampling_rate_hz": 128,
    "channel_names": ["Oz"],
    "trials": []
  })");
  CHECK_THROWS_WITH_AS(load_dataset((tmp.path / "manifest.json").string()),
                       doctest::Contains("MalformedManifest"), Error);
}

TEST_CASE("trial labels must come from the stimulus set") {
  TempDir tmp;
  write_file(tmp.path / "trial.csv", "Oz\n1.0\n2.0\n");
  write_file(tmp.path / "manifest.json", R"({
    "name": "x",
    "stimulus_frequencies_hz": [8, 14, 28],
    "sampling_rate_hz": 128,
    "channel_names": ["Oz"],
    "trials": [{"trial_id": "t1", "subject_id": "s1", "stimulus_freq_hz": 9.0,
                "file": "trial.csv"}]
  })");
  CHECK_THROWS_WITH_AS(load_dataset((tmp.path / "manifest.json").string()),
                       doctest::Contains("LabelNotInStimulusSet"), Error);
}

TEST_CASE("missing manifest and missing trial files are reported") {
  TempDir tmp;
  CHECK_THROWS_WITH_AS(load_dataset((tmp.path / "nope.json").string()),
                       doctest::Contains("MissingFile"), Error);
  write_file(tmp.path / "manifest.json", R"({
    "name": "x",
    "stimulus_frequencies_hz": [8, 14],
    "sampling_rate_hz": 128,
    "channel_names": ["Oz"],
    "trials": [{"trial_id": "t1", "subject_id": "s1", "stimulus_freq_hz": 8.0,
                "file": "gone.csv"}]
  })");
  CHECK_THROWS_WITH_AS(load_dataset((tmp.path / "manifest.json").string()),
                       doctest::Contains("MissingFile"), Error);
}

TEST_CASE("trial CSV header must match the manifest channels") {
  TempDir tmp;
  write_file(tmp.path / "trial.csv", "O1\n1.0\n");
  write_file(tmp.path / "manifest.json", R"({
    "name": "x",
    "stimulus_frequencies_hz": [8, 14],
    "sampling_rate_hz": 128,
    "channel_names": ["Oz"],
    "trials": [{"trial_id": "t1", "subject_id": "s1", "stimulus_freq_hz": 8.0,
                "file": "trial.csv"}]
  })");
  CHECK_THROWS_WITH_AS(load_dataset((tmp.path / "manifest.json").string()),
                       doctest::Contains("ChannelMismatch"), Error);
}

TEST_CASE("recording invariants: sampling rate must cover the second harmonic") {
  Recording rec;
  rec.samples = {{0.0, 1.0, 2.0, 3.0}};
  rec.channel_names = {"Oz"};
  rec.sampling_rate_hz = 100.0;  // 4 * 28 = 112 > 100
  rec.stimulus_freq_hz = 28.0;
  rec.trial_id = "t";
  CHECK_THROWS_WITH_AS(validate_recording(rec), doctest::Contains("NyquistViolation"),
                       Error);
  rec.sampling_rate_hz = 128.0;
  CHECK_NOTHROW(validate_recording(rec));
  rec.channel_names = {"Oz", "O1"};
  CHECK_THROWS_WITH_AS(validate_recording(rec), doctest::Contains("ChannelMismatch"),
                       Error);
}
