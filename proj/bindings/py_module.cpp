#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ssvepkit/cca.hpp"
#include "ssvepkit/config.hpp"
#include "ssvepkit/dataset.hpp"
#include "ssvepkit/decision.hpp"
#include "ssvepkit/dsp.hpp"
#include "ssvepkit/error.hpp"
#include "ssvepkit/filterbank.hpp"
#include "ssvepkit/gridsearch.hpp"
#include "ssvepkit/iir.hpp"
#include "ssvepkit/linalg.hpp"
#include "ssvepkit/logistic.hpp"
#include "ssvepkit/metrics.hpp"
#include "ssvepkit/pipeline.hpp"
#include "ssvepkit/preprocess.hpp"
#include "ssvepkit/psda.hpp"
#include "ssvepkit/report.hpp"
#include "ssvepkit/synth.hpp"

namespace py = pybind11;
using namespace ssvep;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::dimension_mismatch, "empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols) {
      throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Segment make_segment(const std::vector<double>& samples, double sampling_rate_hz,
                     double start_time_s) {
  Segment seg;
  seg.samples = samples;
  seg.sampling_rate_hz = sampling_rate_hz;
  seg.start_time_s = start_time_s;
  return seg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SSVEP frequency recognition: filter-bank features, logistic "
            "classification, PSDA/CCA baselines and evaluation metrics";

  py::register_exception<Error>(m, "SsvepError");

  // --- dsp ---
  py::class_<Segment>(m, "Segment")
      .def(py::init(&make_segment), py::arg("samples"), py::arg("sampling_rate_hz"),
           py::arg("start_time_s") = 0.0)
      .def_readonly("samples", &Segment::samples)
      .def_readonly("start_time_s", &Segment::start_time_s)
      .def_readonly("sampling_rate_hz", &Segment::sampling_rate_hz)
      .def("end_time_s", &Segment::end_time_s);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("power", &Spectrum::power)
      .def_readonly("bin_resolution_hz", &Spectrum::bin_resolution_hz)
      .def_readonly("n_fft", &Spectrum::n_fft)
      .def_readonly("n_samples", &Spectrum::n_samples)
      .def("max_frequency_hz", &Spectrum::max_frequency_hz);

  m.def("hamming_window", &hamming_window, py::arg("n"));
  m.def("segment_stream", &segment_stream, py::arg("signal"),
        py::arg("sampling_rate_hz"), py::arg("seg_len_s"), py::arg("overlap_fraction"));
  m.def("psd", &psd, py::arg("segment"), py::arg("zero_pad_factor") = 1);

  // --- filter bank ---
  py::class_<TriFilter>(m, "TriFilter")
      .def(py::init<double, double, double>(), py::arg("center_hz"),
           py::arg("bandwidth_hz"), py::arg("gain"))
      .def_readonly("center_hz", &TriFilter::center_hz)
      .def_readonly("bandwidth_hz", &TriFilter::bandwidth_hz)
      .def_readonly("gain", &TriFilter::gain);

  py::class_<UnitFilter>(m, "UnitFilter")
      .def(py::init<double, double>(), py::arg("center_hz"), py::arg("half_width_hz"))
      .def_readonly("center_hz", &UnitFilter::center_hz)
      .def_readonly("half_width_hz", &UnitFilter::half_width_hz);

  py::class_<FilterBank>(m, "FilterBank")
      .def_property_readonly("size", &FilterBank::size)
      .def("response", &FilterBank::response, py::arg("index"), py::arg("f_hz"))
      .def("support_low", &FilterBank::support_low)
      .def("support_high", &FilterBank::support_high);

  m.def("tri_response", &tri_response, py::arg("filter"), py::arg("f_hz"));
  m.def("unit_response", &unit_response, py::arg("filter"), py::arg("f_hz"));
  m.def("build_bifb", &build_bifb, py::arg("stimuli_hz"), py::arg("gains"),
        py::arg("bandwidths_hz"), py::arg("sampling_rate_hz"));
  m.def("build_unit_bank", &build_unit_bank, py::arg("stimuli_hz"),
        py::arg("half_width_hz"), py::arg("sampling_rate_hz"));
  m.def(
      "extract_features",
      [](const Spectrum& spec, const FilterBank& bank) {
        return extract_features(spec, bank).x;
      },
      py::arg("spectrum"), py::arg("bank"));

  // --- synth ---
  py::class_<ResponseProfile>(m, "ResponseProfile")
      .def(py::init([](const std::vector<std::pair<double, double>>& cp) {
             ResponseProfile p{cp};
             validate_profile(p);
             return p;
           }),
           py::arg("control_points"))
      .def_readonly("control_points", &ResponseProfile::control_points);

  m.def("default_response_profile", &default_response_profile);
  m.def("profile_amplitude", &profile_amplitude, py::arg("profile"), py::arg("f_hz"));

  // --- classifier ---
  m.def("sigmoid", &sigmoid, py::arg("z"));
  m.def("logistic_cost", &logistic_cost, py::arg("theta"), py::arg("features"),
        py::arg("labels"), py::arg("lambda_"));
  m.def("logistic_gradient", &logistic_gradient, py::arg("theta"), py::arg("features"),
        py::arg("labels"), py::arg("lambda_"));

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("max_iterations", &TrainConfig::max_iterations)
      .def_readwrite("convergence_tol", &TrainConfig::convergence_tol)
      .def_readwrite("lambda_", &TrainConfig::lambda)
      .def_readwrite("feature_standardization", &TrainConfig::feature_standardization);

  py::class_<OvaModel>(m, "OvaModel")
      .def_readonly("thetas", &OvaModel::thetas)
      .def_readonly("lambda_", &OvaModel::lambda)
      .def_readonly("class_frequencies_hz", &OvaModel::class_frequencies_hz)
      .def_readonly("converged", &OvaModel::converged)
      .def("to_json", &model_to_json);

  m.def("model_from_json", &model_from_json, py::arg("text"));
  m.def("train_ova", &train_ova, py::arg("features"), py::arg("class_of"),
        py::arg("n_classes"), py::arg("class_frequencies_hz"), py::arg("config"));
  m.def(
      "predict_candidate",
      [](const OvaModel& model, const std::vector<double>& x) {
        const Prediction p = predict_candidate(model, x);
        return std::make_pair(p.class_index, p.probabilities);
      },
      py::arg("model"), py::arg("features"));

  // --- decision rule ---
  m.def(
      "decide",
      [](const std::vector<std::size_t>& candidates, std::size_t t_required,
         std::size_t window_t) -> std::optional<std::pair<std::size_t, std::size_t>> {
        const auto d = decide(candidates, DecisionRule{t_required, window_t});
        if (!d) return std::nullopt;
        return std::make_pair(d->class_index, d->candidate_index);
      },
      py::arg("candidates"), py::arg("t_required") = 3, py::arg("window_t") = 4,
      "Returns (class_index, firing_index) or None");

  // --- baselines ---
  m.def(
      "psda_recognize",
      [](const Spectrum& spec, const std::vector<double>& stimuli, double hw) {
        return psda_recognize(spec, stimuli, hw);
      },
      py::arg("spectrum"), py::arg("stimuli_hz"), py::arg("half_width_hz"));
  m.def(
      "cca_correlation",
      [](const std::vector<std::vector<double>>& a,
         const std::vector<std::vector<double>>& b) {
        return cca_correlation(matrix_from_rows(a), matrix_from_rows(b));
      },
      py::arg("a"), py::arg("b"),
      "Largest canonical correlation between two row-major signal sets");
  m.def(
      "cca_recognize",
      [](const std::vector<std::vector<double>>& eeg, const std::vector<double>& stimuli,
         std::size_t n_harmonics, double fs) {
        return cca_recognize(matrix_from_rows(eeg), stimuli, n_harmonics, fs);
      },
      py::arg("eeg"), py::arg("stimuli_hz"), py::arg("n_harmonics"),
      py::arg("sampling_rate_hz"));

  // --- metrics ---
  m.def("itr", &itr, py::arg("k"), py::arg("delta"), py::arg("commands_per_min"));
  m.def(
      "paired_ttest",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const TTestResult r = paired_ttest(a, b);
        return std::make_tuple(r.t, r.p, r.df);
      },
      py::arg("a"), py::arg("b"), "Returns (t, two_sided_p, df)");
  m.def("student_t_two_sided_p", &student_t_two_sided_p, py::arg("t"), py::arg("df"));
  m.def("regularized_incomplete_beta", &regularized_incomplete_beta, py::arg("a"),
        py::arg("b"), py::arg("x"));

  // --- synth trials / end-to-end ---
  py::class_<Recording>(m, "Recording")
      .def_readonly("samples", &Recording::samples)
      .def_readonly("sampling_rate_hz", &Recording::sampling_rate_hz)
      .def_readonly("channel_names", &Recording::channel_names)
      .def_readonly("stimulus_freq_hz", &Recording::stimulus_freq_hz)
      .def_readonly("subject_id", &Recording::subject_id)
      .def_readonly("trial_id", &Recording::trial_id)
      .def("duration_s", &Recording::duration_s);

  m.def(
      "generate_trial",
      [](double stimulus_freq_hz, double duration_s, double sampling_rate_hz,
         std::size_t n_channels, double harmonic_ratio, double noise_exponent,
         double snr_scale, std::uint64_t seed) {
        SynthSpec spec;
        spec.stimulus_freq_hz = stimulus_freq_hz;
        spec.duration_s = duration_s;
        spec.sampling_rate_hz = sampling_rate_hz;
        spec.n_channels = n_channels;
        spec.profile = default_response_profile();
        spec.harmonic_ratio = harmonic_ratio;
        spec.noise_exponent = noise_exponent;
        spec.snr_scale = snr_scale;
        spec.rng_seed = seed;
        return generate_trial(spec);
      },
      py::arg("stimulus_freq_hz"), py::arg("duration_s") = 8.0,
      py::arg("sampling_rate_hz") = 256.0, py::arg("n_channels") = 1,
      py::arg("harmonic_ratio") = 0.5, py::arg("noise_exponent") = 1.0,
      py::arg("snr_scale") = 1.0, py::arg("seed") = 0);

  m.def("load_dataset", &load_dataset, py::arg("manifest_path"));
  m.def("save_dataset", &save_dataset, py::arg("dataset"), py::arg("manifest_path"));

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("name", [](const Dataset& d) { return d.manifest.name; })
      .def_property_readonly(
          "stimulus_frequencies_hz",
          [](const Dataset& d) { return d.manifest.stimulus_frequencies_hz; })
      .def_property_readonly("n_trials",
                             [](const Dataset& d) { return d.recordings.size(); })
      .def_readonly("recordings", &Dataset::recordings)
      .def("subject_ids", &Dataset::subject_ids);

#ifdef SSVEPKIT_VERSION
  m.attr("__version__") = SSVEPKIT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
