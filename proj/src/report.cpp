#include "ssvepkit/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ssvepkit/error.hpp"
#include <nlohmann/json.hpp>

namespace ssvep {

namespace {

// Shortest representation that parses back exactly; keeps CSVs re-readable.
std::string num(double v) { return nlohmann::json(v).dump(); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string opt_fixed(const std::optional<double>& v, int digits) {
  return v ? fixed(*v, digits) : std::string("-");
}

void pad(std::ostringstream& os, const std::string& s, std::size_t width) {
  if (s.size() < width) os << std::string(width - s.size(), ' ');
  os << s;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string render_report(const EvalReport& report, const std::string& dataset_name) {
  std::ostringstream os;
  os << "method: " << report.method << "    dataset: " << dataset_name
     << "    K: " << report.n_classes << "\n";
  os << "subject      trials  decided  accuracy    MRT[s]   cmd/min   ITR[bits/min]\n";
  auto row = [&os](const GroupStats& g) {
    pad(os, g.label, 7);
    pad(os, std::to_string(g.n_trials), 12);
    pad(os, std::to_string(g.n_decided), 9);
    pad(os, fixed(g.accuracy, 3), 10);
    pad(os, opt_fixed(g.mrt_s, 2), 10);
    pad(os, opt_fixed(g.commands_per_min, 2), 10);
    pad(os, opt_fixed(g.itr_bits_per_min, 2), 16);
    os << "\n";
  };
  for (const auto& g : report.per_subject) row(g);
  row(report.pooled);
  return os.str();
}

std::string render_comparison(const std::vector<EvalReport>& reports,
                              const std::string& dataset_name) {
  if (reports.size() < 2) {
    throw Error(ErrorCode::invalid_config, "comparison needs at least two methods");
  }
  std::ostringstream os;
  os << "dataset: " << dataset_name << "    per-subject ITR [bits/min]\n";
  pad(os, "subject", 7);
  for (const auto& r : reports) pad(os, r.method, 10);
  os << "\n";

  const auto& subjects = reports.front().per_subject;
  for (std::size_t s = 0; s < subjects.size(); ++s) {
    pad(os, subjects[s].label, 7);
    for (const auto& r : reports) {
      const auto& g = s < r.per_subject.size() ? r.per_subject[s] : r.pooled;
      pad(os, opt_fixed(g.itr_bits_per_min, 2), 10);
    }
    os << "\n";
  }
  pad(os, "pooled", 7);
  for (const auto& r : reports) pad(os, opt_fixed(r.pooled.itr_bits_per_min, 2), 10);
  os << "\n\n";

  os << "paired t-tests on per-subject ITR (" << reports.front().method
     << " vs others):\n";
  for (std::size_t m = 1; m < reports.size(); ++m) {
    std::vector<double> a, b;
    for (std::size_t s = 0; s < subjects.size(); ++s) {
      if (s >= reports[m].per_subject.size()) continue;
      const auto& ga = reports.front().per_subject[s];
      const auto& gb = reports[m].per_subject[s];
      if (ga.itr_bits_per_min && gb.itr_bits_per_min) {
        a.push_back(*ga.itr_bits_per_min);
        b.push_back(*gb.itr_bits_per_min);
      }
    }
    os << reports.front().method << " vs " << reports[m].method << ": ";
    if (a.size() < 2) {
      os << "n/a (fewer than 2 complete subject pairs)\n";
      continue;
    }
    try {
      const TTestResult res = paired_ttest(a, b);
      os << "t=" << fixed(res.t, 4) << "  p=" << fixed(res.p, 6) << "  (df="
         << res.df << ")\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::zero_variance) throw;
      os << "ZeroVariance (all paired differences equal)\n";
    }
  }
  return os.str();
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << text;
}

void write_outcomes_csv(const std::vector<TrialOutcome>& outcomes,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << "method,subject_id,trial_id,true_freq_hz,recognized_freq_hz,"
         "recognition_time_s,correct\n";
  for (const auto& o : outcomes) {
    out << o.method << ',' << o.subject_id << ',' << o.trial_id << ','
        << num(o.true_freq_hz) << ',';
    if (o.recognized_freq_hz) out << num(*o.recognized_freq_hz);
    out << ',';
    if (o.recognition_time_s) out << num(*o.recognition_time_s);
    out << ',' << (o.correct() ? 1 : 0) << "\n";
  }
}

std::vector<TrialOutcome> read_outcomes_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::missing_file, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::malformed_manifest, path + ": empty outcomes file");
  }
  std::vector<TrialOutcome> outcomes;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 7) {
      throw Error(ErrorCode::malformed_manifest,
                  path + ":" + std::to_string(line_no) + ": expected 7 fields");
    }
    TrialOutcome o;
    o.method = f[0];
    o.subject_id = f[1];
    o.trial_id = f[2];
    o.true_freq_hz = std::stod(f[3]);
    if (!f[4].empty()) o.recognized_freq_hz = std::stod(f[4]);
    if (!f[5].empty()) o.recognition_time_s = std::stod(f[5]);
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

void write_report_csv(const EvalReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << "method,subject,trials,decided,correct,accuracy,mrt_s,commands_per_min,"
         "itr_bits_per_min\n";
  auto row = [&out, &report](const GroupStats& g) {
    out << report.method << ',' << g.label << ',' << g.n_trials << ',' << g.n_decided
        << ',' << g.n_correct << ',' << num(g.accuracy) << ',';
    if (g.mrt_s) out << num(*g.mrt_s);
    out << ',';
    if (g.commands_per_min) out << num(*g.commands_per_min);
    out << ',';
    if (g.itr_bits_per_min) out << num(*g.itr_bits_per_min);
    out << "\n";
  };
  for (const auto& g : report.per_subject) row(g);
  row(report.pooled);
}

void write_grid_csv(const GridResult& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  for (const auto& k : grid.keys) out << k << ',';
  out << "pooled_itr_bits_per_min,pooled_accuracy,pooled_mrt_s,best\n";
  for (std::size_t p = 0; p < grid.table.size(); ++p) {
    const auto& gp = grid.table[p];
    for (double v : gp.values) out << num(v) << ',';
    if (gp.pooled_itr) out << num(*gp.pooled_itr);
    out << ',' << num(gp.pooled_accuracy) << ',';
    if (gp.pooled_mrt_s) out << num(*gp.pooled_mrt_s);
    out << ',' << (p == grid.best_index ? 1 : 0) << "\n";
  }
}

}  // namespace ssvep
