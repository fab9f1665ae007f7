// Copyright 2026 The rglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rglab/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rglab/clt.h"
#include "rglab/errors.h"
#include "rglab/es_probe.h"
#include "rglab/parallel.h"
#include "rglab/threshold.h"

namespace rglab {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_probe_csv(std::ostream& os, const std::string& meta,
                     std::span<const ResampleTrialRecord> rows) {
  if (!meta.empty()) os << "# " << meta << '\n' << kProbeColumns << '\n';
  for (const auto& r : rows) {
    os << r.trial << ',' << (r.mode == Mode::kGiant ? "giant" : "core") << ',' << r.n << ','
       << format_double(r.c) << ',' << r.radius << ',' << r.k << ',' << r.d_size << ','
       << r.w_size << ',' << r.event_E << ',' << r.claim_subset << ',' << r.claim_small << ','
       << r.locality << ',' << r.f_was_edge << ',' << r.z << ',' << r.z_tilde << '\n';
  }
}

void write_clt_csv(std::ostream& os, const std::string& meta, std::span<const CltTrial> rows) {
  if (!meta.empty()) os << "# " << meta << '\n' << kCltColumns << '\n';
  for (const auto& t : rows) {
    os << t.index << ',' << t.n << ',' << t.z << ',';
    if (t.z_tilde) os << *t.z_tilde;
    os << ',';
    if (t.z_hat) os << *t.z_hat;
    os << '\n';
  }
}

namespace {

using json = nlohmann::ordered_json;

json size_histogram(const ComponentLabeling& labeling) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t s : labeling.sizes) ++counts[s];
  json h = json::object();
  for (const auto& [size, count] : counts) h[std::to_string(size)] = count;
  return h;
}

json labeling_object(const ComponentLabeling& labeling) {
  return {{"num_components", labeling.num_components()},
          {"largest", labeling.largest_size()},
          {"size_histogram", size_histogram(labeling)}};
}

json core_object(const CoreResult& core) {
  std::size_t max_mantle = 0;
  for (std::size_t s : core.mantle.sizes) max_mantle = std::max(max_mantle, s);
  return {{"k", core.k},
          {"core_size", core.size()},
          {"mantle_max_component", max_mantle},
          {"mantle_size_histogram", size_histogram(core.mantle)}};
}

}  // namespace

std::string labeling_json(const ComponentLabeling& labeling) {
  return labeling_object(labeling).dump();
}

std::string core_json(const CoreResult& core) { return core_object(core).dump(); }

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string mode = "giant";
  double n = 0;
  std::vector<double> n_grid;
  double c = 0;
  std::uint32_t k = 3;
  std::uint32_t ell = 0;
  std::size_t t = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;
  std::size_t threads = 1;
  std::string out;
  std::string graph;
  std::string pair = "fixed";
  std::vector<std::uint32_t> tail_grid;
  double tol = 1e-12;
  bool force = false;
  bool resume = false;
};

Mode parse_mode(const std::string& s) {
  if (s == "giant") return Mode::kGiant;
  if (s == "core") return Mode::kCore;
  throw ParameterError("unknown mode '" + s + "'");
}

const char* mode_name(Mode m) { return m == Mode::kGiant ? "giant" : "core"; }

std::size_t as_count(double v, const char* what) {
  if (!(v >= 0) || v != std::floor(v) || v > 1e12) {
    throw ParameterError(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json metadata(const std::string& subcommand, const json& config, std::uint64_t seed) {
  json meta;
  meta["tool"] = "rglab";
  meta["version"] = kVersion;
  meta["subcommand"] = subcommand;
  meta["config"] = config;
  meta["seed"] = seed;
  meta["timestamp"] = timestamp_utc();
  return meta;
}

// Output file that reports failures with its path.
class OutputFile {
 public:
  OutputFile(const fs::path& path, bool append = false)
      : path_(path), stream_(path, append ? std::ios::app : std::ios::trunc) {
    if (!stream_) throw IoError("cannot open '" + path_.string() + "' for writing");
  }
  std::ostream& stream() { return stream_; }
  void flush() {
    stream_.flush();
    if (!stream_) throw IoError("write to '" + path_.string() + "' failed");
  }
  ~OutputFile() = default;

 private:
  fs::path path_;
  std::ofstream stream_;
};

void ensure_directory(const std::string& dir) {
  if (dir.empty()) throw ParameterError("--out directory is required");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_json_file(const fs::path& path, const json& j) {
  OutputFile file(path);
  file.stream() << j.dump(2) << '\n';
  file.flush();
}

// Sampling parameters shared by the subcommands that draw G(n, c/n).
void check_sampling(std::size_t n, double c) {
  if (n < 2) throw ParameterError("--n must be at least 2");
  if (!(c > 0.0) || !(c < static_cast<double>(n))) {
    throw ParameterError("--c must satisfy 0 < c/n < 1");
  }
}

void check_core_hypothesis(const Options& o, Mode mode, double c) {
  if (mode != Mode::kCore) return;
  if (o.k < 2) throw ParameterError("core mode needs --k >= 2");
  if (o.force) return;
  const double c_hat = solve_c_hat(o.k).c_hat;
  if (c <= c_hat) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "refusing core mode with c = " << c << " <= c_hat_" << o.k << " = " << c_hat
        << ": the k-core CLT and the mantle bounds assume c > c_hat_k. Use --force for an "
           "exploratory run.";
    throw ParameterError(msg.str());
  }
}

// --- sample -----------------------------------------------------------------

int run_sample(const Options& o, std::ostream& out) {
  const std::size_t n = as_count(o.n, "--n");
  if (n < 1) throw ParameterError("--n must be at least 1");
  const double p = o.c / static_cast<double>(n);
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("--c must satisfy 0 <= c/n <= 1");
  const Graph g = sample_gnp(n, p, RngStream{o.seed, o.trial});
  json config{{"n", n}, {"c", o.c}, {"trial", o.trial}};
  const std::string meta = "# " + metadata("sample", config, o.seed).dump() + "\n";
  if (o.out.empty()) {
    out << meta;
    write_edge_list(out, g);
  } else {
    OutputFile file(o.out);
    file.stream() << meta;
    write_edge_list(file.stream(), g);
    file.flush();
  }
  return kExitOk;
}

// --- threshold --------------------------------------------------------------

int run_threshold(const Options& o, std::ostream& out) {
  const ThresholdResult r = solve_c_hat(o.k, o.tol);
  json j;
  j["k"] = r.k;
  j["c_hat"] = r.c_hat;
  j["residual"] = r.residual;
  j["asymptotic"] = r.asymptotic;
  j["iterations"] = r.iterations;
  out << j.dump(2) << '\n';
  return kExitOk;
}

// --- probe ------------------------------------------------------------------

void write_probe_row(std::ostream& os, const ResampleTrialRecord& r) {
  write_probe_csv(os, "", std::span(&r, 1));
}

json probe_summary(const std::vector<ResampleTrialRecord>& records, const ProbeConfig& cfg,
                   const std::vector<std::uint32_t>& tail_grid) {
  json s;
  std::size_t event = 0, subset = 0, small = 0, local = 0;
  for (const auto& r : records) {
    if (!r.event_E) continue;
    ++event;
    subset += r.claim_subset;
    small += r.claim_small;
    local += r.locality;
  }
  const auto rate = [&](std::size_t x) {
    return event == 0 ? json(nullptr) : json(static_cast<double>(x) / static_cast<double>(event));
  };
  s["trials"] = records.size();
  s["event_E_trials"] = event;
  s["event_E_rate"] = static_cast<double>(event) / static_cast<double>(records.size());
  s["claim_subset_rate"] = rate(subset);
  s["claim_small_rate"] = rate(small);
  s["locality_rate"] = rate(local);
  const double p = cfg.p();
  s["mean_d_squared"] = mean_d_squared(records);
  s["es_bound"] = es_bound(records, p, cfg.n);
  const VarianceEstimate ve = approximation_error_variance(records);
  s["direct_variance"] = {{"variance", ve.variance}, {"standard_error", ve.standard_error}};
  const TailProfile tail = tail_profile(records, tail_grid);
  json rows = json::array();
  for (const auto& row : tail.rows) rows.push_back({{"ell", row.radius}, {"value", row.value}});
  s["tail"] = rows;
  json hist = json::object();
  for (const auto& [size, count] : tail.w_histogram) hist[std::to_string(size)] = count;
  s["w_histogram"] = hist;
  s["decay_fit"] = {{"base", tail.fit.base}, {"power", tail.fit.power}, {"points", tail.fit.points}};
  s["predicted_base"] = cfg.mode == Mode::kGiant ? json(tail.predicted_base) : json(nullptr);
  return s;
}

int run_probe_cmd(const Options& o, std::ostream& err) {
  ProbeConfig cfg;
  cfg.mode = parse_mode(o.mode);
  cfg.radius = o.ell;
  cfg.k = o.k;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.pair = o.pair == "uniform" ? PairChoice::kUniform : PairChoice::kFixed;
  std::optional<Graph> given;
  if (!o.graph.empty()) {
    given = load_graph(o.graph);
    cfg.n = given->num_vertices();
    cfg.c = o.c > 0 ? o.c : 2.0 * static_cast<double>(given->num_edges()) /
                                 static_cast<double>(cfg.n);
    cfg.trials = 1;
  } else {
    cfg.n = as_count(o.n, "--n");
    cfg.c = o.c;
    cfg.trials = o.trials;
    check_sampling(cfg.n, cfg.c);
  }
  if (cfg.radius < 1) throw ParameterError("--ell must be at least 1");
  check_core_hypothesis(o, cfg.mode, cfg.c);
  cfg.validate();
  std::vector<std::uint32_t> tail_grid = o.tail_grid;
  if (tail_grid.empty()) {
    for (std::uint32_t l = 1; l <= 10; ++l) tail_grid.push_back(l);
  }

  ensure_directory(o.out);
  json config{{"mode", mode_name(cfg.mode)}, {"n", cfg.n},        {"c", cfg.c},
              {"ell", cfg.radius},           {"k", cfg.k},        {"trials", cfg.trials},
              {"pair", o.pair},              {"graph", o.graph},  {"tail_grid", tail_grid}};
  const json meta = metadata("probe", config, cfg.seed);
  OutputFile csv(fs::path(o.out) / "probe.csv");
  write_probe_csv(csv.stream(), meta.dump(), {});

  std::vector<ResampleTrialRecord> records;
  try {
    if (given) {
      Rng rng(RngStream{cfg.seed, 0});
      const CoupledPair pair = make_coupled_pair(*given, rng, cfg.pair);
      const ResampleTrialRecord r = analyze_pair(pair, cfg, 0);
      write_probe_row(csv.stream(), r);
      if (r.violation()) throw ClaimViolation(r, cfg.seed);
      records.push_back(r);
    } else {
      records = run_probe(cfg, [&](const ResampleTrialRecord& r) {
        write_probe_row(csv.stream(), r);
        csv.flush();
      });
    }
  } catch (const ClaimViolation& v) {
    write_probe_row(csv.stream(), v.record());
    csv.flush();
    err << "rglab probe: " << v.what() << "\nreproduce with: rglab probe --mode "
        << mode_name(cfg.mode) << " --n " << cfg.n << " --c " << format_double(cfg.c)
        << " --ell " << cfg.radius << " --k " << cfg.k << " --seed " << cfg.seed
        << " --trials " << v.record().trial + 1 << '\n';
    return kExitClaimViolation;
  }
  csv.flush();

  json summary;
  summary["meta"] = meta;
  summary["summary"] = probe_summary(records, cfg, tail_grid);
  write_json_file(fs::path(o.out) / "summary.json", summary);
  return kExitOk;
}

// --- clt --------------------------------------------------------------------

void write_clt_row(std::ostream& os, const CltTrial& t) {
  write_clt_csv(os, "", std::span(&t, 1));
}

std::optional<std::int64_t> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoll(s);
}

// Rows of an existing trials file, for --resume.
std::vector<CltTrial> read_clt_rows(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for resuming");
  std::vector<CltTrial> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == kCltColumns) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    while (cells.size() < 5) cells.emplace_back();
    CltTrial t;
    t.index = std::stoull(cells[0]);
    t.n = std::stoull(cells[1]);
    t.z = std::stoll(cells[2]);
    t.z_tilde = parse_optional(cells[3]);
    t.z_hat = parse_optional(cells[4]);
    if (t.index != rows.size()) {
      throw IoError("'" + path.string() + "' is not a contiguous trial prefix");
    }
    rows.push_back(t);
  }
  return rows;
}

json normality_json(const std::vector<double>& values) {
  try {
    const NormalityReport r = normality(values);
    return {{"count", r.count},
            {"mean", r.mean},
            {"variance", r.variance},
            {"skewness", r.skewness},
            {"excess_kurtosis", r.excess_kurtosis},
            {"ks_distance", r.ks_distance}};
  } catch (const std::exception& e) {
    return {{"count", values.size()}, {"error", e.what()}};
  }
}

double sample_variance(const std::vector<double>& v) {
  MomentAccumulator acc;
  for (double x : v) acc.add(x);
  return acc.variance();
}

json clt_point_json(std::size_t n, const std::vector<CltTrial>& trials) {
  json p;
  const std::vector<double> z = z_values(trials);
  const double nn = static_cast<double>(n);
  p["n"] = n;
  p["trials"] = trials.size();
  p["normality"] = normality_json(z);
  p["var_over_n"] = sample_variance(z) / nn;
  if (!trials.empty() && trials.front().z_tilde && trials.front().z_hat) {
    std::vector<double> err_local, err_trunc, z_hat;
    for (const auto& t : trials) {
      err_local.push_back(static_cast<double>(t.z - *t.z_tilde));
      err_trunc.push_back(static_cast<double>(*t.z_tilde - *t.z_hat));
      z_hat.push_back(static_cast<double>(*t.z_hat));
    }
    const double var_z = sample_variance(z);
    p["approximation"] = {
        {"var_z_minus_z_tilde_over_n", sample_variance(err_local) / nn},
        {"var_z_tilde_minus_z_hat_over_n", sample_variance(err_trunc) / nn},
        {"var_z_hat_over_var_z",
         var_z > 0 ? json(sample_variance(z_hat) / var_z) : json(nullptr)}};
  }
  return p;
}

int run_clt_cmd(const Options& o) {
  CltConfig cfg;
  cfg.mode = parse_mode(o.mode);
  cfg.c = o.c;
  cfg.k = o.k;
  cfg.radius = o.ell;
  cfg.t = o.t;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.force = o.force;
  cfg.threads = o.threads;
  ensure_directory(o.out);

  if (!o.graph.empty()) {
    const Graph g = load_graph(o.graph);
    cfg.n_grid = {g.num_vertices()};
    json config{{"mode", mode_name(cfg.mode)}, {"graph", o.graph}, {"k", cfg.k},
                {"ell", cfg.radius}, {"t", cfg.t}};
    const json meta = metadata("clt", config, cfg.seed);
    const CltTrial t = clt_evaluate(g, cfg, 0);
    OutputFile csv(fs::path(o.out) / ("trials_" + std::to_string(g.num_vertices()) + ".csv"));
    write_clt_csv(csv.stream(), meta.dump(), {});
    write_clt_row(csv.stream(), t);
    csv.flush();
    json report;
    report["meta"] = meta;
    report["points"] = json::array({clt_point_json(g.num_vertices(), {t})});
    report["variance_scaling"] = nullptr;
    write_json_file(fs::path(o.out) / "report.json", report);
    return kExitOk;
  }

  for (double n : o.n_grid) cfg.n_grid.push_back(as_count(n, "--n"));
  if (cfg.mode == Mode::kCore && cfg.k < 2) throw ParameterError("core mode needs --k >= 2");
  cfg.validate();

  json config{{"mode", mode_name(cfg.mode)}, {"n", cfg.n_grid}, {"c", cfg.c},
              {"k", cfg.k},                  {"ell", cfg.radius}, {"t", cfg.t},
              {"trials", cfg.trials},        {"force", cfg.force}};
  const json meta = metadata("clt", config, cfg.seed);

  json report;
  report["meta"] = meta;
  report["points"] = json::array();
  std::vector<VarianceRow> variance_rows;
  for (std::size_t n : cfg.n_grid) {
    const fs::path path = fs::path(o.out) / ("trials_" + std::to_string(n) + ".csv");
    std::vector<CltTrial> trials;
    const bool resuming = o.resume && fs::exists(path);
    if (resuming) {
      trials = read_clt_rows(path);
      if (trials.size() > cfg.trials) trials.resize(cfg.trials);
    }
    OutputFile csv(path, resuming);
    if (!resuming) {
      write_clt_csv(csv.stream(), meta.dump(), {});
      csv.flush();
    }
    auto fresh = run_clt_point(cfg, n, trials.size(), cfg.trials, [&](const CltTrial& t) {
      write_clt_row(csv.stream(), t);
      csv.flush();
    });
    trials.insert(trials.end(), fresh.begin(), fresh.end());
    report["points"].push_back(clt_point_json(n, trials));
    variance_rows.push_back({n, sample_variance(z_values(trials)), 0});
  }
  json scaling = nullptr;
  try {
    const VarianceScaling vs = variance_scaling(variance_rows);
    scaling = json::object();
    json rows = json::array();
    for (const auto& r : vs.rows) {
      rows.push_back({{"n", r.n}, {"variance", r.variance}, {"var_over_n", r.ratio}});
    }
    scaling["rows"] = rows;
    scaling["spread"] = std::isfinite(vs.spread) ? json(vs.spread) : json(nullptr);
    scaling["flagged"] = vs.flagged;
  } catch (const ParameterError&) {
    // Grid too small for the scaling table.
  }
  report["variance_scaling"] = scaling;
  write_json_file(fs::path(o.out) / "report.json", report);
  return kExitOk;
}

// --- census -----------------------------------------------------------------

int run_census_cmd(const Options& o, std::ostream& out) {
  const Mode mode = parse_mode(o.mode);
  if (o.ell < 1) throw ParameterError("--ell must be at least 1");
  if (mode == Mode::kCore && o.k < 2) throw ParameterError("core mode needs --k >= 2");
  Graph g;
  json config{{"mode", mode_name(mode)}, {"ell", o.ell}, {"k", o.k}};
  if (!o.graph.empty()) {
    g = load_graph(o.graph);
    config["graph"] = o.graph;
  } else {
    const std::size_t n = as_count(o.n, "--n");
    check_sampling(n, o.c);
    check_core_hypothesis(o, mode, o.c);
    g = sample_gnp(n, o.c / static_cast<double>(n), RngStream{o.seed, o.trial});
    config["n"] = n;
    config["c"] = o.c;
    config["trial"] = o.trial;
  }
  const auto records = census(g, mode, o.ell, o.k);
  std::ostringstream body;
  body << "# " << metadata("census", config, o.seed).dump() << '\n'
       << kCensusColumns << '\n';
  for (const auto& r : records) {
    body << r.v << ',' << r.ball_size << ',' << r.boundary_size << ',' << r.is_tree << ','
         << r.phi << ',' << r.phi_local << '\n';
  }
  if (o.out.empty()) {
    out << body.str();
  } else {
    OutputFile file(o.out);
    file.stream() << body.str();
    file.flush();
  }
  return kExitOk;
}

// --- mantle -----------------------------------------------------------------

int run_mantle_cmd(const Options& o) {
  MantleConfig cfg;
  cfg.mode = parse_mode(o.mode);
  cfg.k = o.k;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (cfg.mode == Mode::kCore && cfg.k < 2) throw ParameterError("core mode needs --k >= 2");
  ensure_directory(o.out);
  const fs::path csv_path = fs::path(o.out) / "mantle_trials.csv";

  json report;
  if (!o.graph.empty()) {
    const Graph g = load_graph(o.graph);
    json config{{"mode", mode_name(cfg.mode)}, {"graph", o.graph}, {"k", cfg.k}};
    const json meta = metadata("mantle", config, cfg.seed);
    const MantleSample s = mantle_sample(g, cfg.mode, cfg.k);
    OutputFile csv(csv_path);
    csv.stream() << "# " << meta.dump() << '\n' << kMantleColumns << '\n'
                 << 0 << ',' << s.max_size << ',' << s.sizes.size() << ',' << s.event_E << '\n';
    csv.flush();
    report["meta"] = meta;
    report["threshold"] = log4_threshold(g.num_vertices());
    report["max_size"] = s.max_size;
    report["event_E"] = s.event_E;
    json hist = json::object();
    std::map<std::size_t, double> h;
    for (std::size_t size : s.sizes) h[size] += static_cast<double>(size);
    for (const auto& [size, count] : h) hist[std::to_string(size)] = count;
    report["vertex_histogram"] = hist;
    if (cfg.mode == Mode::kGiant) {
      report["structure"] = labeling_object(components(g));
    } else {
      report["structure"] = core_object(kcore(g, cfg.k));
    }
    write_json_file(fs::path(o.out) / "mantle.json", report);
    return kExitOk;
  }

  cfg.n = as_count(o.n, "--n");
  cfg.c = o.c;
  cfg.trials = o.trials;
  check_sampling(cfg.n, cfg.c);
  check_core_hypothesis(o, cfg.mode, cfg.c);
  if (cfg.trials == 0) throw ParameterError("--trials must be positive");
  json config{{"mode", mode_name(cfg.mode)}, {"n", cfg.n}, {"c", cfg.c},
              {"k", cfg.k}, {"trials", cfg.trials}};
  const json meta = metadata("mantle", config, cfg.seed);
  OutputFile csv(csv_path);
  csv.stream() << "# " << meta.dump() << '\n' << kMantleColumns << '\n';
  const MantleProfile prof = mantle_profile(cfg, [&](std::size_t i, const MantleSample& s) {
    csv.stream() << i << ',' << s.max_size << ',' << s.sizes.size() << ',' << s.event_E << '\n';
    csv.flush();
  });
  report["meta"] = meta;
  report["threshold"] = prof.threshold;
  report["fraction_below_threshold"] = prof.fraction_below;
  std::size_t event = 0;
  for (auto e : prof.event_E) event += e;
  report["event_E_rate"] = static_cast<double>(event) / static_cast<double>(cfg.trials);
  json hist = json::object();
  for (const auto& [size, count] : prof.vertex_histogram) hist[std::to_string(size)] = count;
  report["vertex_histogram"] = hist;
  report["decay_fit"] = {{"base", prof.fit.base}, {"power", prof.fit.power},
                         {"points", prof.fit.points}};
  report["plain_decay_fit"] = {{"base", prof.plain_fit.base}, {"points", prof.plain_fit.points}};
  report["predicted_base"] =
      cfg.mode == Mode::kGiant ? json(prof.predicted_base) : json(nullptr);
  write_json_file(fs::path(o.out) / "mantle.json", report);
  return kExitOk;
}

// --- argument wiring --------------------------------------------------------

void add_mode(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "giant (largest component) or core (k-core)")
      ->check(CLI::IsMember({"giant", "core"}));
}

void add_seed_threads(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--threads", o.threads, "worker threads (default: $RGLAB_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_thread_count();
  CLI::App app{"rglab: random-graph laboratory for giant-component and k-core experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* sample = app.add_subcommand("sample", "sample G(n, c/n) and write its edge list");
  sample->add_option("--n", o.n, "vertex count")->required();
  sample->add_option("--c", o.c, "mean-degree parameter, p = c/n")->required();
  sample->add_option("--trial", o.trial, "stream index within the seed");
  sample->add_option("--seed", o.seed, "master seed");
  sample->add_option("--out", o.out, "output file (default: stdout)");

  auto* threshold = app.add_subcommand("threshold", "solve x P[Poisson(x) <= k-1] = 1/e");
  threshold->add_option("--k", o.k, "core order k >= 2")->required();
  threshold->add_option("--tol", o.tol, "bisection bracket width");

  auto* probe = app.add_subcommand("probe", "edge-resampling experiment (D, W, claims)");
  add_mode(probe, o);
  probe->add_option("--n", o.n, "vertex count");
  probe->add_option("--c", o.c, "mean-degree parameter");
  probe->add_option("--ell", o.ell, "locality radius l >= 1")->required();
  probe->add_option("--k", o.k, "core order (core mode)");
  probe->add_option("--trials", o.trials, "number of trials");
  probe->add_option("--pair", o.pair, "resampled pair: fixed {0,1} or uniform")
      ->check(CLI::IsMember({"fixed", "uniform"}));
  probe->add_option("--tail-grid", o.tail_grid, "radii for the |W| tail table")->delimiter(',');
  probe->add_option("--graph", o.graph, "analyse one pair on this edge-list graph");
  probe->add_option("--out", o.out, "output directory")->required();
  probe->add_flag("--force", o.force, "allow core mode with c <= c_hat_k");
  add_seed_threads(probe, o);

  auto* clt = app.add_subcommand("clt", "Monte Carlo normality of |L| or |V(K)|");
  add_mode(clt, o);
  clt->add_option("--n", o.n_grid, "comma-separated vertex counts")->delimiter(',');
  clt->add_option("--c", o.c, "mean-degree parameter");
  clt->add_option("--k", o.k, "core order (core mode)");
  clt->add_option("--ell", o.ell, "radius for Z~/Z^ evaluation (0 = off)");
  clt->add_option("--t", o.t, "truncation size (0 = ceil((4c)^l) capped at ceil((ln n)^4))");
  clt->add_option("--trials", o.trials, "trials per n (>= 100)");
  clt->add_option("--graph", o.graph, "evaluate a single edge-list graph");
  clt->add_option("--out", o.out, "output directory")->required();
  clt->add_flag("--force", o.force, "allow parameters outside the theorems' hypotheses");
  clt->add_flag("--resume", o.resume, "continue existing trials_<n>.csv files");
  add_seed_threads(clt, o);

  auto* census_cmd = app.add_subcommand("census", "per-vertex ball statistics and indicators");
  add_mode(census_cmd, o);
  census_cmd->add_option("--n", o.n, "vertex count");
  census_cmd->add_option("--c", o.c, "mean-degree parameter");
  census_cmd->add_option("--k", o.k, "core order (core mode)");
  census_cmd->add_option("--ell", o.ell, "ball radius l >= 1")->required();
  census_cmd->add_option("--trial", o.trial, "stream index within the seed");
  census_cmd->add_option("--seed", o.seed, "master seed");
  census_cmd->add_option("--graph", o.graph, "edge-list graph instead of sampling");
  census_cmd->add_option("--out", o.out, "output CSV file (default: stdout)");
  census_cmd->add_flag("--force", o.force, "allow core mode with c <= c_hat_k");

  auto* mantle = app.add_subcommand("mantle", "component structure of G - L or G - V(K)");
  add_mode(mantle, o);
  mantle->add_option("--n", o.n, "vertex count");
  mantle->add_option("--c", o.c, "mean-degree parameter");
  mantle->add_option("--k", o.k, "core order (core mode)");
  mantle->add_option("--trials", o.trials, "number of trials");
  mantle->add_option("--graph", o.graph, "profile a single edge-list graph");
  mantle->add_option("--out", o.out, "output directory")->required();
  mantle->add_flag("--force", o.force, "allow core mode with c <= c_hat_k");
  add_seed_threads(mantle, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rglab: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return run_sample(o, out);
    if (threshold->parsed()) return run_threshold(o, out);
    if (probe->parsed()) return run_probe_cmd(o, err);
    if (clt->parsed()) return run_clt_cmd(o);
    if (census_cmd->parsed()) return run_census_cmd(o, out);
    if (mantle->parsed()) return run_mantle_cmd(o);
  } catch (const ParameterError& e) {
    err << "rglab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ClaimViolation& e) {
    err << "rglab: " << e.what() << '\n';
    return kExitClaimViolation;
  } catch (const IoError& e) {
    err << "rglab: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "rglab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace rglab
