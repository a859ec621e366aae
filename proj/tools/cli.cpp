// Copyright 2026 The csskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "csskit/config.hpp"
#include "csskit/css_solver.hpp"
#include "csskit/error.hpp"
#include "csskit/gilbert.hpp"
#include "csskit/locc_search.hpp"
#include "csskit/metrics.hpp"
#include "csskit/parallel.hpp"
#include "csskit/rng.hpp"
#include "csskit/state_io.hpp"

namespace csskit::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string demo;
  std::string cut;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
  std::size_t jobs = 1;

  std::size_t probes = 10000;
  std::size_t iters = 5000;
  std::size_t restarts = 5;
  std::string mode = "pairwise";
  std::size_t corrections = 10;
  std::string trace;
  std::string env = "werner:1/3";
  std::size_t evals = 2000;
  std::string dims = "2x2";
  std::size_t count = 1;
  std::string out_dir;
};

std::vector<std::size_t> parse_index_list(const std::string& text, const char* what, char sep) {
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) next = text.size();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + next, value);
    if (ec != std::errc{} || ptr != text.data() + next)
      throw Error(ErrorKind::InvalidArgument, std::string(what) + ": cannot parse '" + text + "'");
    values.push_back(value);
    pos = next + 1;
  }
  return values;
}

Dims parse_dims(const std::string& text) {
  const char sep = text.find(',') != std::string::npos ? ',' : 'x';
  auto dims = parse_index_list(text, "--dims", sep);
  if (std::ranges::any_of(dims, [](std::size_t d) { return d < 1; }))
    throw Error(ErrorKind::InvalidArgument, "--dims: every dimension must be >= 1");
  return dims;
}

DensityMatrix load_state(const Options& o) {
  if (!o.demo.empty() && !o.input.empty())
    throw Error(ErrorKind::InvalidArgument, "use either --input or --demo, not both");
  if (!o.demo.empty()) return named_state(o.demo);
  if (o.input.empty()) throw Error(ErrorKind::InvalidArgument, "missing --input PATH or --demo NAME");
  return read_state_file(o.input);
}

Bipartition load_cut(const Options& o, const DensityMatrix& rho) {
  const auto n = rho.dims().size();
  if (o.cut.empty()) return Bipartition::first_vs_rest(n);
  return Bipartition::from_side_a(parse_index_list(o.cut, "--cut", ','), n);
}

double resolve_tol(const Options& o) {
  if (o.tol) {
    if (!(*o.tol > 0.0) || !std::isfinite(*o.tol))
      throw Error(ErrorKind::InvalidArgument, "--tol must be a positive real");
    return *o.tol;
  }
  return tolerance_from_env().value_or(kCssTol);
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()}, {"matrix", matrix_json(rho.matrix())}};
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  const bool real = m.imag().cwiseAbs().maxCoeff() < 1e-15;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (real) {
        out << ' ' << std::setw(15) << m(i, j).real();
      } else {
        std::ostringstream cell;
        cell.precision(out.precision());
        cell << m(i, j).real() << (m(i, j).imag() < 0 ? "-" : "+") << std::abs(m(i, j).imag()) << "i";
        out << ' ' << std::setw(30) << cell.str();
      }
    }
    out << '\n';
  }
}

// Sends command output to --out when given, otherwise to stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

json iterations_json(const std::vector<IterationRecord>& iterations) {
  json out = json::array();
  for (const auto& it : iterations)
    out.push_back({{"spectrum_in", it.spectrum_in}, {"n", it.n}, {"r", it.r}, {"shift", it.shift}});
  return out;
}

json verification_json(const VerificationReport& v) {
  json out = {{"passed", v.passed()},
              {"commutator_hs", v.commutator_hs},
              {"css_min_eigenvalue", v.css_min_eigenvalue},
              {"css_pt_min_eigenvalue", v.css_pt_min_eigenvalue},
              {"case", to_string(v.formula.case_id)},
              {"worst_descent", v.worst_descent},
              {"probes", v.probes},
              {"failures", v.failures}};
  out["case_formula"] = v.formula.distance_sq ? json(*v.formula.distance_sq) : json(nullptr);
  out["formula_gap"] = v.formula_gap ? json(*v.formula_gap) : json(nullptr);
  return out;
}

int cmd_css(const Options& o, std::ostream& out) {
  const auto rho = load_state(o);
  const auto cut = load_cut(o, rho);
  const auto result = closest_separable(rho, cut, resolve_tol(o));
  const auto report = verify_result(rho, cut, result, o.seed);
  Sink sink(o.out, out);
  if (o.json) {
    json doc = {{"css", state_json(result.css)},
                {"distance_sq", result.distance_sq},
                {"label", to_string(result.label)},
                {"iterations", iterations_json(result.iterations)},
                {"verification", verification_json(report)}};
    *sink << doc.dump(2) << '\n';
    return kOk;
  }
  auto& s = *sink;
  s << std::setprecision(12);
  s << "label: " << to_string(result.label) << '\n';
  s << "distance_sq: " << result.distance_sq << '\n';
  s << "iterations: " << result.iterations.size() << '\n';
  for (std::size_t k = 0; k < result.iterations.size(); ++k) {
    const auto& it = result.iterations[k];
    s << "  pass " << k + 1 << ": N=" << it.n << " r=" << it.r << " shift=" << it.shift << '\n';
  }
  s << "css:\n";
  print_matrix(s, result.css.matrix());
  s << "verification: " << (report.passed() ? "passed" : "FAILED") << " (case "
    << to_string(report.formula.case_id) << ", commutator " << report.commutator_hs << ")\n";
  for (const auto& f : report.failures) s << "  " << f << '\n';
  return kOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const auto rho = load_state(o);
  const auto cut = load_cut(o, rho);
  const double neg = negativity(rho, cut);
  const double paper_neg = paper_negativity(rho, cut);
  const double lb = lower_bound(rho, cut);
  const double exact = closest_separable(rho, cut, resolve_tol(o)).distance_sq;
  const bool tight = std::abs(lb - exact) <= 1e-9;
  Sink sink(o.out, out);
  if (o.json) {
    json doc = {{"negativity", neg}, {"paper_negativity", paper_neg}, {"lower_bound", lb},
                {"min_hsd", exact},  {"tight", tight}};
    *sink << doc.dump(2) << '\n';
    return kOk;
  }
  auto& s = *sink;
  s << std::setprecision(12) << "negativity: " << neg << '\n'
    << "paper_negativity: " << paper_neg << '\n'
    << "lower_bound: " << lb << '\n'
    << "min_hsd: " << exact << '\n'
    << "tight: " << (tight ? "true" : "false") << '\n';
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto rho = load_state(o);
  const auto cut = load_cut(o, rho);
  const auto result = closest_separable(rho, cut, resolve_tol(o));
  const auto w = build_witness(rho, result.css);
  const double on_rho = eval_witness(w, rho);
  const double on_css = eval_witness(w, result.css);
  Rng rng(o.seed);
  double probe_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < o.probes; ++k)
    probe_min = std::min(probe_min, eval_witness(w, random_cut_product_pure(rho.dims(), cut, rng)));
  Sink sink(o.out, out);
  if (o.json) {
    json doc = {{"witness", matrix_json(w.w)},
                {"tr_w_rho", on_rho},
                {"tr_w_css", on_css},
                {"probes", o.probes}};
    doc["probe_min"] = o.probes > 0 ? json(probe_min) : json(nullptr);
    *sink << doc.dump(2) << '\n';
    return kOk;
  }
  auto& s = *sink;
  s << std::setprecision(12) << "witness:\n";
  print_matrix(s, w.w);
  s << "tr_w_rho: " << on_rho << '\n' << "tr_w_css: " << on_css << '\n';
  if (o.probes > 0) s << "probe_min (" << o.probes << " product states): " << probe_min << '\n';
  return kOk;
}

int cmd_gilbert(const Options& o, std::ostream& out) {
  const auto rho = load_state(o);
  const auto cut = load_cut(o, rho);
  GilbertOptions options;
  options.iters = o.iters;
  options.restarts = o.restarts;
  options.corrections = o.corrections;
  options.seed = o.seed;
  options.mode = o.mode == "plain" ? GilbertMode::Plain : GilbertMode::Pairwise;
  const auto trace = gilbert_css(rho, cut, options);
  if (!o.trace.empty()) {
    std::ofstream csv(o.trace);
    if (!csv) throw Error(ErrorKind::Io, "cannot open '" + o.trace + "' for writing");
    write_trace_csv(csv, trace);
  }
  const double upper = trace.records.back().distance_sq_upper;
  const auto bd = cut.bipartite_dims(rho.dims());
  const bool exact_available = bd[0] * bd[1] <= 6;
  std::optional<double> exact;
  if (exact_available) exact = closest_separable(rho, cut, resolve_tol(o)).distance_sq;

  Sink sink(o.out, out);
  if (o.json) {
    json doc = {{"iters", trace.records.size()},
                {"distance_sq_upper", upper},
                {"commutator_hs", trace.records.back().commutator_hs},
                {"sigma", state_json(trace.sigma)}};
    doc["min_hsd"] = exact ? json(*exact) : json(nullptr);
    doc["gap"] = exact ? json(upper - *exact) : json(nullptr);
    *sink << doc.dump(2) << '\n';
    return kOk;
  }
  auto& s = *sink;
  s << std::setprecision(12) << "iterations: " << trace.records.size() << '\n'
    << "distance_sq_upper: " << upper << '\n'
    << "commutator_hs: " << trace.records.back().commutator_hs << '\n';
  if (exact) s << "min_hsd: " << *exact << '\n' << "gap: " << upper - *exact << '\n';
  if (!o.trace.empty()) s << "trace: " << o.trace << '\n';
  return kOk;
}

DensityMatrix resolve_env(const Options& o) {
  if (o.env == "product-random") {
    Rng rng(o.seed, 0x656e76);
    return random_product_mixed({2, 2}, rng);
  }
  return named_state(o.env);
}

json locc_report_json(const LoccSearchReport& r) {
  return {{"seed", r.seed},
          {"restarts", r.restarts},
          {"evals", r.evals},
          {"baseline_min_hsd", r.baseline_min_hsd},
          {"best_value", r.best_value},
          {"best_params", r.best_params},
          {"best_output_spectrum", r.best_output_spectrum},
          {"violation", r.violation},
          {"invalid_css_evals", r.invalid_css_evals}};
}

int cmd_locc_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto rho = load_state(o);
  const auto env = resolve_env(o);
  LoccSearchConfig config;
  config.restarts = o.restarts;
  config.evals = o.evals;
  config.jobs = o.jobs;
  const auto report = locc_search(rho, env, config, o.seed);
  Sink sink(o.out, out);
  *sink << locc_report_json(report).dump(2) << '\n';
  if (report.violation) {
    err << "VIOLATION: search found min_hsd " << std::setprecision(17) << report.best_value
        << " above the input value " << report.baseline_min_hsd << "\n";
    return kViolation;
  }
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  if (o.count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be >= 1");
  const auto dims = parse_dims(o.dims);
  const std::filesystem::path dir = o.out_dir.empty() ? (o.out.empty() ? "." : o.out) : o.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> paths(o.count);
  parallel_for(o.count, o.jobs, [&](std::size_t k) {
    Rng rng(o.seed, k);
    std::ostringstream name;
    name << "state_" << std::setw(4) << std::setfill('0') << k << ".json";
    paths[k] = dir / name.str();
    write_state_file(paths[k], random_state(dims, rng));
  });
  for (const auto& p : paths) out << p.string() << '\n';
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "State file (JSON)");
  sub->add_option("--demo", o.demo, "Named state instead of a file: bell, ghz, w, werner:P");
  sub->add_option("--cut", o.cut, "Comma-separated side-A subsystem indices (default 0)");
  sub->add_option("--tol", o.tol, "Solver tolerance (overrides CSSKIT_TOL)");
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_flag("--json", o.json, "Emit JSON");
  sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
  sub->add_option("--jobs", o.jobs, "Worker threads for corpus-level work")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"csskit: closest separable states and entanglement diagnostics", "csskit"};
  app.require_subcommand(1);

  auto* css = app.add_subcommand("css", "Closest separable state, distance and verification");
  add_common(css, o);

  auto* metrics = app.add_subcommand("metrics", "Negativity, lower bound and exact distance");
  add_common(metrics, o);

  auto* witness = app.add_subcommand("witness", "Optimal entanglement witness");
  add_common(witness, o);
  witness->add_option("--probes", o.probes, "Random product states to test the witness on");

  auto* gilbert = app.add_subcommand("gilbert", "Gilbert upper bound and commutator trace");
  add_common(gilbert, o);
  gilbert->add_option("--iters", o.iters, "Iterations")->check(CLI::PositiveNumber);
  gilbert->add_option("--restarts", o.restarts, "Random starts of the product-state search");
  gilbert->add_option("--mode", o.mode, "pairwise or plain")
      ->check(CLI::IsMember({"pairwise", "plain"}));
  gilbert->add_option("--corrections", o.corrections, "Pairwise corrections per iteration");
  gilbert->add_option("--trace", o.trace, "CSV trace path");

  auto* locc = app.add_subcommand("locc-search", "Search local dilations for a distance increase");
  add_common(locc, o);
  locc->add_option("--env", o.env, "Environment state: werner:P, bell, max_mixed:2x2, product-random");
  locc->add_option("--restarts", o.restarts, "Nelder-Mead restarts")->check(CLI::PositiveNumber);
  locc->add_option("--evals", o.evals, "Evaluations per restart")->check(CLI::PositiveNumber);
  locc->callback([&] {
    if (locc->count("--restarts") == 0) o.restarts = LoccSearchConfig{}.restarts;
  });

  auto* random = app.add_subcommand("random", "Write random density matrices");
  add_common(random, o);
  random->add_option("--dims", o.dims, "Subsystem dimensions, e.g. 2x2 or 2x3");
  random->add_option("--count", o.count, "Number of states");
  random->add_option("--out-dir", o.out_dir, "Output directory (default --out or .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*css) return cmd_css(o, out);
    if (*metrics) return cmd_metrics(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*gilbert) return cmd_gilbert(o, out);
    if (*locc) return cmd_locc_search(o, out, err);
    if (*random) return cmd_random(o, out);
  } catch (const InvalidCssError& e) {
    err << "error: " << e.what() << "\n  min eigenvalue of the candidate: " << e.min_eigenvalue()
        << "\n  passes: " << e.iterations().size() << '\n';
    return kInvalidCss;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::DegenerateInput && *witness) return kSeparableInput;
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"csskit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace csskit::cli
