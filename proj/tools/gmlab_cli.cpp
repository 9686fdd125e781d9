/**
 * @file    gmlab_cli.cpp
 * @brief   Command-line harness: verify, scan, list
 */
#include "gmlab/errors.hpp"
#include "gmlab/riemann.hpp"
#include "gmlab/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

namespace suite = gmlab::suite;
namespace riemann = gmlab::riemann;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<suite::MetricParams> paired_grid(const std::vector<double>& mu, const std::vector<double>& nu) {
  if (mu.size() != nu.size()) throw UsageError("--mu and --nu must be given the same number of times");
  std::vector<suite::MetricParams> grid;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] > 0 && nu[i] > 0)) throw UsageError("metric parameters must be positive");
    grid.push_back({mu[i], nu[i]});
  }
  return grid;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& specs) {
  std::map<std::string, double> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects <check>=<value>, got '" + s + "'");
    const std::string id = s.substr(0, eq);
    const bool known = std::any_of(suite::registry().begin(), suite::registry().end(),
                                   [&](const suite::Check& c) { return c.id == id; });
    if (!known) throw UsageError("--tol names an unknown check: " + id);
    try {
      size_t used = 0;
      const double v = std::stod(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1 || !(v >= 0)) throw std::invalid_argument(s);
      out[id] = v;
    } catch (const std::logic_error&) {
      throw UsageError("--tol value is not a nonnegative number: '" + s + "'");
    }
  }
  return out;
}

json to_json(const suite::ReportEntry& e) {
  json j;
  j["id"] = e.id;
  j["anchor"] = e.anchor;
  j["criterion"] = e.criterion;
  j["status"] = e.status;
  j["worst"] = std::isfinite(e.worst) ? json(e.worst) : json(e.worst > 0 ? "inf" : "nan");
  j["samples"] = e.samples;
  j["tolerance"] = e.tolerance;
  j["detail"] = e.detail;
  return j;
}

/// Opens the output path, or returns nullptr for stdout.
std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*f) throw IoError("cannot write " + path);
  return f;
}

struct VerifyOptions {
  bool all{false};
  bool list{false};
  std::string filter;
  int jobs{1};
};

int run_verify(const suite::SuiteConfig& config, const VerifyOptions& opt) {
  if (!opt.filter.empty() && opt.all) throw UsageError("--all and --filter are mutually exclusive");
  const std::string filter = opt.all ? "" : opt.filter;
  const auto checks = suite::select(filter);
  if (checks.empty()) throw UsageError("no registered check matches '" + filter + "'");

  auto file = open_out(config.out);
  std::ostream& out = file ? *file : std::cout;

  if (opt.list) {
    for (const auto* c : checks) out << c->id << '\t' << c->anchor << '\n';
    return kExitPass;
  }

  std::vector<suite::ReportEntry> entries(checks.size());
  if (opt.jobs <= 1) {
    for (size_t i = 0; i < checks.size(); ++i) entries[i] = suite::run_check(*checks[i], config);
  } else {
    size_t next = 0;
    while (next < checks.size()) {
      std::vector<std::future<suite::ReportEntry>> batch;
      const size_t stop = std::min(checks.size(), next + static_cast<size_t>(opt.jobs));
      for (size_t i = next; i < stop; ++i)
        batch.push_back(std::async(std::launch::async, [&, i] { return suite::run_check(*checks[i], config); }));
      for (size_t i = next; i < stop; ++i) entries[i] = batch[i - next].get();
      next = stop;
    }
  }

  int failed = 0;
  for (const auto& e : entries) {
    out << to_json(e).dump() << '\n';
    if (e.status != "pass") ++failed;
    std::fprintf(stderr, "%-38s %s  worst %.3e  n %d  %.2fs\n", e.id.c_str(), e.status.c_str(), e.worst, e.samples,
                 e.wall_seconds);
  }
  out.flush();
  if (!out) throw IoError("write failed for " + (config.out.empty() ? std::string("stdout") : config.out));
  std::fprintf(stderr, "%zu checks, %d failed\n", entries.size(), failed);
  return failed ? kExitFail : kExitPass;
}

struct ScanOptions {
  std::string metric;
  int steps{20};
  bool refine{false};
};

int run_scan(const suite::SuiteConfig& config, const ScanOptions& opt) {
  const auto ids = riemann::scan_metric_ids();
  if (std::find(ids.begin(), ids.end(), opt.metric) == ids.end()) throw UsageError("unknown metric id: " + opt.metric);
  if (opt.steps < 2) throw UsageError("--steps must be at least 2");
  const suite::MetricParams P = config.grid.empty() ? suite::MetricParams{0.5, 0.5} : config.grid.front();
  if (config.grid.size() > 1) throw UsageError("scan takes a single --mu/--nu pair");

  const auto M = riemann::metric_by_id(opt.metric, P);
  const auto [lo, hi] = riemann::scan_box(opt.metric);
  std::vector<int> counts;
  for (int i = 0; i < lo.size(); ++i) counts.push_back(hi[i] > lo[i] ? opt.steps : 1);
  const auto grid = riemann::box_grid(lo, hi, counts);
  const riemann::Steps steps;

  auto file = open_out(config.out);
  std::ostream& out = file ? *file : std::cout;
  out.precision(10);
  out << "# metric=" << opt.metric << " mu=" << P.mu << " nu=" << P.nu << " metric_step=" << steps.metric
      << " christoffel_step=" << steps.christoffel << " grid=";
  for (size_t i = 0; i < counts.size(); ++i) out << (i ? "x" : "") << counts[i];
  out << '\n';
  for (int i = 0; i < lo.size(); ++i) out << 'x' << i << ',';
  out << "k_min,k_max,scalar\n";

  double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
  int skipped = 0;
  for (const auto& x : grid) {
    if (!M.contains(x)) {
      ++skipped;
      continue;
    }
    const auto r = riemann::curvature_report(M, x, steps);
    for (int i = 0; i < x.size(); ++i) out << x[i] << ',';
    out << r.k_min << ',' << r.k_max << ',' << r.scalar << '\n';
    gmin = std::min(gmin, r.k_min);
    gmax = std::max(gmax, r.k_max);
  }
  if (skipped) out << "# skipped " << skipped << " points outside the chart domain\n";
  if (opt.refine) {
    const auto e = riemann::min_max_sectional(M, grid);
    out << "# refined min=" << e.min << " max=" << e.max << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for " + config.out);
  std::fprintf(stderr, "%zu points, K in [%.6g, %.6g]\n", grid.size(), gmin, gmax);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification harness for the Gromoll-Meyer sphere and its Brieskorn models", "gmlab"};
  app.require_subcommand(1);

  suite::SuiteConfig config;
  std::vector<double> mu, nu;
  std::vector<std::string> tols;
  VerifyOptions vopt;
  ScanOptions sopt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "RNG seed")->envname("GMLAB_SEED");
    sub->add_option("--mu", mu, "mu value of a (mu, nu) pair; repeatable");
    sub->add_option("--nu", nu, "nu value of a (mu, nu) pair; repeatable");
    sub->add_option("--out", config.out, "output path, '-' or empty for stdout")->envname("GMLAB_OUT");
  };

  auto* verify = app.add_subcommand("verify", "run registered checks and emit a JSON-lines report");
  add_common(verify);
  verify->add_option("--samples", config.samples, "sample count override for sampled checks")
      ->envname("GMLAB_SAMPLES")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--filter", vopt.filter, "glob over check ids")->envname("GMLAB_FILTER");
  verify->add_option("--tol", tols, "tolerance override <check>=<value>; repeatable");
  verify->add_option("--jobs", vopt.jobs, "checks run concurrently")->envname("GMLAB_JOBS")->check(CLI::PositiveNumber);
  verify->add_flag("--all", vopt.all, "run every registered check");
  verify->add_flag("--list", vopt.list, "list matching checks with their anchors instead of running them");

  auto* scan = app.add_subcommand("scan", "curvature scan of a fixed-point-set metric, as CSV");
  add_common(scan);
  scan->add_option("metric", sopt.metric, "one of sigma2, sigma31, sigma32, l3, sigma30, p3, hemisphere")->required();
  scan->add_option("--steps", sopt.steps, "grid points per scanned coordinate")->envname("GMLAB_STEPS");
  scan->add_flag("--refine", sopt.refine, "append simplex-refined extremes as a trailing comment");

  auto* list = app.add_subcommand("list", "list registered checks and their anchors");
  std::string list_filter;
  list->add_option("--filter", list_filter, "glob over check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.grid = paired_grid(mu, nu);
    config.tolerances = parse_tolerances(tols);
    if (*verify) return run_verify(config, vopt);
    if (*scan) return run_scan(config, sopt);
    if (*list) {
      VerifyOptions o;
      o.list = true;
      o.filter = list_filter;
      return run_verify(config, o);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const gmlab::ContractViolation& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
