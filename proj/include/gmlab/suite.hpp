/**
 * @file    suite.hpp
 * @brief   Registry of verification checks shared by the command-line harness and the acceptance gate
 */
#pragma once

#include "gmlab/numerics.hpp"
#include "gmlab/sp2.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gmlab::suite {

using sp2::MetricParams;

struct SuiteConfig {
  std::uint64_t seed{42};
  int samples{0};  ///< 0 keeps each check's default count
  std::map<std::string, double> tolerances;
  std::vector<MetricParams> grid;  ///< empty selects each check's default grid
  std::string out;
};

class CheckContext {
 public:
  CheckContext(const SuiteConfig& config, std::string id, double tolerance);

  const std::string& id() const { return id_; }
  double tol() const { return tol_; }
  /// Stream keyed by (seed, check id, label).
  numerics::Rng rng(const std::string& label = "") const;
  int count(int fallback) const;
  std::vector<MetricParams> grid(const std::vector<MetricParams>& fallback) const;

 private:
  const SuiteConfig& config_;
  std::string id_;
  double tol_;
};

struct Outcome {
  bool pass{false};
  double worst{0};
  int samples{0};
  std::string detail;
};

struct Check {
  std::string id;
  std::string anchor;
  int criterion{0};  ///< acceptance criterion 1..9, 0 for supporting checks
  double tolerance{0};
  std::function<Outcome(const CheckContext&)> run;
};

const std::vector<Check>& registry();

bool glob_match(const std::string& pattern, const std::string& id);
std::vector<const Check*> select(const std::string& filter);

struct ReportEntry {
  std::string id;
  std::string anchor;
  int criterion{0};
  std::string status;
  double worst{0};
  int samples{0};
  double tolerance{0};
  std::string detail;
  double wall_seconds{0};
};

ReportEntry run_check(const Check& check, const SuiteConfig& config);

/// 5 × 5 grid of (μ, ν) values used when no grid is configured.
std::vector<MetricParams> default_grid();

}  // namespace gmlab::suite
