/**
 * @file    acceptance.cpp
 * @brief   Acceptance gate: one pass/fail line per criterion, driven by the shared check registry
 */
#include "gmlab/suite.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr std::array<const char*, 10> kTitles{
    "supporting checks",
    "diffeomorphism residuals",
    "SO(3) and G2 equivariance",
    "Q cocycle, action law, involution, Brieskorn model",
    "normal geodesics, horizontal lifts, wiedersehen return",
    "metric matrix closed forms",
    "isotropy groups",
    "curvature reproduction",
    "freeness oracle and branched covering",
    "structural negatives",
};

}  // namespace

int main() {
  using namespace gmlab::suite;
  const SuiteConfig config;
  std::array<std::vector<ReportEntry>, 10> by_criterion;
  for (const auto* check : select("")) by_criterion[check->criterion].push_back(run_check(*check, config));

  bool all = true;
  for (int k = 1; k <= 9; ++k) {
    const auto& entries = by_criterion[k];
    int passed = 0;
    std::string failing;
    for (const auto& e : entries) {
      if (e.status == "pass") ++passed;
      else failing += " " + e.id;
    }
    const bool ok = !entries.empty() && passed == static_cast<int>(entries.size());
    all = all && ok;
    std::printf("criterion %d: %s  %s  (%d/%zu checks)%s%s\n", k, ok ? "PASS" : "FAIL", kTitles[k], passed,
                entries.size(), failing.empty() ? "" : "  failing:", failing.c_str());
    for (const auto& e : entries)
      std::printf("    %-36s %s worst %.3e tol %.1e n %d  %s\n", e.id.c_str(), e.status.c_str(), e.worst, e.tolerance,
                  e.samples, e.detail.c_str());
  }

  int support_pass = 0;
  for (const auto& e : by_criterion[0]) {
    if (e.status == "pass") ++support_pass;
    else std::printf("supporting check failed: %s  %s\n", e.id.c_str(), e.detail.c_str());
  }
  std::printf("%s: %d/%zu pass\n", kTitles[0], support_pass, by_criterion[0].size());
  all = all && support_pass == static_cast<int>(by_criterion[0].size());

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
