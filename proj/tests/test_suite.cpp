/**
 * @file    test_suite.cpp
 * @brief   Check registry, filtering and determinism
 */
#include "gmlab/suite.hpp"

#include <doctest.h>

#include <set>

using namespace gmlab::suite;

TEST_CASE("ids are unique and every criterion is covered") {
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK(c.criterion >= 0);
    CHECK(c.criterion <= 9);
    criteria.insert(c.criterion);
  }
  for (int k = 1; k <= 9; ++k) CHECK(criteria.count(k) == 1);
}

TEST_CASE("glob filtering") {
  CHECK(glob_match("diffeo.*", "diffeo.psi_residual"));
  CHECK_FALSE(glob_match("diffeo.*", "actions.cocycle"));
  CHECK(glob_match("*", "anything"));
  CHECK(select("").size() == registry().size());
  CHECK(select("riemann.l3").size() == 1);
  CHECK(select("nothing.*").empty());
}

TEST_CASE("identical configurations give identical entries") {
  SuiteConfig config;
  config.samples = 50;
  for (const char* id : {"diffeo.psi_residual", "actions.cocycle", "quotients.phi"}) {
    const auto* c = select(id).front();
    const auto a = run_check(*c, config), b = run_check(*c, config);
    CHECK(a.status == "pass");
    CHECK(a.worst == b.worst);
    CHECK(a.detail == b.detail);
    CHECK(a.samples == b.samples);
  }
}

TEST_CASE("tolerance overrides reach the check") {
  SuiteConfig config;
  config.samples = 20;
  config.tolerances["diffeo.psi_residual"] = 1e-30;
  const auto e = run_check(*select("diffeo.psi_residual").front(), config);
  CHECK(e.tolerance == 1e-30);
  CHECK(e.status == "fail");
}

TEST_CASE("a configured grid replaces the default grid") {
  SuiteConfig config;
  config.grid = {{1.0, 0.5}};
  const auto e = run_check(*select("riemann.l3").front(), config);
  CHECK(e.status == "pass");
}
