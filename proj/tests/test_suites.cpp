#include <doctest.h>

#include "xopkit/suites.hpp"

using namespace xop;

TEST_CASE("suite names") {
  for (Suite s : all_suites()) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("nope"));
}

TEST_CASE("default points are valid") {
  for (Family f : {Family::L1, Family::L2, Family::J1, Family::J2})
    for (int ell = 1; ell <= 3; ++ell) {
      const auto pts = default_points(f, ell);
      CHECK(pts.size() == 2);
      for (const auto& p : pts) CHECK_FALSE(violation(p));
    }
}

TEST_CASE("thread pool gives the same results as a single worker") {
  const std::vector<FamilyParams> cells{{Family::L1, 1, 2, 0}, {Family::J2, 2, 1, 3}};
  SuiteOptions opt;
  opt.nmax = 4;
  opt.ladder_nmax = 3;
  const auto one = run_checks(all_suites(), cells, opt, {}, 1);
  const auto many = run_checks(all_suites(), cells, opt, {}, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].suite == many[i].suite);
    CHECK(one[i].report.size() == many[i].report.size());
    CHECK(one[i].report.all_passed());
    CHECK(many[i].report.all_passed());
  }
}

TEST_CASE("perturbing a suite fails only that suite") {
  const std::vector<FamilyParams> cells{{Family::J1, 1, 3, 1}};
  SuiteOptions opt;
  opt.nmax = 3;
  opt.ladder_nmax = 3;
  for (Suite bad : all_suites()) {
    CAPTURE(to_string(bad));
    for (const auto& c : run_checks(all_suites(), cells, opt, {bad}, 2)) CHECK(c.report.all_passed() == (c.suite != bad));
  }
}
