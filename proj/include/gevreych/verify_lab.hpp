#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gevreych/gevrey.hpp"
#include "gevreych/ladder.hpp"

namespace gevreych {

/// Outcome of one property suite: the worst-margin report per check plus
/// failure accounting across all sampled instances.
struct SuiteResult {
  std::vector<InequalityReport> worst_reports;
  long total_checks = 0;
  long failures = 0;
  std::string first_failure;  // check name of the first violated instance

  void merge(const SuiteResult& other);
};

struct LabOptions {
  std::vector<Real> sigma_list = {1.0, 1.5, 2.0};
  std::vector<Real> s_list = {1.0, 2.0};
  std::vector<Real> delta_list = {0.1, 0.4};
  int samples = 1000;
  Index n_modes = 128;
  std::uint64_t seed = 20260810;
  Real p2_symbol_scale = 1.0;  // fault-injection hook
};

/// Embedding, derivative and multiplier inequalities over random analytic
/// fields, one cell per (sigma, s, delta). Every instance of these checks is
/// a theorem; any failure is an implementation defect.
SuiteResult run_inequality_suite(const LabOptions& opts);

/// Grid-search cross-check of the closed-form sup of e^{-2z} z^(2 sigma) for
/// sigma in [1, 4] at 0.25 steps (tolerance 1e-8).
SuiteResult run_sup_g_suite();

/// Scale inequality and ladder integral bound over a 200-point
/// (sigma, delta, t, a) grid, with t reaching 0.999 of the admissible window.
SuiteResult run_ladder_suite(int quadrature_points = 64);

}  // namespace gevreych
