#include "gevreych/verify_lab.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "gevreych/parallel.hpp"
#include "gevreych/rng.hpp"

namespace gevreych {

namespace {

/// Keeps the worst-margin instance per check name.
class WorstTracker {
 public:
  void add(const InequalityReport& r) {
    ++total_;
    if (!r.holds) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = r.check;
    }
    auto it = worst_.find(r.check);
    if (it == worst_.end() || r.margin < it->second.margin) {
      worst_[r.check] = r;
    }
  }

  SuiteResult result() const {
    SuiteResult out;
    out.total_checks = total_;
    out.failures = failures_;
    out.first_failure = first_failure_;
    for (const auto& [name, rep] : worst_) out.worst_reports.push_back(rep);
    return out;
  }

 private:
  std::map<std::string, InequalityReport> worst_;
  long total_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

}  // namespace

void SuiteResult::merge(const SuiteResult& other) {
  total_checks += other.total_checks;
  failures += other.failures;
  if (first_failure.empty()) first_failure = other.first_failure;
  worst_reports.insert(worst_reports.end(), other.worst_reports.begin(),
                       other.worst_reports.end());
}

SuiteResult run_inequality_suite(const LabOptions& opts) {
  WorstTracker tracker;
  std::mutex mu;
  for (Real sigma : opts.sigma_list) {
    for (Real s : opts.s_list) {
      for (Real delta : opts.delta_list) {
        const GevreyParams p{sigma, delta, s};
        const std::uint64_t cell_seed =
            split_seed(opts.seed, "cell_" + std::to_string(sigma) + "_" + std::to_string(s) +
                                      "_" + std::to_string(delta));
        std::vector<std::vector<InequalityReport>> results(
            static_cast<std::size_t>(opts.samples));
        parallel_for(static_cast<std::size_t>(opts.samples), [&](std::size_t i) {
          const SpectralField f =
              random_gevrey_field(p, 0.5, opts.n_modes, split_seed(cell_seed, i));
          std::vector<InequalityReport> local;

          // Embeddings: weaker spaces by lowering delta, lowering s, raising sigma.
          local.push_back(check_embedding(f, p, GevreyParams{sigma, 0.5 * delta, s}));
          local.push_back(check_embedding(f, p, GevreyParams{sigma, delta, s - 1.0}));
          local.push_back(check_embedding(f, p, GevreyParams{sigma + 0.5, delta, s}));

          // Derivative estimate at delta' = delta / 2.
          local.push_back(check_derivative_estimate(f, sigma, s, delta, 0.5 * delta));

          // Multiplier bounds (with the optional injected fault).
          MultiplierBoundOptions mopts;
          mopts.p2_symbol_scale = opts.p2_symbol_scale;
          for (auto& r : check_multiplier_bounds(f, p, mopts)) local.push_back(std::move(r));

          results[i] = std::move(local);
        });
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& sample_reports : results) {
          for (const auto& r : sample_reports) tracker.add(r);
        }
      }
    }
  }
  return tracker.result();
}

SuiteResult run_sup_g_suite() {
  WorstTracker tracker;
  for (int i = 0; i <= 12; ++i) {
    const Real sigma = 1.0 + 0.25 * i;
    const Real closed = std::exp(-2.0 * sigma) * std::pow(sigma, 2.0 * sigma);
    const GridSearchResult grid = grid_search_g(sigma);
    InequalityReport r = make_report("sup_g_grid_match", sigma,
                                     std::numeric_limits<Real>::quiet_NaN(),
                                     std::numeric_limits<Real>::quiet_NaN(),
                                     std::numeric_limits<Real>::quiet_NaN(),
                                     std::abs(grid.max_value - closed), 1e-8);
    tracker.add(r);
    InequalityReport argm = make_report("sup_g_argmax", sigma,
                                        std::numeric_limits<Real>::quiet_NaN(),
                                        std::numeric_limits<Real>::quiet_NaN(),
                                        std::numeric_limits<Real>::quiet_NaN(),
                                        std::abs(grid.argmax - sigma), 1e-4);
    tracker.add(argm);
  }
  return tracker.result();
}

SuiteResult run_ladder_suite(int quadrature_points) {
  WorstTracker tracker;
  const std::vector<Real> sigmas = {1.0, 1.5, 2.0, 2.5, 3.0};
  const std::vector<Real> deltas = {0.05, 0.3, 0.6, 0.9};
  const std::vector<Real> a_values = {0.7, 1.3};
  const std::vector<Real> fractions = {0.0, 0.25, 0.5, 0.9, 0.999};

  struct Case {
    Real sigma, delta, a, frac;
  };
  std::vector<Case> cases;
  for (Real sg : sigmas)
    for (Real d : deltas)
      for (Real a : a_values)
        for (Real fr : fractions) cases.push_back({sg, d, a, fr});

  std::vector<InequalityReport> scale(cases.size()), integral(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const Real window = c.a * std::pow(1.0 - c.delta, c.sigma) / (std::pow(2.0, c.sigma) - 1.0);
    const Real t = c.frac * window;
    scale[i] = check_scale_inequality(c.delta, t, c.a, c.sigma);
    integral[i] = check_ladder_integral(c.delta, t, c.a, c.sigma, quadrature_points).report;
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    tracker.add(scale[i]);
    tracker.add(integral[i]);
  }
  return tracker.result();
}

}  // namespace gevreych
