#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gevreych/continuity.hpp"
#include "gevreych/gevrey.hpp"
#include "gevreych/picard.hpp"
#include "gevreych/radius.hpp"

namespace gevreych {

inline constexpr const char* kVersionHeader = "# gevreych 0.1.0";

/// Minimal CSV emitter: a version header line, one header row, then rows of
/// %.17g-formatted values. Bodies are byte-identical across runs with the
/// same config and seed; only the version header line may change.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<Real>& values);
  void raw_row(const std::string& line);

  static std::string format(Real v);

 private:
  struct Impl;
  Impl* impl_;
};

void write_inequality_csv(const std::string& path,
                          const std::vector<InequalityReport>& reports);
void write_radius_csv(const std::string& path, const RadiusSeries& series);
void write_continuity_csv(const std::string& path, const ContinuityReport& report);
void write_iteration_csv(const std::string& path, const PicardResult& result);
void write_contraction_csv(const std::string& path, const ContractionResult& result);

/// Two-column plot series ("x y" per line), consumable by any plotting tool.
void write_plot_series(const std::string& path, const std::vector<Real>& x,
                       const std::vector<Real>& y);

/// Constants file: a JSON array of {sigma, s, delta, n_modes, samples, seed,
/// C_s_hat, Cbar_s_hat} entries, one per estimated cell.
void write_constants_file(const std::string& path,
                          const std::vector<ProductConstantEstimate>& entries);
std::vector<ProductConstantEstimate> read_constants_file(const std::string& path);

/// Entry lookup by (sigma, s); empty when the file lacks the cell.
std::optional<ProductConstantEstimate> find_constants(
    const std::vector<ProductConstantEstimate>& entries, Real sigma, Real s);

}  // namespace gevreych
