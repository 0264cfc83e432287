#include "gevreych/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gevreych {

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::string& header)
    : impl_(new Impl{std::ofstream(path)}) {
  if (!impl_->out) {
    delete impl_;
    throw std::runtime_error("cannot open output file: " + path);
  }
  impl_->out << kVersionHeader << "\n" << header << "\n";
}

CsvWriter::~CsvWriter() { delete impl_; }

std::string CsvWriter::format(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::row(const std::vector<Real>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format(values[i]);
  }
  impl_->out << line << "\n";
}

void CsvWriter::raw_row(const std::string& line) { impl_->out << line << "\n"; }

void write_inequality_csv(const std::string& path,
                          const std::vector<InequalityReport>& reports) {
  CsvWriter csv(path, "check,sigma,s,delta,delta_prime,lhs,rhs,margin,holds");
  for (const auto& r : reports) {
    std::string line = r.check;
    for (Real v : {r.sigma, r.s, r.delta, r.delta_prime, r.lhs, r.rhs, r.margin}) {
      line += ',';
      line += CsvWriter::format(v);
    }
    line += r.holds ? ",1" : ",0";
    csv.raw_row(line);
  }
}

void write_radius_csv(const std::string& path, const RadiusSeries& series) {
  CsvWriter csv(path, "t,delta_hat,delta_floor,residual,resolution_limited");
  for (const auto& s : series.samples) {
    std::string line = CsvWriter::format(s.t);
    for (Real v : {s.delta_hat, s.delta_floor, s.fit_residual}) {
      line += ',';
      line += CsvWriter::format(v);
    }
    line += s.resolution_limited ? ",1" : ",0";
    csv.raw_row(line);
  }
}

void write_continuity_csv(const std::string& path, const ContinuityReport& report) {
  CsvWriter csv(path, "epsilon,input_dist,output_dist,ratio");
  for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
    csv.row({report.epsilons[i], report.input_dists[i], report.output_dists[i],
             report.ratios[i]});
  }
}

void write_iteration_csv(const std::string& path, const PicardResult& result) {
  CsvWriter csv(path, "iter,residual_Ea,ball_distance,max_coeff");
  for (std::size_t i = 0; i < result.residuals.size(); ++i) {
    csv.row({static_cast<Real>(i + 1), result.residuals[i], result.ball_distances[i],
             result.max_coeffs[i]});
  }
}

void write_contraction_csv(const std::string& path, const ContractionResult& result) {
  CsvWriter csv(path, "trial,ratio");
  for (std::size_t i = 0; i < result.ratios.size(); ++i) {
    csv.row({static_cast<Real>(i), result.ratios[i]});
  }
}

void write_plot_series(const std::string& path, const std::vector<Real>& x,
                       const std::vector<Real>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("plot series: size mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << CsvWriter::format(x[i]) << ' ' << CsvWriter::format(y[i]) << "\n";
  }
}

void write_constants_file(const std::string& path,
                          const std::vector<ProductConstantEstimate>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"sigma", e.sigma},
                   {"s", e.s},
                   {"delta", e.delta},
                   {"n_modes", e.n_modes},
                   {"samples", e.samples},
                   {"seed", e.seed},
                   {"C_s_hat", e.C_s_hat},
                   {"Cbar_s_hat", e.Cbar_s_hat}});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open constants file: " + path);
  out << arr.dump(2) << "\n";
}

std::vector<ProductConstantEstimate> read_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read constants file: " + path);
  nlohmann::json arr;
  in >> arr;
  std::vector<ProductConstantEstimate> entries;
  for (const auto& j : arr) {
    ProductConstantEstimate e;
    e.sigma = j.at("sigma").get<Real>();
    e.s = j.at("s").get<Real>();
    e.delta = j.at("delta").get<Real>();
    e.n_modes = j.at("n_modes").get<Index>();
    e.samples = j.at("samples").get<int>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.C_s_hat = j.at("C_s_hat").get<Real>();
    e.Cbar_s_hat = j.at("Cbar_s_hat").get<Real>();
    entries.push_back(e);
  }
  return entries;
}

std::optional<ProductConstantEstimate> find_constants(
    const std::vector<ProductConstantEstimate>& entries, Real sigma, Real s) {
  for (const auto& e : entries) {
    if (e.sigma == sigma && e.s == s) return e;
  }
  return std::nullopt;
}

}  // namespace gevreych
