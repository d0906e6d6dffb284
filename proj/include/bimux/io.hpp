#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bimux/schmidt.hpp"
#include "bimux/shaping.hpp"

// Result serialization: JSON for reports and traces, CSV for curves and
// grids. Every file embeds the resolved configuration it was produced from.

namespace bimux {

namespace detail {

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << std::setprecision(12);
  return out;
}

inline std::string join_warnings(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& m : w) {
    if (!s.empty()) s += "; ";
    s += m;
  }
  return s;
}

inline void csv_preamble(std::ofstream& out, const nlohmann::json& config) {
  out << "# config: " << config.dump() << "\n";
  out << "# units: frequencies in Gamma3\n";
}

}  // namespace detail

inline void write_curve_csv(const std::string& path, const SweepCurve& curve,
                            const nlohmann::json& config,
                            const std::string& param_name = "param") {
  auto out = detail::open_out(path);
  detail::csv_preamble(out, config);
  out << "# curve: " << curve.label << "\n";
  out << param_name << ",S,K,warnings\n";
  for (const auto& p : curve.points)
    out << p.param << "," << p.S << "," << p.K << ","
        << detail::join_warnings(p.warnings) << "\n";
}

// One CSV holding several aligned curves: param followed by S/K pairs.
inline void write_multi_curve_csv(const std::string& path,
                                  const std::vector<SweepCurve>& curves,
                                  const nlohmann::json& config,
                                  const std::string& param_name = "param") {
  if (curves.empty()) throw std::invalid_argument("no curves to write");
  auto out = detail::open_out(path);
  detail::csv_preamble(out, config);
  out << param_name;
  for (const auto& c : curves) out << ",S_" << c.label << ",K_" << c.label;
  out << ",warnings\n";
  const std::size_t n = curves.front().points.size();
  for (const auto& c : curves)
    if (c.points.size() != n)
      throw std::invalid_argument("curves are not aligned");
  for (std::size_t i = 0; i < n; ++i) {
    out << curves.front().points[i].param;
    std::string warn;
    for (const auto& c : curves) {
      out << "," << c.points[i].S << "," << c.points[i].K;
      const std::string w = detail::join_warnings(c.points[i].warnings);
      if (!w.empty()) warn += (warn.empty() ? "" : "; ") + c.label + ": " + w;
    }
    out << "," << warn << "\n";
  }
}

// Spectral density |F|^2 with frequency row/column headers.
inline void write_heatmap_csv(const std::string& path,
                              const JointSpectralMatrix& f,
                              const nlohmann::json& config) {
  auto out = detail::open_out(path);
  detail::csv_preamble(out, config);
  const auto x = f.grid.points();
  out << "d_omega_s\\d_omega_i";
  for (double w : x) out << "," << w;
  out << "\n";
  for (int j = 0; j < f.grid.n_points; ++j) {
    out << x[j];
    for (int k = 0; k < f.grid.n_points; ++k)
      out << "," << std::norm(f.values(j, k));
    out << "\n";
  }
}

inline void write_schmidt_json(const std::string& path,
                               const SchmidtResult& r,
                               const std::vector<std::string>& warnings,
                               const nlohmann::json& config,
                               double elapsed_seconds) {
  nlohmann::json j;
  j["config"] = config;
  j["lambdas"] = r.lambdas;
  j["S"] = r.entropy_S;
  j["K"] = r.schmidt_K;
  j["warnings"] = warnings;
  j["units"] = "S in bits; frequencies in Gamma3";
  j["elapsed_seconds"] = elapsed_seconds;
  auto out = detail::open_out(path);
  out << j.dump(2) << "\n";
}

// One file per mode index: columns omega, re, im, abs2.
inline void write_mode_csv(const std::string& path,
                           const std::vector<double>& omega,
                           const Eigen::MatrixXcd& modes, int index,
                           const nlohmann::json& config) {
  if (index < 0 || index >= modes.cols())
    throw std::invalid_argument("mode index out of range");
  auto out = detail::open_out(path);
  detail::csv_preamble(out, config);
  out << "omega,re,im,abs2\n";
  for (Eigen::Index j = 0; j < modes.rows(); ++j) {
    const std::complex<double> v = modes(j, index);
    out << omega[j] << "," << v.real() << "," << v.imag() << ","
        << std::norm(v) << "\n";
  }
}

inline void write_optimize_json(const std::string& path,
                                const ShapingResult& res,
                                const nlohmann::json& config) {
  nlohmann::json j;
  j["config"] = config;
  auto shifts = nlohmann::json::array();
  for (const auto& [s, i] : res.best.shifts) shifts.push_back({s, i});
  j["best_shifts"] = shifts;
  j["S"] = res.S;
  j["K"] = res.K;
  j["budget_exhausted"] = res.budget_exhausted;
  auto trace = nlohmann::json::array();
  for (const auto& t : res.trace)
    trace.push_back({{"eval", t.eval}, {"x", t.x}, {"objective", t.objective}});
  j["trace"] = trace;
  j["units"] = "S in bits; frequencies in Gamma3";
  auto out = detail::open_out(path);
  out << j.dump(2) << "\n";
}

}  // namespace bimux
