#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "bimux/config.hpp"
#include "bimux/io.hpp"
#include "bimux/shaping.hpp"

// Bundled reproduction scenarios. Each preset runs a fixed sweep or
// decomposition at the library defaults and writes plot-ready CSV/JSON
// artifacts. Sweeps use the 512-point grid; quoted S/K golden values are
// tied to the +-400 Gamma3 window convention.

namespace bimux {

inline std::vector<double> dq_range(double lo, double hi, double step) {
  std::vector<double> v;
  for (double x = lo; x <= hi + 1e-9; x += step) v.push_back(x);
  return v;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig2a", "fig2b", "fig2c", "fig3a", "fig3bcd", "fig4"};
  return names;
}

// Runs one preset into out_dir; returns the files written.
inline std::vector<std::string> run_preset(const std::string& name,
                                           const std::string& out_dir,
                                           const RunConfig& base) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  auto path = [&](const std::string& f) {
    written.push_back((fs::path(out_dir) / f).string());
    return written.back();
  };
  const PhysicalParams& pp = base.physical;
  const FrequencyGrid sweep_grid{base.grid.half_width, 512};

  if (name == "fig2a") {
    // two-cell anti-correlation pair versus dq, one curve per temperature
    SweepSpec spec;
    spec.scenario = SweepScenario::TemperatureFamily;
    spec.family = GeometryFamily::AntiCorrelation;
    spec.n_mp = 2;
    spec.dq_values = dq_range(0.0, 200.0, 10.0);
    spec.temperatures = {100.0, 300.0, 500.0};
    const auto curves = run_sweep(spec, sweep_grid, pp);
    for (std::size_t i = 0; i < curves.size(); ++i) {
      RunConfig echo = base;
      echo.physical.temperature = spec.temperatures[i];
      write_curve_csv(path("fig2a_T" +
                           std::to_string(static_cast<int>(
                               spec.temperatures[i])) +
                           ".csv"),
                      curves[i], echo.resolved(), "dq");
    }
  } else if (name == "fig2b") {
    // the four multiplexing directions at the base temperature
    SweepSpec spec;
    spec.scenario = SweepScenario::DirectionFamily;
    spec.n_mp = 2;
    spec.dq_values = dq_range(0.0, 200.0, 10.0);
    const auto curves = run_sweep(spec, sweep_grid, pp);
    for (const auto& c : curves)
      write_curve_csv(path("fig2b_" + c.label + ".csv"), c, base.resolved(),
                      "dq");
  } else if (name == "fig2c") {
    // spectral density heatmaps of the four directions at dq = 120
    const DerivedParams dp = derive(pp);
    for (auto fam : {GeometryFamily::AntiCorrelation,
                     GeometryFamily::Correlation, GeometryFamily::IdlerAxis,
                     GeometryFamily::SignalAxis}) {
      RunConfig echo = base;
      echo.geometry = {fam, 120.0, 2, std::nullopt};
      const JointSpectralMatrix f =
          build_jsa(sweep_grid, make_shifts(echo.geometry), dp, pp);
      write_heatmap_csv(path("fig2c_" + std::string(family_name(fam)) +
                             ".csv"),
                        f, echo.resolved());
    }
  } else if (name == "fig3a") {
    // S and K versus cell count for three neighbour spacings
    SweepSpec spec;
    spec.scenario = SweepScenario::CellCountFamily;
    spec.family = GeometryFamily::AntiCorrelation;
    spec.dq_values = {30.0, 60.0, 120.0};
    spec.n_mp_values = {2, 3, 4, 5, 6};
    const auto curves = run_sweep(spec, sweep_grid, pp);
    for (std::size_t i = 0; i < curves.size(); ++i)
      write_curve_csv(path("fig3a_dq" +
                           std::to_string(static_cast<int>(
                               spec.dq_values[i])) +
                           ".csv"),
                      curves[i], base.resolved(), "n_mp");
  } else if (name == "fig3bcd") {
    // eigenvalue spectra at dq = 120 and the first four mode densities
    const DerivedParams dp = derive(pp);
    const auto omega = sweep_grid.points();
    for (int n_mp : {2, 3, 4, 5}) {
      RunConfig echo = base;
      echo.geometry = {GeometryFamily::AntiCorrelation, 120.0, n_mp,
                       std::nullopt};
      const JointSpectralMatrix f =
          build_jsa(sweep_grid, make_shifts(echo.geometry), dp, pp);
      const SchmidtResult r = schmidt_decompose(f, n_mp <= 3 ? 4 : 0);
      auto out = detail::open_out(
          path("fig3b_lambdas_N" + std::to_string(n_mp) + ".csv"));
      detail::csv_preamble(out, echo.resolved());
      out << "n,lambda\n";
      for (std::size_t i = 0; i < r.lambdas.size(); ++i)
        out << i + 1 << "," << r.lambdas[i] << "\n";
      out.close();
      if (n_mp <= 3) {
        for (int m = 0; m < 4 && m < r.modes_s.cols(); ++m) {
          write_mode_csv(path("fig3cd_psi_N" + std::to_string(n_mp) + "_n" +
                              std::to_string(m + 1) + ".csv"),
                         omega, r.modes_s, m, echo.resolved());
          write_mode_csv(path("fig3cd_phi_N" + std::to_string(n_mp) + "_n" +
                              std::to_string(m + 1) + ".csv"),
                         omega, r.modes_i, m, echo.resolved());
        }
      }
    }
  } else if (name == "fig4") {
    // plus / cross / octagon placements: three aligned S(dq) curves
    SweepSpec spec;
    spec.scenario = SweepScenario::ShapeFamily;
    spec.dq_values = dq_range(0.0, 90.0, 5.0);
    const auto curves = run_sweep(spec, sweep_grid, pp);
    write_multi_curve_csv(path("fig4_shapes.csv"), curves, base.resolved(),
                          "dq");
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return written;
}

}  // namespace bimux
