#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bimux/spectral.hpp"

// Frequency-shift geometries for multiplexed ensembles and the composite
// spectral function: an unweighted coherent sum of shifted copies of the
// per-cell amplitude. Normalization is applied at the matrix level (see
// schmidt.hpp), not here.

namespace bimux {

struct ShiftSet {
  // (delta_omega_s, delta_omega_i) per ensemble, Gamma3 units.
  std::vector<std::pair<double, double>> shifts;

  int n_mp() const { return static_cast<int>(shifts.size()); }

  void validate() const {
    if (shifts.empty())
      throw std::invalid_argument("ShiftSet: needs at least one ensemble");
    for (const auto& [s, i] : shifts)
      if (!std::isfinite(s) || !std::isfinite(i))
        throw std::invalid_argument("ShiftSet: shifts must be finite");
  }
};

enum class GeometryFamily {
  AntiCorrelation,  // shifts along d_omega_s = -d_omega_i
  Correlation,      // shifts along d_omega_s = +d_omega_i
  SignalAxis,
  IdlerAxis,
  PlusFour,   // 4 cells on the axes, long diagonal dq
  CrossFour,  // 4 cells on the diagonals, long diagonal dq
  Octagon,    // 8 cells: PlusFour + CrossFour vertices
  Explicit,
};

struct GeometrySpec {
  GeometryFamily family = GeometryFamily::AntiCorrelation;
  double dq = 0.0;  // mutual shift between neighbours (line families) or the
                    // long diagonal (PlusFour/CrossFour/Octagon), Gamma3 units
  int n_mp = 1;     // ignored for PlusFour/CrossFour (4) and Octagon (8)
  std::optional<ShiftSet> explicit_shifts;
};

inline const char* family_name(GeometryFamily f) {
  switch (f) {
    case GeometryFamily::AntiCorrelation: return "anti_correlation";
    case GeometryFamily::Correlation: return "correlation";
    case GeometryFamily::SignalAxis: return "signal_axis";
    case GeometryFamily::IdlerAxis: return "idler_axis";
    case GeometryFamily::PlusFour: return "plus_four";
    case GeometryFamily::CrossFour: return "cross_four";
    case GeometryFamily::Octagon: return "octagon";
    case GeometryFamily::Explicit: return "explicit";
  }
  return "unknown";
}

inline std::optional<GeometryFamily> family_from_name(const std::string& s) {
  for (auto f : {GeometryFamily::AntiCorrelation, GeometryFamily::Correlation,
                 GeometryFamily::SignalAxis, GeometryFamily::IdlerAxis,
                 GeometryFamily::PlusFour, GeometryFamily::CrossFour,
                 GeometryFamily::Octagon, GeometryFamily::Explicit})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

// Line families are centered on the origin: the physics fixes only mutual
// differences, and centering keeps the composite spectrum symmetric inside
// the analysis window. S and K are invariant under a common shift of all
// cells (a relabeling of the frequency origins).
inline ShiftSet make_shifts(const GeometrySpec& g) {
  if (g.dq < 0.0 || !std::isfinite(g.dq))
    throw std::invalid_argument("geometry.dq must be finite and >= 0");
  ShiftSet out;
  auto line = [&](double axis_s, double axis_i, int n) {
    if (n < 1) throw std::invalid_argument("geometry.n_mp must be >= 1");
    const double center = (n - 1) / 2.0;
    for (int m = 0; m < n; ++m) {
      const double t = (m - center) * g.dq;
      out.shifts.emplace_back(axis_s * t, axis_i * t);
    }
  };
  const double h = g.dq / 2.0;            // circumradius for long diagonal dq
  const double e = h / std::sqrt(2.0);    // diagonal-vertex coordinate
  switch (g.family) {
    case GeometryFamily::AntiCorrelation: line(1.0, -1.0, g.n_mp); break;
    case GeometryFamily::Correlation: line(1.0, 1.0, g.n_mp); break;
    case GeometryFamily::SignalAxis: line(1.0, 0.0, g.n_mp); break;
    case GeometryFamily::IdlerAxis: line(0.0, 1.0, g.n_mp); break;
    case GeometryFamily::PlusFour:
      out.shifts = {{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}};
      break;
    case GeometryFamily::CrossFour:
      out.shifts = {{e, e}, {-e, -e}, {e, -e}, {-e, e}};
      break;
    case GeometryFamily::Octagon:
      out.shifts = {{h, 0.0},  {-h, 0.0}, {0.0, h},  {0.0, -h},
                    {e, e},    {-e, -e},  {e, -e},   {-e, e}};
      break;
    case GeometryFamily::Explicit:
      if (!g.explicit_shifts)
        throw std::invalid_argument(
            "geometry: Explicit family requires explicit_shifts");
      out = *g.explicit_shifts;
      break;
  }
  out.validate();
  return out;
}

// Sum of shifted per-cell amplitudes, f(dw_s + ds_m, dw_i + di_m), without
// the 1/sqrt(N) normalization factor.
template <typename Evaluator>
complexd f_multiplexed(SpectralPoint p, const ShiftSet& s, Evaluator&& f) {
  complexd acc = 0.0;
  for (const auto& [ds, di] : s.shifts)
    acc += f(SpectralPoint{p.d_omega_s + ds, p.d_omega_i + di});
  return acc;
}

inline complexd f_multiplexed(SpectralPoint p, const ShiftSet& s,
                              const DerivedParams& dp,
                              const PhysicalParams& pp) {
  return f_multiplexed(p, s, [&](SpectralPoint q) {
    return f_doppler_closed(q, dp, pp);
  });
}

}  // namespace bimux
