#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimux/schmidt.hpp"

// Parameter sweeps over shift geometries and a budgeted derivative-free
// search for shift placements that minimize S or maximize K. Every
// evaluation is one grid build plus one decomposition, so the search is a
// deterministic compass pattern search (fixed axis order, step halving on
// failure) rather than anything gradient-based.

namespace bimux {

struct CurvePoint {
  double param = 0.0;  // dq, or n_mp for cell-count sweeps
  double S = 0.0;
  double K = 1.0;
  std::vector<std::string> warnings;
};

enum class SweepScenario {
  TemperatureFamily,  // one curve per temperature, S(dq) of a two-cell pair
  DirectionFamily,    // one curve per multiplexing direction, S(dq)
  CellCountFamily,    // one curve per dq, S and K versus n_mp
  ShapeFamily,        // plus / cross / octagon placements, S(dq)
  Custom,             // single curve over dq_values
};

struct SweepSpec {
  SweepScenario scenario = SweepScenario::Custom;
  GeometryFamily family = GeometryFamily::AntiCorrelation;
  std::vector<double> dq_values;
  std::vector<double> temperatures;  // TemperatureFamily
  std::vector<int> n_mp_values;      // CellCountFamily
  int n_mp = 2;

  void validate() const {
    if (dq_values.empty())
      throw std::invalid_argument("sweep: dq_values must be nonempty");
    if (!std::is_sorted(dq_values.begin(), dq_values.end()))
      throw std::invalid_argument("sweep: dq_values must be ascending");
    if (scenario == SweepScenario::TemperatureFamily && temperatures.empty())
      throw std::invalid_argument("sweep: temperatures must be nonempty");
    if (scenario == SweepScenario::CellCountFamily && n_mp_values.empty())
      throw std::invalid_argument("sweep: n_mp_values must be nonempty");
  }
};

struct SweepCurve {
  std::string label;
  std::vector<CurvePoint> points;
};

inline CurvePoint evaluate_geometry(const GeometrySpec& g, double param,
                                    const FrequencyGrid& grid,
                                    const DerivedParams& dp,
                                    const PhysicalParams& pp) {
  const JointSpectralMatrix f = build_jsa(grid, make_shifts(g), dp, pp);
  const SchmidtResult r = schmidt_decompose(f);
  return {param, r.entropy_S, r.schmidt_K, f.warnings};
}

inline std::vector<SweepCurve> run_sweep(const SweepSpec& spec,
                                         const FrequencyGrid& grid,
                                         const PhysicalParams& pp) {
  spec.validate();
  std::vector<SweepCurve> out;
  auto dq_curve = [&](GeometryFamily fam, int n_mp, const PhysicalParams& p,
                      const std::string& label) {
    const DerivedParams dp = derive(p);
    SweepCurve c;
    c.label = label;
    for (double dq : spec.dq_values)
      c.points.push_back(
          evaluate_geometry({fam, dq, n_mp, std::nullopt}, dq, grid, dp, p));
    return c;
  };
  switch (spec.scenario) {
    case SweepScenario::TemperatureFamily:
      for (double t : spec.temperatures) {
        PhysicalParams p = pp;
        p.temperature = t;
        out.push_back(dq_curve(spec.family, spec.n_mp, p,
                               "T=" + std::to_string(t)));
      }
      break;
    case SweepScenario::DirectionFamily:
      for (auto fam : {GeometryFamily::AntiCorrelation,
                       GeometryFamily::Correlation, GeometryFamily::IdlerAxis,
                       GeometryFamily::SignalAxis})
        out.push_back(dq_curve(fam, spec.n_mp, pp, family_name(fam)));
      break;
    case SweepScenario::CellCountFamily:
      for (double dq : spec.dq_values) {
        const DerivedParams dp = derive(pp);
        SweepCurve c;
        c.label = "dq=" + std::to_string(dq);
        for (int n : spec.n_mp_values)
          c.points.push_back(evaluate_geometry({spec.family, dq, n,
                                                std::nullopt},
                                               n, grid, dp, pp));
        out.push_back(std::move(c));
      }
      break;
    case SweepScenario::ShapeFamily:
      for (auto fam : {GeometryFamily::PlusFour, GeometryFamily::CrossFour,
                       GeometryFamily::Octagon})
        out.push_back(dq_curve(fam, 0, pp, family_name(fam)));
      break;
    case SweepScenario::Custom:
      out.push_back(dq_curve(spec.family, spec.n_mp, pp, "custom"));
      break;
  }
  return out;
}

struct DipResult {
  bool interior = false;
  double param_star = 0.0;
  double value_star = 0.0;
  std::string note;
};

// Interior minimum of a sampled curve with three-point parabolic
// refinement around the discrete minimizer.
inline DipResult find_dip(const std::vector<CurvePoint>& curve) {
  if (curve.size() < 20)
    throw std::invalid_argument(
        "find_dip: curve must have at least 20 samples");
  std::size_t imin = 0;
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (curve[i].S < curve[imin].S) imin = i;
  if (imin == 0 || imin + 1 == curve.size())
    return {false, curve[imin].param, curve[imin].S,
            "no interior minimum: best sample at the boundary"};
  const double x0 = curve[imin - 1].param, x1 = curve[imin].param,
               x2 = curve[imin + 1].param;
  const double f0 = curve[imin - 1].S, f1 = curve[imin].S,
               f2 = curve[imin + 1].S;
  // successive-parabolic-interpolation vertex; exact on a parabola
  const double num = (x1 - x0) * (x1 - x0) * (f1 - f2) -
                     (x1 - x2) * (x1 - x2) * (f1 - f0);
  const double den = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
  DipResult out;
  out.interior = true;
  if (den == 0.0) {
    out.param_star = x1;
    out.value_star = f1;
    return out;
  }
  out.param_star = x1 - 0.5 * num / den;
  // vertex value from the same parabola
  const double l0 = (out.param_star - x1) * (out.param_star - x2) /
                    ((x0 - x1) * (x0 - x2));
  const double l1 = (out.param_star - x0) * (out.param_star - x2) /
                    ((x1 - x0) * (x1 - x2));
  const double l2 = (out.param_star - x0) * (out.param_star - x1) /
                    ((x2 - x0) * (x2 - x1));
  out.value_star = f0 * l0 + f1 * l1 + f2 * l2;
  return out;
}

enum class ShapingObjective { MinimizeS, MaximizeK };
enum class ShapingConstraint { FreePlacement, SymmetricFamily };

struct ShapingProblem {
  ShapingObjective objective = ShapingObjective::MinimizeS;
  ShapingConstraint constraint = ShapingConstraint::SymmetricFamily;
  GeometryFamily family = GeometryFamily::Octagon;  // family to optimize or
                                                    // to seed free placement
  int n_mp = 8;
  double bound = 300.0;      // coordinate box, Gamma3 units
  int budget = 200;          // max objective evaluations
  double dq_seed = 30.0;
  double initial_step = 8.0;
  double min_step = 0.25;
};

struct TraceEntry {
  int eval = 0;
  std::vector<double> x;
  double objective = 0.0;
};

struct ShapingResult {
  ShiftSet best;
  double S = 0.0;
  double K = 1.0;
  bool budget_exhausted = false;
  std::vector<TraceEntry> trace;
};

// Compass pattern search: probe +-step along each coordinate in fixed
// order, move to the first strict improvement, halve the step when no
// direction improves. Deterministic for a fixed problem.
inline ShapingResult optimize_shifts(const ShapingProblem& prob,
                                     const FrequencyGrid& grid,
                                     const PhysicalParams& pp) {
  if (prob.budget < 50)
    throw std::invalid_argument("optimize_shifts: budget must be >= 50");
  const DerivedParams dp = derive(pp);

  const bool free_placement =
      prob.constraint == ShapingConstraint::FreePlacement;
  auto shifts_of = [&](const std::vector<double>& x) {
    if (!free_placement)
      return make_shifts({prob.family, x[0], prob.n_mp, std::nullopt});
    ShiftSet s;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
      s.shifts.emplace_back(x[i], x[i + 1]);
    return s;
  };
  auto clamp = [&](std::vector<double>& x) {
    if (!free_placement) {
      x[0] = std::clamp(x[0], 0.0, prob.bound);
    } else {
      for (double& v : x) v = std::clamp(v, -prob.bound, prob.bound);
    }
  };

  ShapingResult out;
  int evals = 0;
  auto objective = [&](const std::vector<double>& x) {
    const JointSpectralMatrix f = build_jsa(grid, shifts_of(x), dp, pp);
    const SchmidtResult r = schmidt_decompose(f);
    const double obj = (prob.objective == ShapingObjective::MinimizeS)
                           ? r.entropy_S
                           : -r.schmidt_K;
    ++evals;
    out.trace.push_back({evals, x, obj});
    return obj;
  };

  std::vector<double> x;
  if (free_placement) {
    const ShiftSet seed =
        make_shifts({prob.family, prob.dq_seed, prob.n_mp, std::nullopt});
    for (const auto& [a, b] : seed.shifts) {
      x.push_back(a);
      x.push_back(b);
    }
  } else {
    x = {prob.dq_seed};
  }
  clamp(x);

  double fx = objective(x);
  double step = prob.initial_step;
  while (step >= prob.min_step && evals < prob.budget) {
    bool improved = false;
    for (std::size_t d = 0; d < x.size() && evals < prob.budget; ++d) {
      for (double sign : {+1.0, -1.0}) {
        if (evals >= prob.budget) break;
        std::vector<double> trial = x;
        trial[d] += sign * step;
        clamp(trial);
        if (trial == x) continue;
        const double ft = objective(trial);
        if (ft < fx) {
          x = trial;
          fx = ft;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) step *= 0.5;
  }
  out.budget_exhausted = evals >= prob.budget && step >= prob.min_step;

  const JointSpectralMatrix f = build_jsa(grid, shifts_of(x), dp, pp);
  const SchmidtResult r = schmidt_decompose(f);
  out.best = shifts_of(x);
  out.S = r.entropy_S;
  out.K = r.schmidt_K;
  return out;
}

}  // namespace bimux
