#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bimux/faddeeva.hpp"
#include "bimux/params.hpp"
#include "bimux/quadrature.hpp"

// Two-photon spectral amplitudes of the cascade biphoton source, in Gamma3
// units. Signal detuning dw_s is measured from the upper-transition line
// center, idler detuning dw_i from the lower one.
//
//   f_cold:            stationary-atom amplitude
//                      exp(-(dw_s+dw_i)^2 tau^2/8) / (GN/2 - i dw_i)
//   f_doppler_closed:  co-propagating thermal closed form; the bracket
//                      exp(-A^2)(pi Erfi(A) + i pi) is evaluated through the
//                      identity  exp(-A^2)(pi Erfi(A) + i pi) = i pi w(-A)
//                      so no catastrophic cancellation or overflow occurs
//   f_doppler_quad:    velocity average of f_cold over the 1-D
//                      Maxwell-Boltzmann distribution by Gauss-Hermite
//                      quadrature; works for both propagation schemes and
//                      serves as an independent cross-check of the closed
//                      form. The Lorentzian pole of the idler denominator
//                      lies ~Gamma3N/(2 sqrt(2) k_i sigma) from the real
//                      velocity axis, far under the node spacing, so the
//                      Cauchy part is integrated analytically
//                      (int exp(-u^2)/(u-p) du = +-i pi w(+-p)) and the
//                      quadrature handles only the entire remainder.

namespace bimux {

struct SpectralPoint {
  double d_omega_s = 0.0;  // (omega_s - line center)/Gamma3
  double d_omega_i = 0.0;  // (omega_i - omega_3)/Gamma3
};

enum class PropagationScheme { CoPropagating, CounterPropagating };

using complexd = std::complex<double>;

inline complexd f_cold(SpectralPoint p, const PhysicalParams& pp) {
  const double sum = p.d_omega_s + p.d_omega_i;
  const double g = sum * pp.tau_gamma;
  return std::exp(-g * g / 8.0) /
         complexd(pp.gamma3n_ratio / 2.0, -p.d_omega_i);
}

inline complexd f_doppler_closed(SpectralPoint p, const DerivedParams& dp,
                                 const PhysicalParams& pp) {
  const double b = dp.b;
  if (!(b > 0.0) || !(dp.doppler_width_i > 0.0))
    throw std::invalid_argument(
        "f_doppler_closed: requires T > 0 (use f_cold for the cold limit)");
  const double tau = pp.tau_gamma;
  const double r = dp.ki_over_kbar();
  const double sum = p.d_omega_s + p.d_omega_i;
  const complexd a =
      std::sqrt(tau * tau / (8.0 * b)) *
      complexd(b * r * p.d_omega_s + (b * r - 1.0) * p.d_omega_i,
               -pp.gamma3n_ratio / 2.0) /
      r;
  const double env = std::exp(-tau * tau * (1.0 - b) * sum * sum / 8.0);
  return std::sqrt(pi / 2.0) / dp.doppler_width_i * env * faddeeva_w(-a);
}

inline complexd f_doppler_quad(SpectralPoint p, PropagationScheme scheme,
                               const DerivedParams& dp,
                               const PhysicalParams& pp, int nodes = 800) {
  if (nodes < 16)
    throw std::invalid_argument("f_doppler_quad: nodes must be >= 16");
  const double sgn = (scheme == PropagationScheme::CoPropagating) ? 1.0 : -1.0;
  const double tau = pp.tau_gamma;
  const double sum = p.d_omega_s + p.d_omega_i;
  // v = sqrt(2) sigma u turns the Maxwell-Boltzmann weight into exp(-u^2).
  const double drift = std::sqrt(2.0) *
                       (dp.doppler_width_s + sgn * dp.doppler_width_i);
  const double dvel = std::sqrt(2.0) * dp.doppler_width_i;
  const auto envelope = [&](complexd u) {
    const complexd g = (sum - drift * u) * tau;
    return std::exp(-g * g / 8.0);
  };
  // Denominator GN/2 - i dw_i + sgn i dvel u = sgn i dvel (u - pole).
  const complexd pole =
      complexd(p.d_omega_i, pp.gamma3n_ratio / 2.0) / (sgn * dvel);
  const complexd cauchy = (pole.imag() > 0.0)
                              ? complexd(0.0, pi) * faddeeva_w(pole)
                              : complexd(0.0, -pi) * faddeeva_w(-pole);
  const complexd g_pole = envelope(pole);
  const GaussHermite& rule = gauss_hermite_cached(nodes);
  complexd acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double u = rule.nodes[k];
    acc += rule.weights[k] * (envelope(u) - g_pole) / (u - pole);
  }
  return (acc + g_pole * cauchy) / (sgn * complexd(0.0, dvel)) / sqrt_pi;
}

struct QuadConvergence {
  complexd value;       // at 2*nodes
  double rel_delta;     // |f(2n) - f(n)| / |f(2n)|
  bool converged;       // rel_delta < tol
};

inline QuadConvergence f_doppler_quad_checked(SpectralPoint p,
                                              PropagationScheme scheme,
                                              const DerivedParams& dp,
                                              const PhysicalParams& pp,
                                              int nodes = 800,
                                              double tol = 1e-8) {
  const complexd v1 = f_doppler_quad(p, scheme, dp, pp, nodes);
  const complexd v2 = f_doppler_quad(p, scheme, dp, pp, 2 * nodes);
  const double mag = std::abs(v2);
  const double rel = (mag > 0.0) ? std::abs(v2 - v1) / mag : std::abs(v2 - v1);
  return {v2, rel, rel < tol};
}

}  // namespace bimux
