#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "bimux/constants.hpp"

// Experiment description and derived dimensionless quantities.
//
// Unit convention used throughout the library: frequencies, detunings and
// shifts are expressed in units of the free-space decay rate Gamma3; times in
// units of 1/Gamma3. Dimensionful inputs are converted exactly once, in
// derive(). This matches the natural axes of the problem (detuning/Gamma3)
// and keeps magnitudes near unity.

namespace bimux {

struct PhysicalParams {
  double lambda_s = 1.32e-6;       // signal wavelength, m
  double lambda_i = 795e-9;        // idler wavelength, m
  double gamma3 = two_pi * 5.8e6;  // free-space decay rate Gamma3, rad/s
  double gamma3n_ratio = 5.0;      // Gamma3^N / Gamma3, >= 1
  double tau_gamma = 0.25;         // Gamma3 * tau (pulse duration)
  double temperature = 300.0;      // K
  double atomic_mass = mass_rb87;  // kg (isotope not pinned by the physics;
                                   // S shifts slightly with the mass choice)
};

struct DerivedParams {
  double k_s;              // 2*pi/lambda_s, rad/m
  double k_i;              // 2*pi/lambda_i, rad/m
  double k_bar_si;         // k_s + k_i
  double sigma_v;          // sqrt(k_B T / m), m/s
  double b;                // kbar^2 / (kbar^2 + 4/(sigma*tau)^2), in (0,1)
  double doppler_width_s;  // k_s * sigma / Gamma3
  double doppler_width_i;  // k_i * sigma / Gamma3
  double doppler_width_bar() const { return doppler_width_s + doppler_width_i; }
  double ki_over_kbar() const { return k_i / k_bar_si; }
};

inline void validate(const PhysicalParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("physical_params.") + name +
                                  " must be strictly positive");
  };
  positive(p.lambda_s, "lambda_s");
  positive(p.lambda_i, "lambda_i");
  positive(p.gamma3, "gamma3");
  positive(p.gamma3n_ratio, "gamma3n_ratio");
  positive(p.tau_gamma, "tau_gamma");
  positive(p.temperature, "temperature");
  positive(p.atomic_mass, "atomic_mass");
  if (p.gamma3n_ratio < 1.0)
    throw std::invalid_argument(
        "physical_params.gamma3n_ratio must be >= 1 (collective decay is "
        "never sub-natural)");
}

inline DerivedParams derive(const PhysicalParams& p) {
  validate(p);
  DerivedParams d;
  d.k_s = two_pi / p.lambda_s;
  d.k_i = two_pi / p.lambda_i;
  d.k_bar_si = d.k_s + d.k_i;
  d.sigma_v = std::sqrt(k_boltzmann * p.temperature / p.atomic_mass);
  d.doppler_width_s = d.k_s * d.sigma_v / p.gamma3;
  d.doppler_width_i = d.k_i * d.sigma_v / p.gamma3;
  // b = kbar^2 / (kbar^2 + 4/(sigma*tau)^2), written via the dimensionless
  // product (kbar*sigma/Gamma3)*(Gamma3*tau)/2 to avoid rad/s magnitudes.
  const double half_prod = d.doppler_width_bar() * p.tau_gamma / 2.0;
  d.b = half_prod * half_prod / (half_prod * half_prod + 1.0);
  return d;
}

}  // namespace bimux
