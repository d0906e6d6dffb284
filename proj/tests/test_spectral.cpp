#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "bimux/spectral.hpp"

using namespace bimux;
using cd = std::complex<double>;

namespace {
const PhysicalParams kDefaults;  // 300 K, Rb-87, GN/G3 = 5, G3 tau = 0.25

double rel_err(cd got, cd want) {
  const double m = std::abs(want);
  return m > 0.0 ? std::abs(got - want) / m : std::abs(got - want);
}
}  // namespace

TEST_CASE("f_cold at the origin and on the energy-conserving axis") {
  CHECK(f_cold({0.0, 0.0}, kDefaults) == cd(0.4, 0.0));

  for (double x : {-75.0, -3.0, 0.5, 12.0, 250.0}) {
    const cd v = f_cold({x, -x}, kDefaults);
    // Gaussian factor is exactly 1 there
    CHECK(std::abs(v) ==
          Catch::Approx(1.0 / std::hypot(2.5, x)).epsilon(1e-14));
  }

  // far-tail magnitude: exp(-50)/sqrt(2.5^2 + 40^2)
  const cd tail = f_cold({40.0, 40.0}, kDefaults);
  CHECK(std::abs(tail) ==
        Catch::Approx(std::exp(-50.0) / std::hypot(2.5, 40.0)).epsilon(1e-12));
}

TEST_CASE("|f_cold| is maximal on the energy-conserving axis") {
  for (double wi : {-120.0, -7.0, 0.0, 33.0, 260.0}) {
    const double peak = std::abs(f_cold({-wi, wi}, kDefaults));
    for (double off : {-40.0, -1.0, 0.5, 15.0}) {
      CHECK(std::abs(f_cold({-wi + off, wi}, kDefaults)) <= peak);
    }
  }
}

TEST_CASE("closed Doppler form agrees with the quadrature oracle") {
  const DerivedParams dp = derive(kDefaults);
  // 11 x 11 lattice over +-400
  double worst = 0.0;
  double peak = 0.0;
  for (int j = 0; j <= 10; ++j)
    for (int k = 0; k <= 10; ++k)
      peak = std::max(peak,
                      std::abs(f_doppler_closed(
                          {-400.0 + 80.0 * j, -400.0 + 80.0 * k}, dp,
                          kDefaults)));
  for (int j = 0; j <= 10; ++j) {
    for (int k = 0; k <= 10; ++k) {
      const SpectralPoint p{-400.0 + 80.0 * j, -400.0 + 80.0 * k};
      const cd closed = f_doppler_closed(p, dp, kDefaults);
      const cd quad = f_doppler_quad(p, PropagationScheme::CoPropagating, dp,
                                     kDefaults);
      if (std::abs(closed) < 1e-12 * peak) continue;
      worst = std::max(worst, rel_err(quad, closed));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("quadrature node-doubling self-convergence at defaults") {
  const DerivedParams dp = derive(kDefaults);
  const auto r = f_doppler_quad_checked({0.0, 0.0},
                                        PropagationScheme::CoPropagating, dp,
                                        kDefaults);
  CHECK(r.converged);
  CHECK(r.rel_delta < 1e-8);

  // under-resolved node counts must flag
  const auto bad = f_doppler_quad_checked({0.0, 0.0},
                                          PropagationScheme::CoPropagating,
                                          dp, kDefaults, 16);
  CHECK_FALSE(bad.converged);
}

TEST_CASE("frozen regression values at the origin") {
  const DerivedParams dp = derive(kDefaults);
  const cd closed = f_doppler_closed({0.0, 0.0}, dp, kDefaults);
  CHECK(closed.real() == Catch::Approx(0.0237715448204597).epsilon(1e-10));
  CHECK(std::abs(closed.imag()) < 1e-15);

  const cd counter = f_doppler_quad({0.0, 0.0},
                                    PropagationScheme::CounterPropagating,
                                    dp, kDefaults);
  CHECK(counter.real() == Catch::Approx(0.0305738400820134).epsilon(1e-9));
  CHECK(std::abs(counter.imag()) < 1e-12);

  // the two schemes genuinely differ
  CHECK(std::abs(counter - closed) > 5e-3);
}

TEST_CASE("cold limit: closed form approaches f_cold linearly in T") {
  // The leading thermal correction is the envelope factor
  // exp(tau^2 b (dws+dwi)^2 / 8) - 1 ~ b ~ T, so the pointwise deviation
  // shrinks linearly with temperature (no extra constant survives the
  // sigma -> 0 limit).
  auto worst_dev = [](double temperature) {
    PhysicalParams cold = kDefaults;
    cold.temperature = temperature;
    const DerivedParams dp = derive(cold);
    double worst = 0.0;
    for (double ws : {-60.0, 0.0, 35.0}) {
      for (double wi : {-35.0, 0.0, 50.0}) {
        const cd fc = f_cold({ws, wi}, cold);
        const cd fd = f_doppler_closed({ws, wi}, dp, cold);
        worst = std::max(worst, rel_err(fd, fc));
      }
    }
    return worst;
  };
  const double d3 = worst_dev(1e-3);
  const double d5 = worst_dev(1e-5);
  CHECK(d3 < 2e-2);
  CHECK(d5 < 2e-4);
  CHECK(d5 < 0.05 * d3);  // linear rate
}

TEST_CASE("Gaussian envelope is exactly 1 along the anti-correlation axis") {
  const DerivedParams dp = derive(kDefaults);
  // |f_D| along d_omega_s = -d_omega_i reduces to the prefactor times |w|,
  // i.e. the envelope factor cannot suppress it; check monotone Lorentzian-
  // like falloff rather than Gaussian collapse
  const double near = std::abs(f_doppler_closed({-5.0, 5.0}, dp, kDefaults));
  const double far = std::abs(f_doppler_closed({-300.0, 300.0}, dp,
                                               kDefaults));
  CHECK(far > 1e-4 * near);  // algebraic, not Gaussian, decay
}

TEST_CASE("T <= 0 is rejected by derive, quadrature validates nodes") {
  PhysicalParams bad = kDefaults;
  bad.temperature = 0.0;
  CHECK_THROWS(derive(bad));
  const DerivedParams dp = derive(kDefaults);
  CHECK_THROWS(f_doppler_quad({0.0, 0.0}, PropagationScheme::CoPropagating,
                              dp, kDefaults, 8));
}
