#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimux/constants.hpp"
#include "bimux/lapack.hpp"

// Gauss-Hermite rules (weight exp(-x^2) on the real line) by the
// Golub-Welsch method: nodes are the eigenvalues of the Jacobi matrix of the
// Hermite recurrence (off-diagonal beta_k = sqrt(k/2)), weights are
// sqrt(pi) times the squared first eigenvector components.

namespace bimux {

struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussHermite(int n) {
    if (n < 1) throw std::invalid_argument("GaussHermite: n must be >= 1");
    std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    std::vector<double> evec(static_cast<std::size_t>(n) * n);
    const lapack_int info =
        LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, diag.data(), off.data(),
                      evec.data(), n);
    if (info != 0)
      throw std::runtime_error("GaussHermite: dstev failed, info=" +
                               std::to_string(info));
    nodes = std::move(diag);  // ascending
    weights.resize(n);
    for (int j = 0; j < n; ++j) {
      const double q0 = evec[static_cast<std::size_t>(j) * n];
      weights[j] = sqrt_pi * q0 * q0;
    }
  }
};

// Process-wide cache; rules are immutable once built and map node
// references stay valid across insertions.
inline const GaussHermite& gauss_hermite_cached(int n) {
  static std::mutex mtx;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussHermite(n)).first;
  return it->second;
}

}  // namespace bimux
