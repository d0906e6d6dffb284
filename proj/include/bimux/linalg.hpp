#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimux/lapack.hpp"

// Thin LAPACK wrappers for the two dense factorizations used by the Schmidt
// analysis. Matrices are Eigen column-major, passed straight through.

namespace bimux {

// Singular values only (zgesdd, jobz='N'). Input is copied; descending order.
inline std::vector<double> singular_values(Eigen::MatrixXcd a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  std::vector<double> s(std::min(m, n));
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m, s.data(),
                     nullptr, 1, nullptr, 1);
  if (info != 0)
    throw std::runtime_error("zgesdd (values) failed, info=" +
                             std::to_string(info));
  return s;
}

struct ThinSvd {
  std::vector<double> s;  // descending
  Eigen::MatrixXcd u;     // m x min(m,n)
  Eigen::MatrixXcd vh;    // min(m,n) x n
};

inline ThinSvd thin_svd(Eigen::MatrixXcd a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  ThinSvd out;
  out.s.resize(k);
  out.u.resize(m, k);
  out.vh.resize(k, n);
  const lapack_int info =
      LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, a.data(), m, out.s.data(),
                     out.u.data(), m, out.vh.data(), k);
  if (info != 0)
    throw std::runtime_error("zgesdd (thin) failed, info=" +
                             std::to_string(info));
  return out;
}

struct HermitianEig {
  std::vector<double> values;  // descending
  Eigen::MatrixXcd vectors;    // column n <-> values[n]
};

inline HermitianEig hermitian_eig(Eigen::MatrixXcd a, bool with_vectors) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'L', n, a.data(), n,
      w.data());
  if (info != 0)
    throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  HermitianEig out;
  out.values.assign(w.rbegin(), w.rend());  // ascending -> descending
  if (with_vectors) {
    out.vectors.resize(n, n);
    for (lapack_int j = 0; j < n; ++j) out.vectors.col(j) = a.col(n - 1 - j);
  }
  return out;
}

}  // namespace bimux
