#pragma once

#include <complex>
#include <Eigen/Dense>

namespace goldfish {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Separation tolerance below which a node configuration counts as degenerate:
/// 1e-8 * max(1, max|q_k|). Every formula in this library divides by q_r - q_k.
inline double separationTolerance(const CVector& q) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) scale = std::max(scale, std::abs(q[i]));
  return 1e-8 * scale;
}

/// Minimum pairwise distance among the entries of q (infinity for size < 2).
inline double minPairwiseSeparation(const CVector& q) {
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < q.size(); ++i)
    for (Eigen::Index j = i + 1; j < q.size(); ++j)
      m = std::min(m, std::abs(q[i] - q[j]));
  return m;
}

/// Residual denominator: max(1, |largest term|); keeps identity checks
/// meaningful when e^p factors push magnitudes across many orders.
inline double residualScale(std::initializer_list<double> magnitudes) {
  double s = 1.0;
  for (double m : magnitudes) s = std::max(s, m);
  return s;
}

}  // namespace goldfish
