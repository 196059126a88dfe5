#pragma once

#include <initializer_list>

#include "goldfish/types.hpp"

namespace goldfish {

/**
 * Complex polynomial stored as coefficients in descending powers:
 * coeff(0) z^d + coeff(1) z^{d-1} + ... + coeff(d).
 */
class Polynomial {
 public:
  Polynomial() : coeffs_(CVector::Zero(1)) {}
  explicit Polynomial(CVector coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coeffs() const { return coeffs_; }
  Complex coeff(int i) const { return coeffs_[i]; }
  Complex leading() const { return coeffs_[0]; }

  /// Horner evaluation.
  Complex operator()(Complex z) const;

  Polynomial derivative() const;

  /// Exact synthetic division by (z - root); the remainder is discarded,
  /// so this is only exact when root actually is a root.
  Polynomial deflate(Complex root) const;

  /// Multiply by the linear factor (z - a).
  Polynomial timesLinear(Complex a) const;

  Polynomial operator*(Complex s) const { return Polynomial(CVector(coeffs_ * s)); }
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;

 private:
  CVector coeffs_;
};

/// E_N(z|q) = prod_k (z - q_k): monic, degree N. Repeated roots allowed.
Polynomial monicFromRoots(const CVector& q);

/// Signed elementary symmetric functions e_1..e_N:
/// e_k = (-1)^{k-1} sum over k-subsets of products of q's; equivalently the
/// descending coefficients of z^N - E_N(z|q).
CVector elementarySymmetric(const CVector& q);

}  // namespace goldfish
