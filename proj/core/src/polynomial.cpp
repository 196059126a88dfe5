#include "goldfish/polynomial.hpp"

#include <stdexcept>

namespace goldfish {

Polynomial::Polynomial(CVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) throw std::invalid_argument("empty coefficient vector");
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) {
  if (coeffs.size() == 0) throw std::invalid_argument("empty coefficient list");
  coeffs_.resize(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (Complex c : coeffs) coeffs_[i++] = c;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = coeffs_[0];
  for (Eigen::Index i = 1; i < coeffs_.size(); ++i) acc = acc * z + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int d = degree();
  if (d == 0) return Polynomial(CVector::Zero(1));
  CVector out(d);
  for (int i = 0; i < d; ++i) out[i] = coeffs_[i] * static_cast<double>(d - i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::deflate(Complex root) const {
  const int d = degree();
  if (d == 0) return Polynomial(CVector::Zero(1));
  CVector out(d);
  out[0] = coeffs_[0];
  for (int i = 1; i < d; ++i) out[i] = coeffs_[i] + out[i - 1] * root;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::timesLinear(Complex a) const {
  CVector out = CVector::Zero(coeffs_.size() + 1);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    out[i] += coeffs_[i];
    out[i + 1] -= coeffs_[i] * a;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  const Eigen::Index n = std::max(coeffs_.size(), other.coeffs_.size());
  CVector out = CVector::Zero(n);
  out.tail(coeffs_.size()) = coeffs_;
  out.tail(other.coeffs_.size()) += other.coeffs_;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other * Complex(-1.0);
}

Polynomial monicFromRoots(const CVector& q) {
  Polynomial p({Complex(1.0)});
  for (Eigen::Index i = 0; i < q.size(); ++i) p = p.timesLinear(q[i]);
  return p;
}

CVector elementarySymmetric(const CVector& q) {
  const Eigen::Index n = q.size();
  // sigma[k] accumulates the unsigned elementary symmetric polynomial of the
  // elements seen so far.
  CVector sigma = CVector::Zero(n + 1);
  sigma[0] = 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = std::min(i + 1, n); k >= 1; --k) sigma[k] += q[i] * sigma[k - 1];
  CVector e(n);
  double sign = 1.0;
  for (Eigen::Index k = 1; k <= n; ++k, sign = -sign) e[k - 1] = sign * sigma[k];
  return e;
}

}  // namespace goldfish
