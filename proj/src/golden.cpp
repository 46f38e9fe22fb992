#include "fibtl/golden.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fibtl {

double QSqrt5::to_double() const { return r.convert_to<double>() + s.convert_to<double>() * std::sqrt(5.0); }

GoldenScalar GoldenScalar::phi() { return {QSqrt5{Rational(1, 2), Rational(1, 2)}, QSqrt5{}}; }
GoldenScalar GoldenScalar::tau() { return {QSqrt5{Rational(-1, 2), Rational(1, 2)}, QSqrt5{}}; }
GoldenScalar GoldenScalar::sqrt_tau() { return {QSqrt5{}, QSqrt5{Rational(1), Rational(0)}}; }

GoldenScalar operator*(const GoldenScalar& p, const GoldenScalar& q) {
  static const QSqrt5 tau{Rational(-1, 2), Rational(1, 2)};
  return {p.x_ * q.x_ + p.y_ * q.y_ * tau, p.x_ * q.y_ + p.y_ * q.x_};
}

double GoldenScalar::to_double() const {
  const double sqrt_tau = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
  return x_.to_double() + y_.to_double() * sqrt_tau;
}

GoldenMatrix GoldenMatrix::identity(std::size_t dim) {
  GoldenMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

GoldenMatrix operator*(const GoldenMatrix& a, const GoldenMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t d = a.dim_;
  GoldenMatrix r(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const GoldenScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

GoldenMatrix operator-(const GoldenMatrix& a, const GoldenMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  GoldenMatrix r(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

GoldenMatrix operator*(const GoldenScalar& c, const GoldenMatrix& m) {
  GoldenMatrix r(m.dim_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = c * m.data_[i];
  return r;
}

bool GoldenMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GoldenScalar& x) { return x.is_zero(); });
}

bool GoldenMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

double GoldenMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x.to_double()));
  return m;
}

}  // namespace fibtl
