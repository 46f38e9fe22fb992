#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibtl {

using Rational = boost::multiprecision::cpp_rational;

/// Element r + s*sqrt(5) of Q(sqrt 5).
struct QSqrt5 {
  Rational r;
  Rational s;

  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.r + y.r, x.s + y.s}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.r - y.r, x.s - y.s}; }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.r * y.r + 5 * x.s * y.s, x.r * y.s + x.s * y.r};
  }
  QSqrt5 operator-() const { return {-r, -s}; }
  friend bool operator==(const QSqrt5&, const QSqrt5&) = default;
  bool is_zero() const { return r == 0 && s == 0; }
  double to_double() const;
};

/**
 * Exact scalar x + y*sqrt(tau) with x, y in Q(sqrt 5) and tau = (sqrt5 - 1)/2.
 *
 * Every entry of the Fibonacci-model generator matrices at delta = +-phi lies
 * in this field: delta = +-phi, a = +-tau, b = sqrt(tau), delta*b^2 = +-1.
 */
class GoldenScalar {
 public:
  GoldenScalar() = default;
  GoldenScalar(QSqrt5 x, QSqrt5 y) : x_(std::move(x)), y_(std::move(y)) {}
  GoldenScalar(long long v) : x_{Rational(v), Rational(0)} {}  // NOLINT(google-explicit-constructor)

  static GoldenScalar phi();
  static GoldenScalar tau();
  static GoldenScalar sqrt_tau();

  friend GoldenScalar operator+(const GoldenScalar& p, const GoldenScalar& q) {
    return {p.x_ + q.x_, p.y_ + q.y_};
  }
  friend GoldenScalar operator-(const GoldenScalar& p, const GoldenScalar& q) {
    return {p.x_ - q.x_, p.y_ - q.y_};
  }
  friend GoldenScalar operator*(const GoldenScalar& p, const GoldenScalar& q);
  GoldenScalar operator-() const { return {-x_, -y_}; }
  GoldenScalar& operator+=(const GoldenScalar& q) { return *this = *this + q; }

  friend bool operator==(const GoldenScalar&, const GoldenScalar&) = default;
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  double to_double() const;

 private:
  QSqrt5 x_;
  QSqrt5 y_;
};

/// Dense square matrix over GoldenScalar (row-major).
class GoldenMatrix {
 public:
  explicit GoldenMatrix(std::size_t dim = 0) : dim_(dim), data_(dim * dim) {}
  static GoldenMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  GoldenScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const GoldenScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  friend GoldenMatrix operator*(const GoldenMatrix& a, const GoldenMatrix& b);
  friend GoldenMatrix operator-(const GoldenMatrix& a, const GoldenMatrix& b);
  friend GoldenMatrix operator*(const GoldenScalar& c, const GoldenMatrix& m);
  friend bool operator==(const GoldenMatrix&, const GoldenMatrix&) = default;

  bool is_zero() const;
  bool is_symmetric() const;
  // max |entry| after conversion to double
  double max_abs() const;

 private:
  std::size_t dim_;
  std::vector<GoldenScalar> data_;
};

}  // namespace fibtl
