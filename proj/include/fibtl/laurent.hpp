#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace fibtl {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

/**
 * Sparse Laurent polynomial in a single variable A with arbitrary-precision
 * integer coefficients.
 *
 * Terms are kept in canonical form: no stored coefficient is ever zero, so
 * two polynomials are equal iff their term maps are equal. The zero
 * polynomial has no terms.
 */
class LaurentPoly {
 public:
  // Descending exponent order is the canonical rendering order.
  using TermMap = std::map<Exponent, BigInt, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, BigInt>> terms);

  static LaurentPoly monomial(const BigInt& coeff, Exponent exp);
  static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }
  static LaurentPoly one() { return monomial(1, 0); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of A^exp (zero when absent).
  BigInt coeff(Exponent exp) const;
  Exponent max_exponent() const;
  Exponent min_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  // Adds coeff * A^exp in place.
  void add_term(const BigInt& coeff, Exponent exp);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiplies every exponent by `factor` and then shifts by `shift`.
  LaurentPoly reindexed(Exponent factor, Exponent shift = 0) const;

  // `c*A^e` terms joined by " + ", descending exponents; constants render
  // as the bare coefficient and the zero polynomial as `0`.
  std::string to_string(const std::string& variable = "A") const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly lp_monomial(const BigInt& coeff, Exponent exp);
LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_pow(const LaurentPoly& p, unsigned k);

// The loop value -A^2 - A^-2.
const LaurentPoly& delta_poly();

// Substitutes A -> 1/A.
LaurentPoly lp_invert_variable(const LaurentPoly& p);

// Value at A = e^{i theta}.
std::complex<double> lp_eval(const LaurentPoly& p, double theta);

/**
 * Jones polynomial stored in integer powers of q = t^{1/4}.
 *
 * Knots only produce exponents divisible by 4; links with an even number of
 * components produce half-integer powers of t, which is why the quarter
 * unit is kept.
 */
struct JonesPoly {
  LaurentPoly in_q;

  friend bool operator==(const JonesPoly&, const JonesPoly&) = default;

  // Renders `c*t^x` with x = e/4 reduced (`t^(1/2)` for fractional powers).
  // Terms are ordered by increasing |x|, negative before positive on ties.
  std::string to_string() const;
};

// c*A^e -> c*q^{-e}, i.e. V(t) = f(t^{-1/4}).
JonesPoly jones_substitute(const LaurentPoly& f);

// [[exp, "coeff"], ...] with descending exponents.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace fibtl
