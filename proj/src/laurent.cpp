#include "fibtl/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fibtl {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(c, e);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, Exponent exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, coeff);
  return p;
}

BigInt LaurentPoly::coeff(Exponent exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.begin()->first;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const BigInt& coeff, Exponent exp) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) r.add_term(c1 * c2, e1 + e2);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::reindexed(Exponent factor, Exponent shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(c, e * factor + shift);
  return r;
}

std::string LaurentPoly::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e != 0) os << '*' << variable << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly lp_monomial(const BigInt& coeff, Exponent exp) { return LaurentPoly::monomial(coeff, exp); }
LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly lp_pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

const LaurentPoly& delta_poly() {
  static const LaurentPoly delta{{2, -1}, {-2, -1}};
  return delta;
}

LaurentPoly lp_invert_variable(const LaurentPoly& p) { return p.reindexed(-1); }

std::complex<double> lp_eval(const LaurentPoly& p, double theta) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) {
    // std::polar(1, e*theta) loses accuracy for large |e*theta|; reduce first.
    const double angle = std::remainder(static_cast<double>(e) * theta, 2.0 * M_PI);
    sum += c.convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

namespace {

std::string t_exponent(Exponent q_exp) {
  Exponent num = q_exp;
  Exponent den = 4;
  const Exponent g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::string JonesPoly::to_string() const {
  if (in_q.is_zero()) return "0";
  std::vector<std::pair<Exponent, BigInt>> terms(in_q.terms().begin(), in_q.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const Exponent ax = x.first < 0 ? -x.first : x.first;
    const Exponent ay = y.first < 0 ? -y.first : y.first;
    if (ax != ay) return ax < ay;
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e != 0) os << "*t^" << t_exponent(e);
  }
  return os.str();
}

JonesPoly jones_substitute(const LaurentPoly& f) { return JonesPoly{f.reindexed(-1)}; }

nlohmann::json to_json(const LaurentPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.str()});
  return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      throw std::invalid_argument("polynomial term must be [exp, \"coeff\"]");
    p.add_term(BigInt(term[1].get<std::string>()), term[0].get<Exponent>());
  }
  return p;
}

}  // namespace fibtl
