#include "fibtl/fibrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace fibtl {

FibSequence::FibSequence(std::vector<FibSymbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("Fibonacci sequence must be non-empty");
  for (std::size_t i = 1; i < symbols_.size(); ++i)
    if (symbols_[i] == FibSymbol::Star && symbols_[i - 1] == FibSymbol::Star)
      throw std::invalid_argument("Fibonacci sequence has consecutive * at position " + std::to_string(i));
}

FibSequence FibSequence::parse(const std::string& text) {
  std::vector<FibSymbol> symbols;
  for (char c : text) {
    if (c == 'P')
      symbols.push_back(FibSymbol::P);
    else if (c == '*')
      symbols.push_back(FibSymbol::Star);
    else
      throw std::invalid_argument(std::string("invalid Fibonacci symbol '") + c + "'");
  }
  return FibSequence(std::move(symbols));
}

std::string FibSequence::to_string() const {
  std::string s;
  for (FibSymbol x : symbols_) s += x == FibSymbol::P ? 'P' : '*';
  return s;
}

namespace {

void extend_sequences(std::vector<FibSymbol>& prefix, int n, std::vector<FibSequence>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  prefix.push_back(FibSymbol::P);
  extend_sequences(prefix, n, out);
  prefix.back() = FibSymbol::Star;
  if (prefix.size() < 2 || prefix[prefix.size() - 2] != FibSymbol::Star) extend_sequences(prefix, n, out);
  prefix.pop_back();
}

}  // namespace

FibBasis::FibBasis(int n) : n_(n) {
  if (n < 1 || n > kMaxFibSequenceLength)
    throw std::invalid_argument("Fibonacci sequence length must be in [1, " +
                                std::to_string(kMaxFibSequenceLength) + "], got " + std::to_string(n));
  std::vector<FibSymbol> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend_sequences(prefix, n, sequences_);
}

std::size_t FibBasis::index_of(const FibSequence& s) const {
  auto it = std::lower_bound(sequences_.begin(), sequences_.end(), s);
  if (it == sequences_.end() || *it != s)
    throw std::invalid_argument("sequence " + s.to_string() + " is not in the basis");
  return static_cast<std::size_t>(it - sequences_.begin());
}

FibBasis fib_sequences(int n) { return FibBasis(n); }

std::uint64_t fib_dim(int n) {
  if (n < 1) throw std::invalid_argument("fib_dim needs n >= 1");
  std::uint64_t prev = 1;  // f_0
  std::uint64_t cur = 1;   // f_1
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ModelParams ModelParams::fibonacci(int delta_sign) {
  if (delta_sign != 1 && delta_sign != -1) throw std::invalid_argument("delta sign must be +1 or -1");
  return delta_sign > 0 ? from_delta(kGoldenRatio, kFibonacciPhase)
                        : from_delta(-kGoldenRatio, std::numbers::pi / 10.0);
}

ModelParams ModelParams::from_delta(double delta, double phase) {
  if (!(std::abs(delta) >= 1.0))
    throw std::domain_error("delta = " + std::to_string(delta) + " gives imaginary b = sqrt(1 - delta^-2)");
  ModelParams p{};
  p.delta = delta;
  p.a = 1.0 / delta;
  p.b = std::sqrt(1.0 - p.a * p.a);
  p.phase = phase;
  p.lambda = std::polar(1.0, phase);
  p.mu = -std::pow(p.lambda, -3);
  return p;
}

ModelParams ModelParams::from_phase(double theta) {
  if (!theta_validity(theta))
    throw std::domain_error("theta = " + std::to_string(theta) + " violates cos^2(2 theta) >= 1/4");
  const double delta = -2.0 * std::cos(2.0 * theta);
  // Boundary values can land a hair inside |delta| < 1.
  return from_delta(std::abs(delta) < 1.0 ? std::copysign(1.0, delta) : delta, theta);
}

ModelParams ModelParams::with_lambda(std::complex<double> new_lambda) const {
  ModelParams p = *this;
  p.lambda = new_lambda;
  p.mu = -std::pow(new_lambda, -3);
  return p;
}

namespace {

template <class Scalar>
struct TripletWeights {
  Scalar delta;
  Scalar a;
  Scalar b;
  Scalar delta_b2;
};

// U_i acting on a basis sequence, read off the triplet (y_{i-2}, y_{i-1}, y_i)
// of the extended sequence y_{-1} = *, y_0 = P, y_1..y_n = x, y_{n+1} = P.
template <class Scalar, class Emit>
void apply_triplet_rule(const FibSequence& x, int i, const TripletWeights<Scalar>& w, RightEndRule rule,
                        Emit&& emit) {
  const int n = static_cast<int>(x.length());
  auto y = [&](int pos) {
    if (pos == -1) return FibSymbol::Star;
    if (pos == 0 || pos == n + 1) return FibSymbol::P;
    return x[static_cast<std::size_t>(pos - 1)];
  };
  auto with_center = [&](FibSymbol s) {
    std::vector<FibSymbol> v = x.symbols();
    v[static_cast<std::size_t>(i - 2)] = s;  // center y_{i-1} is x_{i-1}
    return FibSequence(std::move(v));
  };
  constexpr FibSymbol P = FibSymbol::P;
  constexpr FibSymbol S = FibSymbol::Star;
  const FibSymbol l = y(i - 2);
  const FibSymbol c = y(i - 1);
  const FibSymbol r = y(i);

  if (l == P && c == S && r == P) {
    if (rule == RightEndRule::kLiteral && i == n + 1) return;
    emit(x, w.a);
    emit(with_center(P), w.b);
  } else if (l == P && c == P && r == P) {
    emit(with_center(S), w.b);
    emit(x, w.delta_b2);
  } else if (l == S && c == P && r == S) {
    emit(x, w.delta);
  }
  // (*,P,P) and (P,P,*) are annihilated; no other triplet occurs.
}

void check_generator_range(int n, int i) {
  if (n < 1 || n > kMaxDenseMatrixLength)
    throw std::invalid_argument("dense matrices need 1 <= n <= " + std::to_string(kMaxDenseMatrixLength) +
                                ", got " + std::to_string(n));
  if (i < 1 || i > n + 1)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range [1, " +
                                std::to_string(n + 1) + "]");
}

Eigen::MatrixXd real_generator_matrix(const FibBasis& basis, int i, const ModelParams& params,
                                      RightEndRule rule) {
  const TripletWeights<double> w{params.delta, params.a, params.b, params.delta * params.b * params.b};
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    apply_triplet_rule(basis[static_cast<std::size_t>(col)], i, w, rule, [&](const FibSequence& out, double c) {
      m(static_cast<Eigen::Index>(basis.index_of(out)), col) += c;
    });
  }
  return m;
}

ComplexMatrix braid_from_tl(const Eigen::MatrixXd& u, std::complex<double> A, int sign) {
  const std::complex<double> diag = sign > 0 ? A : 1.0 / A;
  const std::complex<double> off = sign > 0 ? 1.0 / A : A;
  ComplexMatrix m = off * u.cast<std::complex<double>>();
  m.diagonal().array() += diag;
  return m;
}

}  // namespace

RepMatrix tl_generator_matrix(int n, int i, const ModelParams& params, RightEndRule rule) {
  check_generator_range(n, i);
  auto basis = std::make_shared<const FibBasis>(n);
  Eigen::MatrixXd m = real_generator_matrix(*basis, i, params, rule);
  return RepMatrix{std::move(basis), m.cast<std::complex<double>>()};
}

RepMatrix braid_generator_matrix(int n, int letter, const ModelParams& params) {
  if (letter == 0) throw std::invalid_argument("braid letter 0 is not a generator");
  check_generator_range(n, std::abs(letter));
  auto basis = std::make_shared<const FibBasis>(n);
  const Eigen::MatrixXd u = real_generator_matrix(*basis, std::abs(letter), params, RightEndRule::kUniform);
  return RepMatrix{std::move(basis), braid_from_tl(u, params.A(), letter > 0 ? 1 : -1)};
}

RepMatrix braid_word_matrix(const BraidWord& b, int n, const ModelParams& params) {
  if (b.strands() != n + 2)
    throw std::invalid_argument("braid on " + std::to_string(b.strands()) + " strands does not act on length-" +
                                std::to_string(n) + " sequences (needs " + std::to_string(n + 2) + " strands)");
  check_generator_range(n, 1);
  auto basis = std::make_shared<const FibBasis>(n);
  const auto dim = static_cast<Eigen::Index>(basis->dim());
  std::vector<Eigen::MatrixXd> generators;
  for (int i = 1; i <= n + 1; ++i) generators.push_back(real_generator_matrix(*basis, i, params, RightEndRule::kUniform));
  ComplexMatrix acc = ComplexMatrix::Identity(dim, dim);
  for (Letter l : b.letters()) {
    acc = acc * braid_from_tl(generators[static_cast<std::size_t>(std::abs(l) - 1)], params.A(), l > 0 ? 1 : -1);
  }
  return RepMatrix{std::move(basis), std::move(acc)};
}

GoldenMatrix exact_tl_generator_matrix(int n, int i, int delta_sign, RightEndRule rule) {
  if (delta_sign != 1 && delta_sign != -1) throw std::invalid_argument("delta sign must be +1 or -1");
  check_generator_range(n, i);
  const GoldenScalar sign(delta_sign);
  // delta = +-phi, a = 1/delta = +-tau, b = sqrt(tau), delta b^2 = +-phi tau = +-1.
  const TripletWeights<GoldenScalar> w{sign * GoldenScalar::phi(), sign * GoldenScalar::tau(),
                                       GoldenScalar::sqrt_tau(), sign};
  const FibBasis basis(n);
  GoldenMatrix m(basis.dim());
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    apply_triplet_rule(basis[col], i, w, rule,
                       [&](const FibSequence& out, const GoldenScalar& c) { m(basis.index_of(out), col) += c; });
  }
  return m;
}

Eigen::Matrix2d f_matrix(const ModelParams& params) {
  if (!(params.delta * params.delta >= 1.0))
    throw std::domain_error("F needs delta^2 >= 1 for real b");
  Eigen::Matrix2d f;
  f << params.a, params.b, params.b, -params.a;
  return f;
}

Eigen::Matrix2cd r_matrix(const ModelParams& params) {
  if (std::abs(std::abs(params.lambda) - 1.0) > 1e-12)
    throw std::domain_error("lambda must have unit modulus");
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  r(0, 0) = params.mu;
  r(1, 1) = params.lambda;
  return r;
}

bool theta_validity(double theta) {
  const double c = std::cos(2.0 * theta);
  return c * c >= 0.25 - 1e-12;
}

ThreeStrandFamily three_strand_family(double theta) {
  const ModelParams params = ModelParams::from_phase(theta);
  const std::complex<double> lambda = params.lambda;
  ThreeStrandFamily fam{};
  fam.delta = params.delta;
  fam.U = Eigen::Matrix2cd::Zero();
  fam.U(0, 0) = params.delta;
  fam.F = f_matrix(params).cast<std::complex<double>>();
  fam.V = fam.F * fam.U * fam.F;
  fam.R = lambda * Eigen::Matrix2cd::Identity() + (1.0 / lambda) * fam.U;
  fam.S = fam.F * fam.R * fam.F;
  return fam;
}

ModelReport verify_model(int n, const ModelParams& params, double tol, RightEndRule rule) {
  check_generator_range(n, 1);
  const FibBasis basis(n);
  const int gens = n + 1;
  const auto dim = static_cast<Eigen::Index>(basis.dim());

  std::vector<Eigen::MatrixXd> u;
  std::vector<ComplexMatrix> sigma;
  std::vector<ComplexMatrix> sigma_inv;
  for (int i = 1; i <= gens; ++i) {
    u.push_back(real_generator_matrix(basis, i, params, rule));
    sigma.push_back(braid_from_tl(u.back(), params.A(), +1));
    sigma_inv.push_back(braid_from_tl(u.back(), params.A(), -1));
  }
  auto max_abs = [](const auto& m) { return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff()); };
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);

  double idempotent = 0, adjacent = 0, far = 0, symmetric = 0, unitary = 0, inverse = 0, braid = 0, braid_far = 0;
  for (int i = 0; i < gens; ++i) {
    const auto& ui = u[static_cast<std::size_t>(i)];
    const auto& si = sigma[static_cast<std::size_t>(i)];
    idempotent = std::max(idempotent, max_abs(Eigen::MatrixXd(ui * ui - params.delta * ui)));
    symmetric = std::max(symmetric, max_abs(Eigen::MatrixXd(ui - ui.transpose())));
    unitary = std::max(unitary, max_abs(ComplexMatrix(si.adjoint() * si - id)));
    inverse = std::max(inverse, max_abs(ComplexMatrix(si * sigma_inv[static_cast<std::size_t>(i)] - id)));
    for (int j = 0; j < gens; ++j) {
      const auto& uj = u[static_cast<std::size_t>(j)];
      const auto& sj = sigma[static_cast<std::size_t>(j)];
      if (std::abs(i - j) == 1) {
        adjacent = std::max(adjacent, max_abs(Eigen::MatrixXd(ui * uj * ui - ui)));
        if (j == i + 1) braid = std::max(braid, max_abs(ComplexMatrix(si * sj * si - sj * si * sj)));
      } else if (j > i + 1) {
        far = std::max(far, max_abs(Eigen::MatrixXd(ui * uj - uj * ui)));
        braid_far = std::max(braid_far, max_abs(ComplexMatrix(si * sj - sj * si)));
      }
    }
  }

  ModelReport report{n, tol, {}};
  report.add(relation::kIdempotent, idempotent);
  report.add(relation::kAdjacent, adjacent);
  report.add(relation::kFarCommute, far);
  report.add(relation::kSymmetric, symmetric);
  report.add(relation::kUnitary, unitary);
  report.add(relation::kInverse, inverse);
  report.add(relation::kBraid, braid);
  report.add(relation::kBraidFar, braid_far);
  return report;
}

nlohmann::json to_json(const RepMatrix& m) {
  auto basis = nlohmann::json::array();
  for (const auto& s : m.basis->sequences()) basis.push_back(s.to_string());
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c)
      row.push_back({m.entries(r, c).real(), m.entries(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", m.basis->length()}, {"dim", m.dim()}, {"basis", std::move(basis)}, {"rows", std::move(rows)}};
}

}  // namespace fibtl
