#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fibtl/braid.hpp"
#include "fibtl/golden.hpp"
#include "fibtl/report.hpp"
#include "json.hpp"

namespace fibtl {

inline constexpr double kGoldenRatio = std::numbers::phi;
// Braiding phase of the Fibonacci model: A = e^{3 pi i / 5}.
inline constexpr double kFibonacciPhase = 3.0 * std::numbers::pi / 5.0;

enum class FibSymbol : std::uint8_t { P = 0, Star = 1 };

/// Word over {P, *} with no two consecutive *. Implicitly flanked by P on
/// both sides.
class FibSequence {
 public:
  explicit FibSequence(std::vector<FibSymbol> symbols);
  static FibSequence parse(const std::string& text);  // "P*P"

  std::size_t length() const noexcept { return symbols_.size(); }
  const std::vector<FibSymbol>& symbols() const noexcept { return symbols_; }
  FibSymbol operator[](std::size_t i) const { return symbols_[i]; }
  std::string to_string() const;

  friend auto operator<=>(const FibSequence&, const FibSequence&) = default;

 private:
  std::vector<FibSymbol> symbols_;
};

/// All Fibonacci sequences of a given length, lexicographic with P < *.
class FibBasis {
 public:
  explicit FibBasis(int n);

  int length() const noexcept { return n_; }
  std::size_t dim() const noexcept { return sequences_.size(); }
  const std::vector<FibSequence>& sequences() const noexcept { return sequences_; }
  const FibSequence& operator[](std::size_t i) const { return sequences_[i]; }
  // Position of `s` in the basis; throws if absent.
  std::size_t index_of(const FibSequence& s) const;

 private:
  int n_;
  std::vector<FibSequence> sequences_;
};

inline constexpr int kMaxFibSequenceLength = 25;
inline constexpr int kMaxDenseMatrixLength = 12;

// 1 <= n <= 25.
FibBasis fib_sequences(int n);

// f_{n+1} with f_0 = f_1 = 1.
std::uint64_t fib_dim(int n);

/**
 * Constants of the Fibonacci-type representation.
 *
 * The braid generator is A I + A^{-1} U with A = e^{i phase}; the braid
 * relations hold only when delta = -A^2 - A^{-2}. lambda is the braiding
 * eigenvalue of the P channel (A by default) and mu = -lambda^{-3} the one of
 * the * channel.
 */
struct ModelParams {
  double delta;
  double a;
  double b;
  double phase;
  std::complex<double> lambda;
  std::complex<double> mu;

  // delta = sign * phi. The phase is 3pi/5 for +phi and pi/10 for -phi, the
  // values where -A^2 - A^-2 equals delta.
  static ModelParams fibonacci(int delta_sign = +1);
  // Throws std::domain_error if |delta| < 1 (b would be imaginary).
  static ModelParams from_delta(double delta, double phase = kFibonacciPhase);
  // delta = -2 cos(2 theta); the 3-strand family.
  static ModelParams from_phase(double theta);

  ModelParams with_lambda(std::complex<double> new_lambda) const;
  std::complex<double> A() const { return std::polar(1.0, phase); }
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense matrix of an operator on the Fibonacci basis of length n.
struct RepMatrix {
  std::shared_ptr<const FibBasis> basis;
  ComplexMatrix entries;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

// How U_{n+1} treats |...P*>. kUniform follows the triplet rule with the
// implicit right P flank; kLiteral sends it to zero (diagnostic only: this
// breaks U^2 = delta U).
enum class RightEndRule { kUniform, kLiteral };

// Matrix of U_i (1 <= i <= n+1) of TL_{n+2} on sequences of length n.
RepMatrix tl_generator_matrix(int n, int i, const ModelParams& params,
                              RightEndRule rule = RightEndRule::kUniform);

// A I + A^-1 U_i for letter +i, A^-1 I + A U_i for letter -i.
RepMatrix braid_generator_matrix(int n, int letter, const ModelParams& params);

// Product of generator matrices in word order; b.strands() must be n + 2.
RepMatrix braid_word_matrix(const BraidWord& b, int n, const ModelParams& params);

// Exact U_i at delta = sign*phi.
GoldenMatrix exact_tl_generator_matrix(int n, int i, int delta_sign,
                                       RightEndRule rule = RightEndRule::kUniform);

// 2x2 recoupling matrix [[a, b], [b, -a]]. Throws if b is not real.
Eigen::Matrix2d f_matrix(const ModelParams& params);

// diag(mu, lambda) on {|*>, |P>}. Throws if |lambda| != 1.
Eigen::Matrix2cd r_matrix(const ModelParams& params);

// cos^2(2 theta) >= 1/4.
bool theta_validity(double theta);

/// 3-strand representation built from F. Basis order {|*>, |P>}.
struct ThreeStrandFamily {
  double delta;
  Eigen::Matrix2cd R;
  Eigen::Matrix2cd F;
  Eigen::Matrix2cd U;
  Eigen::Matrix2cd V;
  Eigen::Matrix2cd S;
};

ThreeStrandFamily three_strand_family(double theta);

using ModelReport = RelationReport;

// Relation names used in ModelReport.
namespace relation {
inline constexpr const char* kIdempotent = "U_i^2 = delta U_i";
inline constexpr const char* kAdjacent = "U_i U_{i+-1} U_i = U_i";
inline constexpr const char* kFarCommute = "U_i U_j = U_j U_i (|i-j|>1)";
inline constexpr const char* kSymmetric = "U_i real symmetric";
inline constexpr const char* kUnitary = "rho(sigma_i) unitary";
inline constexpr const char* kInverse = "rho(sigma_i) rho(sigma_i^-1) = I";
inline constexpr const char* kBraid = "sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}";
inline constexpr const char* kBraidFar = "sigma_i sigma_j = sigma_j sigma_i (|i-j|>1)";
}  // namespace relation

// n <= 12. Failures are reported, never thrown.
ModelReport verify_model(int n, const ModelParams& params, double tol = 1e-10,
                         RightEndRule rule = RightEndRule::kUniform);

nlohmann::json to_json(const RepMatrix& m);

}  // namespace fibtl
