#pragma once

#include <cstddef>
#include <stdexcept>

#include "fibtl/braid.hpp"
#include "fibtl/laurent.hpp"

namespace fibtl {

// Largest crossing count accepted by the 2^N state-sum evaluator.
inline constexpr std::size_t kStateSumMaxCrossings = 24;

class OracleCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/**
 * Bracket of the braid closure by explicit state summation.
 *
 * Every crossing is smoothed either vertically or into a cup-cap pair; a
 * positive letter weighs A for the vertical smoothing and A^-1 for the cup-cap,
 * a negative letter the reverse. Loops of each state are counted by union-find
 * over the arc segments of the closed diagram. This path never builds a
 * Temperley-Lieb diagram, which keeps it independent of bracket_via_tl.
 *
 * `workers == 0` picks the hardware concurrency. The result does not depend
 * on the split. Throws OracleCapExceeded above kStateSumMaxCrossings.
 */
LaurentPoly bracket_state_sum(const BraidWord& b, unsigned workers = 0);

// tr(rep(b)).
LaurentPoly bracket_via_tl(const BraidWord& b);

// (-A^3)^{-writhe(b)}.
LaurentPoly writhe_normalization(const BraidWord& b);

// (-A^3)^{-writhe} <closure(b)>.
LaurentPoly normalized_bracket(const BraidWord& b);

JonesPoly jones_polynomial(const BraidWord& b);

struct ChiralityCertificate {
  LaurentPoly f;
  LaurentPoly f_mirror;
  bool distinct;
};

// Throws std::logic_error if f(A^-1) disagrees with f of the inverse word.
ChiralityCertificate chirality_certificate(const BraidWord& b);

}  // namespace fibtl
