#include <random>

#include "doctest.h"
#include "fibtl/bracket.hpp"
#include "test_support.hpp"

using namespace fibtl;

namespace {

const LaurentPoly kDelta{{2, -1}, {-2, -1}};

}  // namespace

TEST_CASE("state sum on small diagrams") {
  CHECK(bracket_state_sum(BraidWord(1)) == LaurentPoly::one());
  CHECK(bracket_state_sum(BraidWord(3)) == kDelta * kDelta);
  CHECK(bracket_state_sum(parse_braid("1", 2)) == lp_monomial(-1, 3));
  CHECK(bracket_state_sum(parse_braid("-1", 2)) == lp_monomial(-1, -3));
  // A^2 delta + 2 + A^-2 delta
  CHECK(bracket_state_sum(parse_braid("1 1", 2)) == (LaurentPoly{{4, -1}, {-4, -1}}));
  CHECK(bracket_state_sum(parse_braid("1 1 1", 2)) == (LaurentPoly{{5, -1}, {-3, -1}, {-7, 1}}));
}

TEST_CASE("TL evaluator on the same diagrams") {
  CHECK(bracket_via_tl(parse_braid("1 1", 2)) == (LaurentPoly{{4, -1}, {-4, -1}}));
  CHECK(bracket_via_tl(parse_braid("1 1 1", 2)) == (LaurentPoly{{5, -1}, {-3, -1}, {-7, 1}}));
  CHECK(normalized_bracket(parse_braid("1 1 1", 2)) == (LaurentPoly{{-4, 1}, {-12, 1}, {-16, -1}}));
}

TEST_CASE("disjoint unknots give delta powers") {
  LaurentPoly expected = LaurentPoly::one();
  for (int n = 1; n <= 8; ++n) {
    CHECK(bracket_via_tl(BraidWord(n)) == expected);
    CHECK(bracket_state_sum(BraidWord(n)) == expected);
    expected *= kDelta;
  }
}

TEST_CASE("Jones polynomial of standard closures") {
  CHECK(jones_polynomial(parse_braid("1 1 1", 2)).to_string() == "1*t^1 + 1*t^3 + -1*t^4");
  CHECK(jones_polynomial(parse_braid("-1 -1 -1", 2)).to_string() == "1*t^-1 + 1*t^-3 + -1*t^-4");
  CHECK(jones_polynomial(parse_braid("1", 2)).to_string() == "1");
  CHECK(jones_polynomial(parse_braid("1 1", 2)).to_string() == "-1*t^(1/2) + -1*t^(5/2)");
  // figure eight: t^-2 - t^-1 + 1 - t + t^2
  CHECK(jones_polynomial(parse_braid("1 -2 1 -2", 3)).in_q ==
        (LaurentPoly{{8, 1}, {4, -1}, {0, 1}, {-4, -1}, {-8, 1}}));
}

TEST_CASE("the two evaluators agree on random braids") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord b = testing::random_braid(rng, 5, 10);
    CHECK(bracket_via_tl(b) == bracket_state_sum(b));
  }
}

TEST_CASE("Markov moves leave f unchanged") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const BraidWord b = testing::random_braid(rng, 4, 8);
    const int n = b.strands();
    std::vector<Letter> up(b.letters());
    const BraidWord bigger(n + 1, up);
    for (int sign : {1, -1}) {
      std::vector<Letter> stab = up;
      stab.push_back(sign * n);
      const BraidWord s(n + 1, stab);
      CHECK(bracket_via_tl(s) == lp_monomial(-1, 3 * sign) * bracket_via_tl(b));
      CHECK(normalized_bracket(s) == normalized_bracket(b));
    }
    CHECK(bracket_via_tl(bigger) == kDelta * bracket_via_tl(b));
    if (!b.empty()) {
      // conjugation by a letter
      std::uniform_int_distribution<int> gen(1, n - 1);
      const BraidWord g(n, {gen(rng)});
      CHECK(normalized_bracket(g * b * inverse_word(g)) == normalized_bracket(b));
    }
  }
}

TEST_CASE("stabilization from one strand") {
  CHECK(bracket_via_tl(parse_braid("1", 2)) == lp_monomial(-1, 3) * bracket_via_tl(BraidWord(1)));
  CHECK(normalized_bracket(parse_braid("1", 2)) == LaurentPoly::one());
  CHECK(normalized_bracket(parse_braid("-1", 2)) == LaurentPoly::one());
}

TEST_CASE("mirror image inverts the variable") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord b = testing::random_braid(rng, 5, 9);
    CHECK(normalized_bracket(inverse_word(b)) == lp_invert_variable(normalized_bracket(b)));
    CHECK(bracket_via_tl(inverse_word(b)) == lp_invert_variable(bracket_via_tl(b)));
  }
}

TEST_CASE("chirality certificates") {
  const auto trefoil = chirality_certificate(parse_braid("1 1 1", 2));
  CHECK(trefoil.distinct);
  CHECK(trefoil.f == (LaurentPoly{{-4, 1}, {-12, 1}, {-16, -1}}));
  CHECK(trefoil.f_mirror == (LaurentPoly{{4, 1}, {12, 1}, {16, -1}}));
  CHECK_FALSE(chirality_certificate(parse_braid("1 -2 1 -2", 3)).distinct);
  CHECK_FALSE(chirality_certificate(BraidWord(2)).distinct);
}

TEST_CASE("state sum does not depend on the worker split") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord b = testing::random_braid(rng, 5, 14);
    const LaurentPoly one = bracket_state_sum(b, 1);
    for (unsigned w : {2u, 3u, 7u, 64u}) CHECK(bracket_state_sum(b, w) == one);
  }
}

TEST_CASE("state sum cap") {
  CHECK_NOTHROW(bracket_state_sum(BraidWord(2, std::vector<Letter>(16, 1))));
  CHECK_THROWS_AS(bracket_state_sum(BraidWord(2, std::vector<Letter>(25, 1))), OracleCapExceeded);
  // the TL path has no cap
  CHECK(bracket_via_tl(BraidWord(2, std::vector<Letter>(25, 1))).size() > 0);
}
