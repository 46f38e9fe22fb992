#pragma once

#include <random>
#include <vector>

#include "fibtl/braid.hpp"
#include "fibtl/laurent.hpp"

namespace fibtl::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 6, Exponent max_exp = 50,
                               long long max_coeff = 1'000'000) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<Exponent> exp(-max_exp, max_exp);
  std::uniform_int_distribution<long long> coeff(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int k = terms(rng); k > 0; --k) p.add_term(BigInt(coeff(rng)), exp(rng));
  return p;
}

inline BraidWord random_braid(std::mt19937_64& rng, int max_strands = 5, int max_letters = 10) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  const int n = strands_dist(rng);
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution negative(0.5);
  std::vector<Letter> letters;
  for (int k = len(rng); k > 0; --k) letters.push_back(negative(rng) ? -gen(rng) : gen(rng));
  return BraidWord(n, std::move(letters));
}

}  // namespace fibtl::testing
