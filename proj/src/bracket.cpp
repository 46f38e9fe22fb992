#include "fibtl/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <vector>

#include "fibtl/tl.hpp"

namespace fibtl {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    components_ = parent_.size();
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --components_;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_ = 0;
};

// Histogram of states keyed by (A-exponent, loop count).
struct StateHistogram {
  int crossings;
  int max_loops;
  std::vector<std::uint64_t> counts;

  StateHistogram(int n_crossings, int n_max_loops)
      : crossings(n_crossings),
        max_loops(n_max_loops),
        counts(static_cast<std::size_t>((2 * n_crossings + 1) * (n_max_loops + 1)), 0) {}

  std::uint64_t& at(int exponent, int loops) {
    return counts[static_cast<std::size_t>((exponent + crossings) * (max_loops + 1) + loops)];
  }
};

// Evaluates states [begin, end) of the closed braid diagram.
void accumulate_states(const BraidWord& b, std::uint64_t begin, std::uint64_t end, StateHistogram& hist) {
  const int n = b.strands();
  const auto& letters = b.letters();
  const int crossings = static_cast<int>(letters.size());

  // Arc segment (level k, strand position p) sits just above crossing k;
  // level 0 doubles as the one below the last crossing (the closure).
  auto segment = [n, crossings](int level, int p) {
    return static_cast<std::size_t>((level % crossings) * n + p);
  };

  UnionFind uf(static_cast<std::size_t>(crossings * n));
  for (std::uint64_t state = begin; state < end; ++state) {
    uf.reset();
    int exponent = 0;
    for (int k = 0; k < crossings; ++k) {
      const Letter l = letters[static_cast<std::size_t>(k)];
      const int left = std::abs(l) - 1;
      const int sign = l > 0 ? 1 : -1;
      const bool cup_cap = ((state >> k) & 1u) != 0;
      for (int p = 0; p < n; ++p) {
        if (p == left || p == left + 1) continue;
        uf.unite(segment(k, p), segment(k + 1, p));
      }
      if (cup_cap) {
        uf.unite(segment(k, left), segment(k, left + 1));
        uf.unite(segment(k + 1, left), segment(k + 1, left + 1));
        exponent -= sign;
      } else {
        uf.unite(segment(k, left), segment(k + 1, left));
        uf.unite(segment(k, left + 1), segment(k + 1, left + 1));
        exponent += sign;
      }
    }
    ++hist.at(exponent, static_cast<int>(uf.components()));
  }
}

}  // namespace

LaurentPoly bracket_state_sum(const BraidWord& b, unsigned workers) {
  const std::size_t crossings = b.length();
  if (crossings > kStateSumMaxCrossings)
    throw OracleCapExceeded("state-sum evaluation is capped at " + std::to_string(kStateSumMaxCrossings) +
                            " crossings (got " + std::to_string(crossings) + "); use bracket_via_tl");
  if (crossings == 0) return lp_pow(delta_poly(), static_cast<unsigned>(b.strands() - 1));

  const int n_crossings = static_cast<int>(crossings);
  const int max_loops = b.strands() * n_crossings;
  const std::uint64_t states = std::uint64_t{1} << crossings;

  if (workers == 0) workers = states < (1u << 14) ? 1u : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));

  std::vector<StateHistogram> partial(workers, StateHistogram(n_crossings, max_loops));
  if (workers == 1) {
    accumulate_states(b, 0, states, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = states * w / workers;
      const std::uint64_t end = states * (w + 1) / workers;
      pool.emplace_back(accumulate_states, std::cref(b), begin, end, std::ref(partial[w]));
    }
    for (auto& t : pool) t.join();
  }

  StateHistogram total(n_crossings, max_loops);
  for (const auto& h : partial)
    for (std::size_t i = 0; i < h.counts.size(); ++i) total.counts[i] += h.counts[i];

  std::vector<LaurentPoly> delta_powers{LaurentPoly::one()};
  for (int loops = 1; loops < max_loops; ++loops) delta_powers.push_back(delta_powers.back() * delta_poly());

  LaurentPoly result;
  for (int e = -n_crossings; e <= n_crossings; ++e) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      const std::uint64_t count = total.at(e, loops);
      if (count == 0) continue;
      result += LaurentPoly::monomial(BigInt(count), e) * delta_powers[static_cast<std::size_t>(loops - 1)];
    }
  }
  return result;
}

LaurentPoly bracket_via_tl(const BraidWord& b) { return markov_trace_element(rep_braid_word(b)); }

LaurentPoly writhe_normalization(const BraidWord& b) {
  const int w = writhe(b);
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * static_cast<Exponent>(w));
}

LaurentPoly normalized_bracket(const BraidWord& b) { return writhe_normalization(b) * bracket_via_tl(b); }

JonesPoly jones_polynomial(const BraidWord& b) { return jones_substitute(normalized_bracket(b)); }

ChiralityCertificate chirality_certificate(const BraidWord& b) {
  LaurentPoly f = normalized_bracket(b);
  LaurentPoly f_mirror = lp_invert_variable(f);
  if (normalized_bracket(inverse_word(b)) != f_mirror)
    throw std::logic_error("mirror relation f(A^-1) = f_mirror(A) violated");
  const bool distinct = f != f_mirror;
  return ChiralityCertificate{std::move(f), std::move(f_mirror), distinct};
}

}  // namespace fibtl
