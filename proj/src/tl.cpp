#include "fibtl/tl.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace fibtl {

namespace {

// Position of an endpoint on the boundary circle: top row left to right,
// then bottom row right to left.
int cyclic_position(int label, int n) { return label < n ? label : 3 * n - 1 - label; }

void check_size(int n) {
  if (n < 1) throw std::invalid_argument("TL diagram size must be at least 1, got " + std::to_string(n));
}

}  // namespace

PlanarPairing::PlanarPairing(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
  check_size(n);
  const int m = 2 * n;
  if (static_cast<int>(partner_.size()) != m)
    throw std::invalid_argument("partner array must have 2n = " + std::to_string(m) + " entries");
  for (int i = 0; i < m; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= m || j == i || partner_[static_cast<std::size_t>(j)] != i)
      throw std::invalid_argument("partner array is not a fixed-point-free involution at endpoint " +
                                  std::to_string(i));
  }
  for (int i = 0; i < m; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j < i) continue;
    const int lo = std::min(cyclic_position(i, n), cyclic_position(j, n));
    const int hi = std::max(cyclic_position(i, n), cyclic_position(j, n));
    for (int k = 0; k < m; ++k) {
      const int l = partner_[static_cast<std::size_t>(k)];
      if (l < k) continue;
      const int pk = cyclic_position(k, n);
      const int pl = cyclic_position(l, n);
      const bool k_inside = lo < pk && pk < hi;
      const bool l_inside = lo < pl && pl < hi;
      if (k_inside != l_inside)
        throw std::invalid_argument("chords " + std::to_string(i) + "-" + std::to_string(j) + " and " +
                                    std::to_string(k) + "-" + std::to_string(l) + " cross");
    }
  }
}

PlanarPairing PlanarPairing::identity(int n) {
  check_size(n);
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    partner[static_cast<std::size_t>(i)] = i + n;
    partner[static_cast<std::size_t>(i + n)] = i;
  }
  return PlanarPairing(Unchecked{}, n, std::move(partner));
}

PlanarPairing PlanarPairing::generator(int n, int i) {
  check_size(n);
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("TL generator index " + std::to_string(i) + " out of range for n = " +
                                std::to_string(n));
  PlanarPairing d = identity(n);
  auto& p = d.partner_;
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i);
  const auto n_ = static_cast<std::size_t>(n);
  p[a] = i;
  p[b] = i - 1;
  p[n_ + a] = n + i;
  p[n_ + b] = n + i - 1;
  return d;
}

PlanarPairing tl_identity(int n) { return PlanarPairing::identity(n); }
PlanarPairing tl_generator(int n, int i) { return PlanarPairing::generator(n, i); }

TLComposition tl_compose(const PlanarPairing& d1, const PlanarPairing& d2) {
  const int n = d1.size();
  if (d2.size() != n)
    throw std::invalid_argument("cannot compose TL diagrams of sizes " + std::to_string(n) + " and " +
                                std::to_string(d2.size()));

  std::vector<bool> middle_seen(static_cast<std::size_t>(n), false);
  std::vector<int> result(static_cast<std::size_t>(2 * n), -1);

  // Walk from an endpoint of d1 (upper = true) or d2 until the path leaves
  // through the outer boundary; returns the result label reached.
  auto walk = [&](bool upper, int label) {
    int cur = upper ? d1[label] : d2[label];
    for (;;) {
      if (upper) {
        if (cur < n) return cur;
        const int m = cur - n;
        middle_seen[static_cast<std::size_t>(m)] = true;
        upper = false;
        cur = d2[m];
      } else {
        if (cur >= n) return cur;
        const int m = cur;
        middle_seen[static_cast<std::size_t>(m)] = true;
        upper = true;
        cur = d1[m + n];
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    if (result[static_cast<std::size_t>(t)] >= 0) continue;
    const int end = walk(true, t);
    result[static_cast<std::size_t>(t)] = end;
    result[static_cast<std::size_t>(end)] = t;
  }
  for (int s = n; s < 2 * n; ++s) {
    if (result[static_cast<std::size_t>(s)] >= 0) continue;
    const int end = walk(false, s);
    result[static_cast<std::size_t>(s)] = end;
    result[static_cast<std::size_t>(end)] = s;
  }

  // Whatever is left in the middle closes up into loops.
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    while (!middle_seen[static_cast<std::size_t>(cur)]) {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      const int below = d2[cur];          // stays in the middle row
      middle_seen[static_cast<std::size_t>(below)] = true;
      cur = d1[below + n] - n;            // back up through d1
    }
  }
  return TLComposition{PlanarPairing(PlanarPairing::Unchecked{}, n, std::move(result)), loops};
}

int tl_trace_loops(const PlanarPairing& d) {
  const int n = d.size();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
  int loops = 0;
  for (int v = 0; v < 2 * n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++loops;
    int cur = v;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      const int other = d[cur];
      seen[static_cast<std::size_t>(other)] = true;
      cur = other < n ? other + n : other - n;  // closure arc
    }
  }
  return loops;
}

namespace {

void enumerate_matchings(std::vector<int>& match, int m, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int p = 0; p < m; ++p) {
    if (match[static_cast<std::size_t>(p)] < 0) {
      first = p;
      break;
    }
  }
  if (first < 0) {
    out.push_back(match);
    return;
  }
  // Partner of `first` lies in the unmatched run that starts at `first` and
  // leaves an even block between them.
  for (int q = first + 1; q < m; ++q) {
    if (match[static_cast<std::size_t>(q)] >= 0) break;
    if ((q - first) % 2 == 0) continue;
    match[static_cast<std::size_t>(first)] = q;
    match[static_cast<std::size_t>(q)] = first;
    enumerate_matchings(match, m, out);
    match[static_cast<std::size_t>(first)] = -1;
    match[static_cast<std::size_t>(q)] = -1;
  }
}

}  // namespace

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
  return c;
}

std::vector<PlanarPairing> tl_basis_enumerate(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("TL basis enumeration supports 1 <= n <= 12, got " + std::to_string(n));
  const int m = 2 * n;
  std::vector<std::vector<int>> by_position;
  std::vector<int> match(static_cast<std::size_t>(m), -1);
  enumerate_matchings(match, m, by_position);

  std::vector<PlanarPairing> basis;
  basis.reserve(by_position.size());
  for (const auto& pm : by_position) {
    std::vector<int> partner(static_cast<std::size_t>(m));
    for (int label = 0; label < m; ++label) {
      const int other_pos = pm[static_cast<std::size_t>(cyclic_position(label, n))];
      // cyclic_position is its own inverse on [0, 2n)
      partner[static_cast<std::size_t>(label)] = cyclic_position(other_pos, n);
    }
    basis.push_back(PlanarPairing(PlanarPairing::Unchecked{}, n, std::move(partner)));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

TLElement::TLElement(const PlanarPairing& d, LaurentPoly coeff) : n_(d.size()) {
  if (!coeff.is_zero()) terms_.emplace(d, std::move(coeff));
}

LaurentPoly TLElement::coeff(const PlanarPairing& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TLElement::add_term(const PlanarPairing& d, const LaurentPoly& coeff) {
  if (d.size() != n_)
    throw std::invalid_argument("diagram of size " + std::to_string(d.size()) + " added to TL_" +
                                std::to_string(n_) + " element");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

TLElement operator*(const LaurentPoly& c, const TLElement& e) {
  TLElement r(e.n_);
  for (const auto& [d, coeff] : e.terms_) r.add_term(d, c * coeff);
  return r;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("cannot multiply TL_" + std::to_string(a.n_) + " and TL_" +
                                std::to_string(b.n_) + " elements");
  std::vector<LaurentPoly> delta_powers{LaurentPoly::one()};
  TLElement r(a.n_);
  for (const auto& [d1, c1] : a.terms_) {
    for (const auto& [d2, c2] : b.terms_) {
      auto [d, loops] = tl_compose(d1, d2);
      while (static_cast<int>(delta_powers.size()) <= loops)
        delta_powers.push_back(delta_powers.back() * delta_poly());
      r.add_term(d, c1 * c2 * delta_powers[static_cast<std::size_t>(loops)]);
    }
  }
  return r;
}

TLElement element_mul(const TLElement& e1, const TLElement& e2) { return e1 * e2; }

TLElement rep_braid_word(const BraidWord& b) {
  const int n = b.strands();
  const PlanarPairing id = PlanarPairing::identity(n);
  TLElement acc = TLElement::identity(n);
  for (Letter l : b.letters()) {
    const int sign = l > 0 ? 1 : -1;
    TLElement factor(id, LaurentPoly::monomial(1, sign));
    factor.add_term(PlanarPairing::generator(n, std::abs(l)), LaurentPoly::monomial(1, -sign));
    acc = acc * factor;
  }
  return acc;
}

LaurentPoly markov_trace_element(const TLElement& e) {
  LaurentPoly sum;
  for (const auto& [d, c] : e.terms()) sum += c * lp_pow(delta_poly(), static_cast<unsigned>(tl_trace_loops(d) - 1));
  return sum;
}

RelationReport verify_tl_relations(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("TL relation suite supports 1 <= n <= 7, got " + std::to_string(n));
  RelationReport report{n, 0.0, {}};
  auto mismatch = [](const TLElement& lhs, const TLElement& rhs) {
    return static_cast<double>((lhs - rhs).terms().size());
  };
  const LaurentPoly& delta = delta_poly();
  std::vector<TLElement> u;
  for (int i = 1; i < n; ++i) u.push_back(TLElement::generator(n, i));
  auto rep = [n](std::vector<Letter> word) { return rep_braid_word(BraidWord(n, std::move(word))); };

  double idempotent = 0, adjacent = 0, far = 0, inverse = 0, braid = 0, braid_far = 0;
  for (int i = 1; i < n; ++i) {
    const TLElement& ui = u[static_cast<std::size_t>(i - 1)];
    idempotent = std::max(idempotent, mismatch(ui * ui, delta * ui));
    inverse = std::max(inverse, mismatch(rep({i, -i}), TLElement::identity(n)));
    inverse = std::max(inverse, mismatch(rep({-i, i}), TLElement::identity(n)));
    for (int j = 1; j < n; ++j) {
      const TLElement& uj = u[static_cast<std::size_t>(j - 1)];
      if (std::abs(i - j) == 1) {
        adjacent = std::max(adjacent, mismatch(ui * uj * ui, ui));
        if (j == i + 1) braid = std::max(braid, mismatch(rep({i, j, i}), rep({j, i, j})));
      } else if (j > i + 1) {
        far = std::max(far, mismatch(ui * uj, uj * ui));
        braid_far = std::max(braid_far, mismatch(rep({i, j}), rep({j, i})));
      }
    }
  }

  double trace = 0;
  const auto basis = tl_basis_enumerate(n);
  for (const auto& d1 : basis) {
    for (const auto& d2 : basis) {
      const auto [ab, loops_ab] = tl_compose(d1, d2);
      const auto [ba, loops_ba] = tl_compose(d2, d1);
      if (loops_ab + tl_trace_loops(ab) != loops_ba + tl_trace_loops(ba)) trace += 1;
    }
  }

  report.add("U_i^2 = delta U_i", idempotent);
  report.add("U_i U_{i+-1} U_i = U_i", adjacent);
  report.add("U_i U_j = U_j U_i (|i-j|>1)", far);
  report.add("rep(sigma_i) rep(sigma_i^-1) = I", inverse);
  report.add("rep braid relation", braid);
  report.add("rep far commutation", braid_far);
  report.add("tr(ab) = tr(ba) on basis pairs", trace);
  report.add("basis count = Catalan(n)",
             std::abs(static_cast<double>(basis.size()) - static_cast<double>(catalan(n))));
  return report;
}

nlohmann::json to_json(const PlanarPairing& d) { return {{"n", d.size()}, {"partner", d.partner()}}; }

nlohmann::json to_json(const TLElement& e) {
  auto arr = nlohmann::json::array();
  for (const auto& [d, c] : e.terms()) arr.push_back({to_json(d), to_json(c)});
  return arr;
}

PlanarPairing pairing_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("partner"))
    throw std::invalid_argument("pairing JSON needs \"n\" and \"partner\"");
  return PlanarPairing(j.at("n").get<int>(), j.at("partner").get<std::vector<int>>());
}

}  // namespace fibtl
