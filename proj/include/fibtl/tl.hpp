#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fibtl/braid.hpp"
#include "fibtl/laurent.hpp"
#include "fibtl/report.hpp"
#include "json.hpp"

namespace fibtl {

struct TLComposition;

/**
 * Basis diagram of the Temperley-Lieb algebra TL_n: a non-crossing perfect
 * matching of 2n boundary points.
 *
 * Endpoint labels 0..n-1 are the top row (left to right) and n..2n-1 the
 * bottom row (left to right). `partner` is a fixed-point-free involution on
 * these labels. Planarity is checked on construction, so every value of this
 * type is a valid diagram.
 */
class PlanarPairing {
 public:
  PlanarPairing(int n, std::vector<int> partner);

  static PlanarPairing identity(int n);
  // Cup on top joining i-1,i and cap on the bottom joining n+i-1,n+i (1 <= i <= n-1).
  static PlanarPairing generator(int n, int i);

  int size() const noexcept { return n_; }
  const std::vector<int>& partner() const noexcept { return partner_; }
  int operator[](int endpoint) const { return partner_[static_cast<std::size_t>(endpoint)]; }

  friend bool operator==(const PlanarPairing&, const PlanarPairing&) = default;
  // Lexicographic on the partner array (sizes are equal in practice).
  friend auto operator<=>(const PlanarPairing& a, const PlanarPairing& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

 private:
  struct Unchecked {};
  PlanarPairing(Unchecked, int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {}
  friend TLComposition tl_compose(const PlanarPairing&, const PlanarPairing&);
  friend std::vector<PlanarPairing> tl_basis_enumerate(int);

  int n_;
  std::vector<int> partner_;
};

struct TLComposition {
  PlanarPairing diagram;
  int loops;
};

PlanarPairing tl_identity(int n);
PlanarPairing tl_generator(int n, int i);

// d1 stacked above d2; d1 * d2 = delta^loops * diagram.
TLComposition tl_compose(const PlanarPairing& d1, const PlanarPairing& d2);

// Loops in the standard closure (top i joined to bottom i).
int tl_trace_loops(const PlanarPairing& d);

std::uint64_t catalan(int n);

// Every non-crossing pairing of size n (1 <= n <= 12), sorted by partner array.
std::vector<PlanarPairing> tl_basis_enumerate(int n);

/// A LaurentPoly-weighted formal sum of diagrams of a common size.
class TLElement {
 public:
  using TermMap = std::map<PlanarPairing, LaurentPoly>;

  explicit TLElement(int n) : n_(n) {}
  TLElement(const PlanarPairing& d, LaurentPoly coeff = LaurentPoly::one());

  static TLElement identity(int n) { return TLElement(PlanarPairing::identity(n)); }
  static TLElement generator(int n, int i) { return TLElement(PlanarPairing::generator(n, i)); }

  int size() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const PlanarPairing& d) const;

  void add_term(const PlanarPairing& d, const LaurentPoly& coeff);

  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const LaurentPoly& c, const TLElement& e);
  friend TLElement operator*(const TLElement& a, const TLElement& b);

  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int n_;
  TermMap terms_;
};

TLElement element_mul(const TLElement& e1, const TLElement& e2);

// Image of a braid word: sigma_i -> A I + A^-1 U_i, sigma_i^-1 -> A^-1 I + A U_i.
TLElement rep_braid_word(const BraidWord& b);

// Linear extension of tr(D) = delta^(loops(D) - 1).
LaurentPoly markov_trace_element(const TLElement& e);

// Checks the defining relations, the braid relations of rep and trace
// symmetry on all pairs of basis diagrams, exactly. A residual is the number
// of diagram terms on which the two sides differ. 1 <= n <= 7.
RelationReport verify_tl_relations(int n);

nlohmann::json to_json(const PlanarPairing& d);
nlohmann::json to_json(const TLElement& e);
PlanarPairing pairing_from_json(const nlohmann::json& j);

}  // namespace fibtl
