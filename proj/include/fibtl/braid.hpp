#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fibtl {

// Signed Artin generator: +i is sigma_i, -i is sigma_i^{-1}; never zero.
using Letter = int;

class BraidError : public std::invalid_argument {
 public:
  BraidError(const std::string& message, std::string token)
      : std::invalid_argument(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A word in the braid group B_n. The empty word is the identity braid.
class BraidWord {
 public:
  // Throws BraidError when a letter is zero or |letter| > strands - 1.
  BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Concatenation; both words must live in the same B_n.
  BraidWord operator*(const BraidWord& other) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

// Whitespace- or comma-separated signed integers.
BraidWord parse_braid(std::string_view text, int strands);

int writhe(const BraidWord& b);

// Reversed and negated letters: the closure is the mirror image.
BraidWord inverse_word(const BraidWord& b);

/// Underlying permutation of a braid (0-indexed images); one cycle per
/// component of the closure.
struct Permutation {
  std::vector<int> image;

  bool is_identity() const;
  int cycle_count() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation closure_permutation(const BraidWord& b);

nlohmann::json to_json(const BraidWord& b);
BraidWord braid_from_json(const nlohmann::json& j);

}  // namespace fibtl
