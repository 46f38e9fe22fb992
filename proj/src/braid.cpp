#include "fibtl/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace fibtl {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw BraidError("strand count must be at least 1", std::to_string(strands_));
  for (Letter l : letters_) {
    if (l == 0) throw BraidError("braid letter 0 is not a generator", "0");
    if (std::abs(l) > strands_ - 1)
      throw BraidError("generator index " + std::to_string(std::abs(l)) + " invalid for " +
                           std::to_string(strands_) + " strands",
                       std::to_string(l));
  }
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (other.strands_ != strands_)
    throw BraidError("cannot concatenate braids on different strand counts", std::to_string(other.strands_));
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(joined));
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    // from_chars rejects a leading '+'
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw BraidError("braid token '" + std::string(token) + "' is not an integer", std::string(token));
    if (value == 0) throw BraidError("braid letter 0 is not a generator", std::string(token));
    if (std::abs(value) > strands - 1)
      throw BraidError("generator index " + std::to_string(std::abs(value)) + " invalid for " +
                           std::to_string(strands) + " strands (token '" + std::string(token) + "')",
                       std::string(token));
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (Letter l : b.letters()) w += l > 0 ? 1 : -1;
  return w;
}

BraidWord inverse_word(const BraidWord& b) {
  std::vector<Letter> letters(b.letters().rbegin(), b.letters().rend());
  for (Letter& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) seen[j] = true;
  }
  return cycles;
}

Permutation closure_permutation(const BraidWord& b) {
  // position[s] = current position of the strand that started at s
  std::vector<int> position(static_cast<std::size_t>(b.strands()));
  std::iota(position.begin(), position.end(), 0);
  for (Letter l : b.letters()) {
    const int i = std::abs(l) - 1;
    for (int& p : position) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return Permutation{std::move(position)};
}

nlohmann::json to_json(const BraidWord& b) { return {{"strands", b.strands()}, {"word", b.letters()}}; }

BraidWord braid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
    throw BraidError("braid JSON needs \"strands\" and \"word\"", j.dump());
  return BraidWord(j.at("strands").get<int>(), j.at("word").get<std::vector<Letter>>());
}

}  // namespace fibtl
