#pragma once

#include "oubraid/int_matrix.hpp"
#include "oubraid/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oubraid {

/// Raised for malformed braid word text.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A braid diagram on n strands as a sequence of Artin letters: +i is sigma_i,
/// -i is sigma_i^{-1}, with 1 <= |i| <= n-1.
class BraidWord {
public:
  BraidWord() = default;
  /// Throws std::invalid_argument if n < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_positive() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// One crossing of the diagram, strands named by their top position.
struct CrossingEvent {
  std::size_t index = 0;
  int over_strand = 0;
  int under_strand = 0;
  int sign = 0;

  friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

/// Tokens are whitespace separated: "g" or "g^k" with g, k nonzero integers.
/// "2^-4" expands to four letters -2. Without `strands`, n = 1 + max |g|.
BraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt);

/// Inverse of parse_word: letters joined by single spaces, no exponents.
std::string format_word(const BraidWord& word);

/// Runs the diagram top to bottom. For +i the strand at position i+1 passes
/// over; for -i the strand at position i passes over.
std::vector<CrossingEvent> simulate(const BraidWord& word);

/// rho(i) = j iff the strand starting at top position i ends at bottom position j.
Permutation braid_permutation(const BraidWord& word);

/// M[i][j] = #crossings where strand pi(i+1) is over strand pi(j+1) (0-based i, j).
IntMatrix ou_matrix(const BraidWord& word, const Permutation& pi);
IntMatrix ou_matrix(const BraidWord& word);

/// Number of crossings where s_i is under s_j.
std::uint64_t wd_pair(const BraidWord& word, int i, int j);

/// Concatenation BC.
BraidWord product(const BraidWord& b, const BraidWord& c);

enum class BraidMove {
  FarCommutation,  // s_i s_j -> s_j s_i, |i - j| != 1
  TypeIII,         // s_i s_j s_i -> s_j s_i s_j, |i - j| == 1
};

/// Rewrites the positive word at `position`. Throws std::invalid_argument if
/// the word is not positive or the pattern is absent.
BraidWord apply_braid_move(const BraidWord& word, BraidMove kind, std::size_t position);

/// True if `kind` applies at `position`.
bool move_applies(const BraidWord& word, BraidMove kind, std::size_t position);

}  // namespace oubraid
