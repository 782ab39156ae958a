#include "oubraid/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace oubraid {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("BraidWord: strand count must be at least 1");
  for (int g : letters_)
    if (g == 0 || std::abs(g) > strands_ - 1)
      throw std::invalid_argument("BraidWord: letter " + std::to_string(g) +
                                  " out of range for " + std::to_string(strands_) + " strands");
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](int g) { return g > 0; });
}

namespace {

long parse_int(std::string_view s, std::string_view token) {
  long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last)
    throw ParseError("malformed token '" + std::string(token) + "'");
  return value;
}

constexpr long kMaxExponent = 1'000'000;

}  // namespace

BraidWord parse_word(std::string_view text, std::optional<int> strands) {
  if (strands && *strands < 1) throw ParseError("strand count must be at least 1");

  std::vector<int> letters;
  int max_index = 0;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view base = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      exponent = parse_int(token.substr(caret + 1), token);
      if (exponent == 0) continue;
      if (std::labs(exponent) > kMaxExponent) throw ParseError("exponent too large in '" + std::string(token) + "'");
    }
    long g = parse_int(base, token);
    if (g == 0) throw ParseError("generator 0 in '" + std::string(token) + "'");
    if (std::labs(g) > (1L << 30)) throw ParseError("generator index too large in '" + std::string(token) + "'");
    if (strands && std::labs(g) >= *strands)
      throw ParseError("generator " + std::to_string(g) + " needs more than " + std::to_string(*strands) +
                       " strands");
    max_index = std::max(max_index, static_cast<int>(std::labs(g)));
    const int letter = static_cast<int>(exponent < 0 ? -g : g);
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(exponent)), letter);
  }
  return BraidWord(strands.value_or(max_index + 1), std::move(letters));
}

std::string format_word(const BraidWord& word) {
  std::string out;
  for (int g : word.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g);
  }
  return out;
}

std::vector<CrossingEvent> simulate(const BraidWord& word) {
  std::vector<int> at(static_cast<std::size_t>(word.strands()));
  std::iota(at.begin(), at.end(), 1);
  std::vector<CrossingEvent> events;
  events.reserve(word.length());
  const auto letters = word.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int g = letters[k];
    const auto left = static_cast<std::size_t>(std::abs(g) - 1);
    const int l = at[left];
    const int r = at[left + 1];
    events.push_back(g > 0 ? CrossingEvent{k, r, l, +1} : CrossingEvent{k, l, r, -1});
    std::swap(at[left], at[left + 1]);
  }
  return events;
}

Permutation braid_permutation(const BraidWord& word) {
  std::vector<int> at(static_cast<std::size_t>(word.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (int g : word.letters()) {
    const auto left = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(at[left], at[left + 1]);
  }
  // at[p] is the strand ending at bottom position p+1.
  std::vector<int> rho(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) rho[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(rho));
}

IntMatrix ou_matrix(const BraidWord& word, const Permutation& pi) {
  if (pi.size() != word.strands())
    throw std::invalid_argument("ou_matrix: permutation size " + std::to_string(pi.size()) +
                                " does not match strand count " + std::to_string(word.strands()));
  const Permutation slot = pi.inverse();  // strand label -> row index (1-based)
  const int n = word.strands();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& e : simulate(word)) {
    const auto i = static_cast<std::size_t>(slot(e.over_strand) - 1);
    const auto j = static_cast<std::size_t>(slot(e.under_strand) - 1);
    ++counts[i * static_cast<std::size_t>(n) + j];
  }
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto c = counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      m(i, j) = mpz_class(static_cast<unsigned long>(c));
    }
  return m;
}

IntMatrix ou_matrix(const BraidWord& word) { return ou_matrix(word, Permutation::identity(word.strands())); }

std::uint64_t wd_pair(const BraidWord& word, int i, int j) {
  const int n = word.strands();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("wd_pair: strand label out of range");
  if (i == j) throw std::invalid_argument("wd_pair: strands must differ");
  std::uint64_t count = 0;
  for (const auto& e : simulate(word))
    if (e.under_strand == i && e.over_strand == j) ++count;
  return count;
}

BraidWord product(const BraidWord& b, const BraidWord& c) {
  if (b.strands() != c.strands()) throw std::invalid_argument("product: strand counts differ");
  std::vector<int> letters(b.letters().begin(), b.letters().end());
  letters.insert(letters.end(), c.letters().begin(), c.letters().end());
  return BraidWord(b.strands(), std::move(letters));
}

bool move_applies(const BraidWord& word, BraidMove kind, std::size_t position) {
  const auto w = word.letters();
  switch (kind) {
    case BraidMove::FarCommutation:
      return position + 1 < w.size() && w[position] > 0 && w[position + 1] > 0 &&
             std::abs(w[position] - w[position + 1]) != 1;
    case BraidMove::TypeIII:
      return position + 2 < w.size() && w[position] > 0 && w[position + 1] > 0 &&
             w[position] == w[position + 2] && std::abs(w[position] - w[position + 1]) == 1;
  }
  return false;
}

BraidWord apply_braid_move(const BraidWord& word, BraidMove kind, std::size_t position) {
  if (!word.is_positive()) throw std::invalid_argument("apply_braid_move: word is not positive");
  if (!move_applies(word, kind, position))
    throw std::invalid_argument("apply_braid_move: pattern not present at position " + std::to_string(position));
  std::vector<int> letters(word.letters().begin(), word.letters().end());
  if (kind == BraidMove::FarCommutation) {
    std::swap(letters[position], letters[position + 1]);
  } else {
    const int i = letters[position];
    const int j = letters[position + 1];
    letters[position] = j;
    letters[position + 1] = i;
    letters[position + 2] = j;
  }
  return BraidWord(word.strands(), std::move(letters));
}

}  // namespace oubraid
