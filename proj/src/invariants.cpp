#include "oubraid/invariants.hpp"

#include "rng.hpp"

#include <algorithm>

namespace oubraid {

std::string CrossingMultiset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += rows[i][j].get_str();
    }
    out += "}";
  }
  return out + "}";
}

CrossingMultiset canonical_multiset(std::vector<std::vector<mpz_class>> rows) {
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::sort(rows.begin(), rows.end());
  return CrossingMultiset{std::move(rows)};
}

mpz_class det_of(const BraidWord& word) { return det(ou_matrix(word)); }
int rank_of(const BraidWord& word) { return rank(ou_matrix(word)); }
CharPoly charpoly_of(const BraidWord& word) { return charpoly(ou_matrix(word)); }

CrossingMultiset over_set(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> rows;
  for (int i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
  return canonical_multiset(std::move(rows));
}

CrossingMultiset under_set(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> cols;
  for (int j = 0; j < m.size(); ++j) cols.push_back(m.column(j));
  return canonical_multiset(std::move(cols));
}

CrossingMultiset over_set(const BraidWord& word) { return over_set(ou_matrix(word)); }
CrossingMultiset under_set(const BraidWord& word) { return under_set(ou_matrix(word)); }

BraidWord random_rewrite(const BraidWord& word, std::size_t moves, std::uint64_t seed) {
  if (!word.is_positive()) throw std::invalid_argument("random_rewrite: word is not positive");
  std::mt19937_64 rng(seed);
  BraidWord current = word;
  struct Site {
    BraidMove kind;
    std::size_t position;
  };
  std::vector<Site> sites;
  for (std::size_t step = 0; step < moves; ++step) {
    sites.clear();
    const auto w = current.letters();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) >= 2) sites.push_back({BraidMove::FarCommutation, p});
      if (move_applies(current, BraidMove::TypeIII, p)) sites.push_back({BraidMove::TypeIII, p});
    }
    if (sites.empty()) break;
    const Site& s = sites[detail::uniform_below(rng, sites.size())];
    current = apply_braid_move(current, s.kind, s.position);
  }
  return current;
}

InvariantReport invariant_report(const BraidWord& word, std::optional<WdResult> wd) {
  InvariantReport r;
  r.strands = word.strands();
  r.word = format_word(word);
  r.braid_permutation = braid_permutation(word);
  r.ou_matrix = ou_matrix(word);
  const IntMatrix& m = r.ou_matrix;
  r.det = det(m);
  r.charpoly = charpoly(m);
  r.rank = rank(m);
  r.over_set = over_set(m);
  r.under_set = under_set(m);
  r.wd = std::move(wd);
  return r;
}

}  // namespace oubraid
