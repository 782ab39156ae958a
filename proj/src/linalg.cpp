#include "oubraid/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace oubraid {

namespace {

// Fraction-free echelon form in place. Returns the number of pivots and the
// parity of row swaps. Skipped columns keep the divisions exact because every
// surviving entry is still a minor of the original matrix.
struct Elimination {
  int rank = 0;
  bool odd_swaps = false;
};

Elimination bareiss(std::vector<std::vector<mpz_class>>& a) {
  const int n = static_cast<int>(a.size());
  Elimination result;
  mpz_class prev_pivot = 1;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (sgn(a[i][col]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      result.odd_swaps = !result.odd_swaps;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        mpz_class v = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = a[r][col];
    ++r;
  }
  result.rank = r;
  return result;
}

std::vector<std::vector<mpz_class>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

std::string CharPoly::to_string() const {
  std::string out;
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    const mpz_class& c = coefficients[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const int power = n - k;
    mpz_class mag = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1 || power == 0) out += mag.get_str();
    if (power >= 1) out += "x";
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

mpz_class det(const IntMatrix& m) {
  auto a = to_rows(m);
  const int n = m.size();
  Elimination e = bareiss(a);
  if (e.rank < n) return 0;
  mpz_class d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return e.odd_swaps ? mpz_class(-d) : d;
}

int rank(const IntMatrix& m) {
  auto a = to_rows(m);
  return bareiss(a).rank;
}

mpz_class trace(const IntMatrix& m) {
  mpz_class t = 0;
  for (int i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

CharPoly charpoly(const IntMatrix& m) {
  const int n = m.size();
  CharPoly p;
  p.coefficients.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
  p.coefficients[0] = 1;
  // N_k = M N_{k-1} + c_{k-1} I, c_k = -tr(M N_k) / k, with N_0 = 0, c_0 = 1.
  IntMatrix acc(n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) acc(i, i) += p.coefficients[static_cast<std::size_t>(k - 1)];
    acc = m * acc;
    mpz_class t = -trace(acc);
    mpz_class c;
    mpz_divexact_ui(c.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    p.coefficients[static_cast<std::size_t>(k)] = c;
  }
  return p;
}

IntMatrix conjugate_swap(const IntMatrix& m, int k, int l) {
  const int n = m.size();
  if (k < 1 || l > n || k >= l) throw std::out_of_range("conjugate_swap: need 1 <= k < l <= n");
  auto swap_index = [&](int i) { return i == k - 1 ? l - 1 : (i == l - 1 ? k - 1 : i); };
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(swap_index(i), swap_index(j));
  return out;
}

IntMatrix rotate180(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
  return out;
}

bool is_symmetric(const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_strict_lower_triangular(const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j)
      if (sgn(m(i, j)) != 0) return false;
  return true;
}

bool is_strict_upper_triangular(const IntMatrix& m) {
  return is_strict_lower_triangular(m.transposed());
}

}  // namespace oubraid
