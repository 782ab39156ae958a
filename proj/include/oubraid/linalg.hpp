#pragma once

#include "oubraid/int_matrix.hpp"

#include <vector>

namespace oubraid {

/// Monic characteristic polynomial det(xI - M), coefficients from x^n down
/// to the constant term.
struct CharPoly {
  std::vector<mpz_class> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  const mpz_class& constant_term() const { return coefficients.back(); }
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Exact fraction-free (Bareiss) elimination. No rounding anywhere.
mpz_class det(const IntMatrix& m);
int rank(const IntMatrix& m);
mpz_class trace(const IntMatrix& m);

/// Faddeev-LeVerrier; every division by k is exact over the integers.
CharPoly charpoly(const IntMatrix& m);

/// I_kl * M * I_kl for 1-based 1 <= k < l <= n: swap rows k,l then columns k,l.
IntMatrix conjugate_swap(const IntMatrix& m, int k, int l);

/// Entry (i, j) of the result is entry (n+1-i, n+1-j) of m, i.e. I' M I'.
IntMatrix rotate180(const IntMatrix& m);

bool is_symmetric(const IntMatrix& m);
bool is_strict_lower_triangular(const IntMatrix& m);
bool is_strict_upper_triangular(const IntMatrix& m);

}  // namespace oubraid
