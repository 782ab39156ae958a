#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace oubraid {

/// Square matrix of arbitrary-precision integers, row-major.
/// Indices are 0-based; dimension is at least 1.
class IntMatrix {
public:
  /// n x n zero matrix. Throws std::invalid_argument for n < 1.
  explicit IntMatrix(int n);
  /// Throws unless `rows` is non-empty and square.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }

  mpz_class& operator()(int i, int j) { return data_[index(i, j)]; }
  const mpz_class& operator()(int i, int j) const { return data_[index(i, j)]; }

  std::vector<mpz_class> row(int i) const;
  std::vector<mpz_class> column(int j) const;

  IntMatrix transposed() const;

  IntMatrix& operator+=(const IntMatrix& other);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const mpz_class& scalar, IntMatrix m);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Rows separated by newlines, entries by single spaces.
  std::string to_string() const;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<mpz_class> data_;
};

}  // namespace oubraid
