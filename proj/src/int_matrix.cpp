#include "oubraid/int_matrix.hpp"

#include <stdexcept>

namespace oubraid {

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("IntMatrix: dimension must be at least 1");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), mpz_class(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("IntMatrix: rows are not square");
    int j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n_)
      throw std::invalid_argument("IntMatrix: rows are not square");
    for (int j = 0; j < m.n_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<mpz_class> IntMatrix::row(int i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
          data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + static_cast<std::size_t>(n_))};
}

std::vector<mpz_class> IntMatrix::column(int j) const {
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("IntMatrix: dimension mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw std::invalid_argument("IntMatrix: dimension mismatch in *");
  const int n = lhs.n_;
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (sgn(lhs(i, k)) == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

IntMatrix operator*(const mpz_class& scalar, IntMatrix m) {
  for (auto& v : m.data_) v *= scalar;
  return m;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += (*this)(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace oubraid
