#include "liepf/matrix.hpp"

#include <sstream>
#include <utility>

namespace liepf {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::block(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                     const RationalMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) throw DomainError("hstack: row counts differ");
  RationalMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.cols_) throw DomainError("vstack: column counts differ");
  RationalMatrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::slice(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DomainError("slice out of range");
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = (*this)(row0 + r, col0 + c);
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& k) {
  for (auto& x : data_) x *= k;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(*this);
  for (auto& x : m.data_) x = -x;
  return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << liepf::to_string((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) throw DomainError("determinant of a non-square matrix");
  RationalMatrix m(input);
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  RationalMatrix aug = RationalMatrix::hstack(m, RationalMatrix::identity(m.rows()));
  auto pivots = rref(aug);
  if (pivots.size() < m.rows() || (!pivots.empty() && pivots.back() >= m.cols())) throw DomainError("matrix is singular");
  return aug.slice(0, m.cols(), m.rows(), m.rows());
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy(m);
  return rref(copy).size();
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix reduced(m);
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -reduced(r, free_cols[k]);
  }
  return basis;
}

std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw DomainError("solve: row counts differ");
  RationalMatrix aug = RationalMatrix::hstack(m, rhs);
  auto pivots = rref(aug);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= m.cols()) return std::nullopt;
  RationalMatrix x(m.cols(), rhs.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[r], c) = aug(r, m.cols() + c);
  return x;
}

}  // namespace liepf
