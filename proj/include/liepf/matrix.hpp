#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "liepf/numeric.hpp"

namespace liepf {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// [[a, b], [c, d]]; block shapes must agree.
  static RationalMatrix block(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                              const RationalMatrix& d);
  static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
  static RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix slice(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& k);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& k) { return a *= k; }
  friend RationalMatrix operator*(const Rational& k, RationalMatrix a) { return a *= k; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix operator-() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  bool is_zero() const;
  bool is_skew() const;
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-exact row reduction.
Rational determinant(const RationalMatrix& m);

/// Inverse; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of {x : m x = 0}.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Some X with m X = rhs, or nullopt when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& rhs);

}  // namespace liepf
