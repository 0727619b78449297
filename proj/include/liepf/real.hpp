#pragma once

#include <string>

#include <mpfr.h>

#include "liepf/numeric.hpp"

namespace liepf {

/// Owning MPFR value with an explicit per-object precision in bits.
///
/// Binary operations take the larger precision of the two operands so that
/// mixing a table entry with a freshly built value never loses bits.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const BigInt& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  /// p / q rounded once.
  static Real ratio(long p, long q, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }

  Real abs() const;
  Real sin() const;
  Real cos() const;
  /// Integer power, negative exponents allowed.
  Real pow(long exponent) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Nearest integer (ties away from zero).
  BigInt round_to_integer() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 30) const;

  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

/// Complex number over Real; enough for characters at torsion points.
struct ComplexReal {
  Real re;
  Real im;

  explicit ComplexReal(mpfr_prec_t bits) : re(bits), im(bits) {}
  ComplexReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  ComplexReal& operator+=(const ComplexReal& rhs);
  ComplexReal& operator-=(const ComplexReal& rhs);
  ComplexReal& operator*=(const ComplexReal& rhs);
  ComplexReal& operator/=(const ComplexReal& rhs);
  Real norm_squared() const { return re * re + im * im; }
};

}  // namespace liepf
