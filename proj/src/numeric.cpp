#include "liepf/numeric.hpp"

#include "liepf/real.hpp"

#include <cctype>
#include <utility>

namespace liepf {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw DomainError("malformed number: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(trimmed, text));
  BigInt num = parse_integer(trimmed.substr(0, slash), text);
  BigInt den = parse_integer(trimmed.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt to_integer(const Rational& value, std::string_view what) {
  if (denominator(value) != 1) {
    throw InternalError(std::string(what) + " is not integral: " + to_string(value));
  }
  return numerator(value);
}

// ---- Real ----------------------------------------------------------------

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigInt& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs and leave `other` as a valid minimal-precision zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ratio(long p, long q, mpfr_prec_t bits) {
  Real r(p, bits);
  mpfr_div_si(r.value_, r.value_, q, MPFR_RNDN);
  return r;
}

namespace {

void widen(mpfr_t target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real Real::sin() const {
  Real r(precision());
  mpfr_sin(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::cos() const {
  Real r(precision());
  mpfr_cos(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::pow(long exponent) const {
  Real r(precision());
  mpfr_pow_si(r.value_, value_, exponent, MPFR_RNDN);
  return r;
}

BigInt Real::round_to_integer() const {
  BigInt out;
  Real rounded(precision());
  mpfr_round(rounded.value_, value_);
  mpfr_get_z(out.backend().data(), rounded.value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

// ---- ComplexReal ---------------------------------------------------------

ComplexReal& ComplexReal::operator+=(const ComplexReal& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

ComplexReal& ComplexReal::operator-=(const ComplexReal& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

ComplexReal& ComplexReal::operator*=(const ComplexReal& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  Real i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexReal& ComplexReal::operator/=(const ComplexReal& rhs) {
  Real denom = rhs.norm_squared();
  Real r = (re * rhs.re + im * rhs.im) / denom;
  Real i = (im * rhs.re - re * rhs.im) / denom;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

}  // namespace liepf
