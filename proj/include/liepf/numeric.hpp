#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace liepf {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised for invalid user input (bad designators, non-dominant weights, non-skew matrices).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configured size guard (orbit, weight system, Weyl group) would be exceeded.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised on broken internal invariants, e.g. a non-integral value where theory demands an integer.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const BigInt& value);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" and "p/q" forms.
Rational parse_rational(std::string_view text);

/// Exact conversion; throws InternalError when the rational is not an integer.
BigInt to_integer(const Rational& value, std::string_view what);

}  // namespace liepf
