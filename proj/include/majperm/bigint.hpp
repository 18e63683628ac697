#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace majperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a quantity that must be an exact integer is not. Always a bug
// signal, never an expected outcome.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt factorial(unsigned n);

// Exact quotient; throws ExactnessError when `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace majperm
