#include "majperm/bigint.hpp"

namespace majperm {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0) throw ExactnessError(what + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw ExactnessError(what + ": " + num.str() + " is not divisible by " + den.str());
  return q;
}

}  // namespace majperm
