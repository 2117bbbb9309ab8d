#include "fockqha/integer.hpp"

namespace fockqha {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace fockqha
