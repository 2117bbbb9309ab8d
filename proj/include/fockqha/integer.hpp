#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fockqha {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// C(n, k), zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt pow2(unsigned exponent);

std::string to_decimal(const BigInt& value);
std::string to_decimal(const Rational& value);

}  // namespace fockqha
