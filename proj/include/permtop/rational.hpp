#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace permtop {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// 50 significant decimal digits; used only where a logarithm enters.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// n! ; values up to 600! come from a shared table.
BigInt factorial(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& q);

double to_double(const BigRational& q);
HighFloat to_high(const BigRational& q);

} // namespace permtop
