#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace entsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// log2 of a positive big integer, accurate to double precision.
/// Returns -infinity for zero.
double log2_big(const BigInt& value);

/// log2 of a non-negative rational. Returns -infinity for zero.
double log2_rational(const Rational& value);

double to_double(const Rational& value);

BigInt factorial(int k);

/// Decimal string form, used by the JSON schemas.
std::string to_decimal(const BigInt& value);
BigInt big_from_decimal(const std::string& text);

}  // namespace entsym
