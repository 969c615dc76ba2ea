#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace latticecf {

// Expression templates off: values behave like plain integers under auto.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using IntSeq = std::vector<Integer>;

Integer gcd(const Integer& a, const Integer& b);

// Floor and ceiling of a/b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

// Representative of a modulo m in [0, m), m > 0.
Integer mod(const Integer& a, const Integer& m);

// Bezout coefficients: returns g = gcd(a,b) >= 0 with a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

// Inverse of a modulo m in [1, m) (or 0 when m == 1); throws a domain error
// when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

// Decimal parsing; accepts an optional leading sign. Throws ErrorKind::parse.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& x);

// "[a,b,c]"
std::string format_sequence(const IntSeq& seq);

// Parses "a,b,c" or "[a,b,c]" (whitespace tolerated).
IntSeq parse_sequence(std::string_view text);

} // namespace latticecf
