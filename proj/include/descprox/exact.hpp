#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace descprox {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/// Accepts "3", "-2", "1.25" and "3/2". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// Exact decimal form when the denominator is 2^a * 5^b ("1.5"), else "p/q".
std::string rational_to_string(const Rational& r);

using RationalPoint = std::vector<Rational>;

}  // namespace descprox
