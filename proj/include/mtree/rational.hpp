#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtree {

// Exact arbitrary-precision rational. Always normalized: lowest terms,
// positive denominator. There is no floating point anywhere in the library;
// every density value, sweep residual and feasibility check is exact.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p" or "p/q" (q > 0, no sign on q). Throws std::invalid_argument on
// anything else, including empty strings and trailing garbage.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q" in lowest terms, "/q" omitted when q == 1.
std::string format_rational(const Rational& value);

}  // namespace mtree
