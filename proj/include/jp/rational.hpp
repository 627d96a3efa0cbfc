#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace jp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serializes as "p" for integral values and "p/q" otherwise. Lossless.
std::string to_string(const Rational& r);

// Accepts "p", "-p/q" and decimal notation like "3.25" (converted exactly).
std::optional<Rational> parse_rational(const std::string& text);

// Closed interval [lo, hi] with lo <= sqrt(x) <= hi and hi - lo <= 2^-bits.
// lo == hi exactly when sqrt(x) lands on the enclosure grid.
struct Interval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
};

Interval sqrt_enclosure(const Rational& x, unsigned bits = 64);

}  // namespace jp
