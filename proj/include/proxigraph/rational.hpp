#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under the
// C++20 reversed-operator rules. Exact non-template overloads win overload
// resolution and compare through rational == rational instead.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == rational<std::int64_t>(a); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == rational<std::int64_t>(a); }
}  // namespace boost

namespace proxigraph {

/// Exact distance value. Always kept in reduced form with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or "-p/q". Throws Error(malformed_rational).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace proxigraph
