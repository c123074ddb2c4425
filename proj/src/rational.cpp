#include "proxigraph/rational.hpp"

#include <charconv>

#include "proxigraph/error.hpp"

namespace proxigraph {

namespace {

std::int64_t parse_integer(std::string_view part, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && part.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (part.empty() || first == last || ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::malformed_rational, "'" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const auto num = parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw Error(ErrorCode::malformed_rational, "'" + std::string(text) + "'");
    }
    const auto den = parse_integer(den_text, text);
    if (den == 0) {
        throw Error(ErrorCode::malformed_rational, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace proxigraph
