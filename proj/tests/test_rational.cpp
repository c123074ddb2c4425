#include <doctest.h>

#include "proxigraph/rational.hpp"
#include "support.hpp"

using namespace proxigraph;

TEST_CASE("rationals parse and print in reduced form") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(format_rational(Rational(6, 4)) == "3/2");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("malformed rationals are rejected") {
    for (const char* bad : {"", "1/0", "1/-2", "a", "1/", "/2", "1.5", "1/2/3", " 1", "--1"}) {
        CAPTURE(bad);
        CHECK_CODE(parse_rational(bad), malformed_rational);
    }
}

TEST_CASE("integer comparisons against rationals terminate") {
    const Rational half(1, 2);
    CHECK(half != 0);
    CHECK(0 != half);
    CHECK(Rational(2) == 2);
    CHECK(2 == Rational(2));
    CHECK(half < 1);
    CHECK(half > 0);
}

TEST_CASE("error tokens are kebab case") {
    CHECK(to_string(ErrorCode::not_path_bipartite) == "not-path-bipartite");
    CHECK(to_string(ErrorCode::bound_exceeded) == "bound-exceeded");
    const Error e(ErrorCode::loop_edge, "a");
    CHECK(std::string(e.what()) == "loop-edge: a");
    CHECK(e.code() == ErrorCode::loop_edge);
}
