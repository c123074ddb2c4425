#pragma once

#include <optional>

#include "proxigraph/error.hpp"

// The error code thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<proxigraph::ErrorCode> thrown_code(F&& f) {
    try {
        f();
    } catch (const proxigraph::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

#define CHECK_CODE(expr, expected) CHECK(thrown_code([&] { (void)(expr); }) == proxigraph::ErrorCode::expected)
