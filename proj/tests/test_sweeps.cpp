#include <doctest.h>

#include <sstream>

#include "proxigraph/sweeps.hpp"
#include "support.hpp"

using namespace proxigraph;

TEST_CASE("run_indexed reports the smallest failing index for any worker count") {
    const auto check = [](std::uint64_t i) -> std::optional<std::string> {
        if (i % 397 == 250) return "bad " + std::to_string(i);
        return std::nullopt;
    };
    for (unsigned jobs : {1u, 2u, 4u, 7u}) {
        const auto outcome = run_indexed(5000, jobs, nullptr, check);
        CHECK(outcome.checked == 251);
        CHECK(outcome.counterexample == "instance 250: bad 250");
    }
    const auto clean = run_indexed(3000, 3, nullptr, [](std::uint64_t) { return std::optional<std::string>{}; });
    CHECK(clean.checked == 3000);
    CHECK_FALSE(clean.counterexample.has_value());
}

TEST_CASE("run_indexed turns exceptions into counterexamples and reports progress") {
    std::ostringstream progress;
    const auto outcome = run_indexed(2500, 1, &progress, [](std::uint64_t i) -> std::optional<std::string> {
        if (i == 2100) throw std::runtime_error("boom");
        return std::nullopt;
    });
    CHECK(outcome.checked == 2101);
    CHECK(outcome.counterexample->find("boom") != std::string::npos);
    CHECK(progress.str().find("1000/2500") != std::string::npos);
    CHECK(progress.str().find("2000/2500") != std::string::npos);
}

TEST_CASE("every catalogued sweep passes at reduced size") {
    for (const auto& info : sweep_catalog()) {
        CAPTURE(info.id);
        SweepOptions o = default_sweep_options(info.id);
        if (o.max_n > 0) o.max_n = 4;
        if (o.instances > 0) o.instances = 40;
        o.jobs = 2;
        const auto report = run_sweep(info.id, o);
        CHECK(report.passed());
        CHECK(report.checked > 0);
        CHECK(report.id == info.id);
    }
    CHECK(sweep_catalog().size() == 12);
}

TEST_CASE("sweep results do not depend on the worker count") {
    SweepOptions o = default_sweep_options("t3.4");
    o.max_n = 4;
    o.jobs = 1;
    const auto one = run_sweep("t3.4", o);
    o.jobs = 3;
    const auto three = run_sweep("t3.4", o);
    CHECK(one.checked == three.checked);
    CHECK(one.details == three.details);
}

TEST_CASE("sweep argument errors") {
    CHECK_CODE(run_sweep("t0", SweepOptions{}), unknown_name);
    CHECK_CODE(default_sweep_options("t0"), unknown_name);
    SweepOptions o;
    o.max_n = 8;
    CHECK_CODE(run_sweep("t3.9", o), bound_exceeded);
}
