#include <catch2/catch_amalgamated.hpp>

#include "tandem/verify.hpp"

using namespace tandem;
using namespace tandem::verify;

TEST_CASE("verification suites pass with the default seed") {
    Options opt;
    opt.instances = 40;  // the full 200-instance sweep runs in the acceptance gate
    for (const char* suite : {"iverson", "stirling", "analysis", "oracles"}) {
        for (const auto& check : run_suites(suite, opt)) {
            INFO(check.name << ": " << check.detail);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("suite results are deterministic in the seed") {
    Options opt;
    opt.instances = 10;
    const auto a = run_suites("all", opt);
    const auto b = run_suites("all", opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suites("nonsense", Options{}), domain_error);
}
