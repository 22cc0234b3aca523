#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "tandem/numbers.hpp"
#include "tandem/oracles.hpp"

using namespace tandem;
using namespace tandem::numbers;

namespace {

// Independent oracle: repeated multiplication.
Int slow_factorial(int n) {
    Int r = 1;
    for (int i = 1; i <= n; ++i) r *= i;
    return r;
}

// Independent oracle: count k-subsets of an n-set by bitmask enumeration.
Int count_subsets(int n, int k) {
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) ++count;
    return count;
}

// The tandem table window for |n|,|k| <= 4, frozen row by row (n = -4..4).
const std::int64_t kTandemWindow[9][9] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {6, 1, 0, 0, 0, 0, 0, 0, 0},
    {7, 3, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 2, 3, 1, 0},
    {0, 0, 0, 0, 0, 6, 11, 6, 1},
};

}  // namespace

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    for (int n = 0; n <= 20; ++n) CHECK(factorial(n) == slow_factorial(n));
    CHECK_THROWS_AS(factorial(-1), domain_error);
}

TEST_CASE("binomial on the full plane") {
    SECTION("k = 0 column") {
        for (std::int64_t n = -6; n <= 6; ++n) CHECK(binomial(n, 0) == 1);
    }
    SECTION("small values against subset enumeration") {
        CHECK(binomial(4, 2) == 6);
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == count_subsets(n, k));
    }
    SECTION("negative upper index") {
        CHECK(binomial(-2, 3) == -4);
        for (std::int64_t n = -8; n < 0; ++n)
            for (std::int64_t k = 0; k <= 8; ++k) {
                const Int expect = (k % 2 == 0 ? 1 : -1) * binomial(k - n - 1, k);
                CHECK(binomial(n, k) == expect);
                CHECK((k % 2 == 0 ? 1 : -1) * binomial(-n, k) == binomial(n + k - 1, k));
            }
    }
    SECTION("addition formula everywhere") {
        for (std::int64_t n = -12; n <= 12; ++n)
            for (std::int64_t k = -12; k <= 12; ++k)
                CHECK(binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1));
    }
    SECTION("k < 0 vanishes") {
        for (std::int64_t n = -5; n <= 5; ++n) CHECK(binomial(n, -3) == 0);
    }
}

TEST_CASE("stirling cycle numbers") {
    CHECK(stirling_cycle(4, 2) == 11);
    CHECK(stirling_cycle(0, 0) == 1);
    CHECK(stirling_cycle(-2, -4) == 7);
    CHECK(stirling_cycle(6, 1) == 120);

    SECTION("first column is (n-1)!") {
        for (int n = 1; n <= 9; ++n) CHECK(stirling_cycle(n, 1) == factorial(n - 1));
        for (int n = -3; n <= 0; ++n) CHECK(stirling_cycle(n, 1) == 0);
    }
    SECTION("recurrence holds on the whole test grid") {
        for (std::int64_t n = -12; n <= 12; ++n)
            for (std::int64_t k = -12; k <= 12; ++k)
                CHECK(stirling_cycle(n + 1, k) == n * stirling_cycle(n, k) + stirling_cycle(n, k - 1));
    }
    SECTION("row sums are factorials") {
        for (int n = 0; n <= 9; ++n) {
            Int sum = 0;
            for (int k = 0; k <= n; ++k) sum += stirling_cycle(n, k);
            CHECK(sum == factorial(n));
        }
    }
}

TEST_CASE("stirling subset numbers") {
    CHECK(stirling_subset(4, 2) == 7);
    CHECK(stirling_subset(0, 0) == 1);
    CHECK(stirling_subset(6, 3) == 90);
    CHECK(stirling_subset(6, 3) == oracles::count_set_partitions(6, 3));

    SECTION("recurrence holds on the whole test grid") {
        for (std::int64_t n = -12; n <= 12; ++n)
            for (std::int64_t k = -12; k <= 12; ++k)
                CHECK(stirling_subset(n + 1, k) == k * stirling_subset(n, k) + stirling_subset(n, k - 1));
    }
    SECTION("duality against cycle numbers") {
        for (std::int64_t n = -12; n <= 12; ++n)
            for (std::int64_t k = -12; k <= 12; ++k)
                CHECK(stirling_subset(n, k) == stirling_cycle(-k, -n));
    }
    SECTION("row sums are Bell numbers") {
        for (int n = 0; n <= 9; ++n) {
            Int sum = 0;
            for (int k = 0; k <= n; ++k) sum += stirling_subset(n, k);
            CHECK(sum == oracles::bell(n));
        }
    }
    SECTION("mixed signs vanish") {
        CHECK(stirling_subset(3, -2) == 0);
        CHECK(stirling_subset(-3, 2) == 0);
        CHECK(stirling_cycle(0, 2) == 0);
        CHECK(stirling_cycle(2, 0) == 0);
        CHECK(stirling_cycle(0, -2) == 0);
    }
}

TEST_CASE("table windows") {
    SECTION("tandem window |n|,|k| <= 4") {
        TableWindow w = table_window(TableKind::cycle, -4, 4, -4, 4);
        for (std::int64_t n = -4; n <= 4; ++n)
            for (std::int64_t k = -4; k <= 4; ++k) CHECK(w.at(n, k) == kTandemWindow[n + 4][k + 4]);
    }
    SECTION("single cell") {
        TableWindow w = table_window(TableKind::cycle, 0, 0, 0, 0);
        REQUIRE(w.entries.size() == 1);
        CHECK(w.entries[0] == 1);
    }
    SECTION("subset window is the cycle window reflected through the antidiagonal") {
        TableWindow cyc = table_window(TableKind::cycle, -4, 4, -4, 4);
        TableWindow sub = table_window(TableKind::subset, -4, 4, -4, 4);
        for (std::int64_t n = -4; n <= 4; ++n)
            for (std::int64_t k = -4; k <= 4; ++k) CHECK(sub.at(n, k) == cyc.at(-k, -n));
    }
    SECTION("cap is enforced") {
        CHECK_THROWS_AS(table_window(TableKind::binomial, 0, 2000, 0, 2000), cap_error);
    }
    SECTION("empty ranges are rejected") {
        CHECK_THROWS_AS(table_window(TableKind::cycle, 3, 2, 0, 0), domain_error);
    }
    SECTION("tsv rendering") {
        TableWindow w = table_window(TableKind::cycle, 0, 1, -1, 1);
        CHECK(to_tsv(w) == "n\\k\t-1\t0\t1\n0\t0\t1\t0\n1\t0\t0\t1\n");
    }
    SECTION("json rendering keeps entries as strings") {
        TableWindow w = table_window(TableKind::subset, 0, 0, 0, 1);
        CHECK(to_json(w) ==
              "{\"kind\":\"subset\",\"n_range\":[0,0],\"k_range\":[0,1],"
              "\"entries\":[[\"1\",\"0\"]]}");
    }
}
