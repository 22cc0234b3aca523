#include <catch2/catch_amalgamated.hpp>

#include "tandem/numbers.hpp"
#include "tandem/oracles.hpp"

using namespace tandem;
using namespace tandem::oracles;

TEST_CASE("permutation cycle counts") {
    CHECK(count_perms_by_cycles(4, 2) == 11);
    CHECK(count_perms_by_cycles(0, 0) == 1);
    CHECK(count_perms_by_cycles(5, 1) == 24);

    SECTION("matches the cycle-number table") {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(count_perms_by_cycles(n, k) == numbers::stirling_cycle(n, k));
    }
    SECTION("cap") { CHECK_THROWS_AS(count_perms_by_cycles(10, 2), cap_error); }
}

TEST_CASE("set partition counts and Bell numbers") {
    CHECK(count_set_partitions(4, 2) == 7);
    for (int n = 1; n <= 8; ++n) CHECK(count_set_partitions(n, n) == 1);
    CHECK(bell(5) == 52);
    CHECK(bell(0) == 1);

    SECTION("matches the subset-number table") {
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(count_set_partitions(n, k) == numbers::stirling_subset(n, k));
    }
    SECTION("cap") { CHECK_THROWS_AS(bell(13), cap_error); }
}

TEST_CASE("symmetric sums of {1..n}") {
    CHECK(complete_hom(3, 3) == 90);
    CHECK(elem_sym(4, 3) == 50);
    for (int n = 0; n <= 8; ++n) CHECK(elem_sym(n, 0) == 1);
    for (int n = 0; n <= 8; ++n) CHECK(complete_hom(n, 0) == 1);
    CHECK(elem_sym(4, 5) == 0);
    CHECK(complete_hom(0, 2) == 0);

    SECTION("shifted Stirling numbers") {
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 5; ++k) {
                CHECK(elem_sym(n, k) == numbers::stirling_cycle(n + 1, n + 1 - k));
                CHECK(complete_hom(n, k) == numbers::stirling_subset(n + k, n));
            }
    }
}

TEST_CASE("order-preserving map counts") {
    SECTION("antichain") {
        Poset p = make_poset(3, {});
        for (int n = 0; n <= 5; ++n) {
            CHECK(omega(p, n) == ipow(Int(n), 3));
            CHECK(omega_bar(p, n) == ipow(Int(n), 3));
        }
    }
    SECTION("chain") {
        Poset p = make_poset(3, {{1, 2}, {2, 3}});
        for (int n = 0; n <= 6; ++n) {
            CHECK(omega(p, n) == numbers::binomial(n + 2, 3));
            CHECK(omega_bar(p, n) == numbers::binomial(n, 3));
        }
    }
    SECTION("no maps into the empty chain") {
        Poset p = make_poset(2, {{1, 2}});
        CHECK(omega(p, 0) == 0);
        CHECK(omega_bar(p, 0) == 0);
    }
    SECTION("budget") {
        Poset p = make_poset(8, {});
        CHECK_THROWS_AS(omega(p, 9), cap_error);
    }
    SECTION("cyclic relations are rejected") {
        CHECK_THROWS_AS(make_poset(3, {{1, 2}, {2, 3}, {3, 1}}), domain_error);
    }
}

TEST_CASE("fence posets") {
    SECTION("smallest fence") {
        Poset p = fence_poset(1);
        CHECK(p.size == 2);
        REQUIRE(p.covers.size() == 1);
        CHECK(p.covers[0] == std::pair<int, int>(2, 1));
    }
    SECTION("map counts meet the tandem table") {
        CHECK(omega(fence_poset(2), 3) == numbers::stirling_subset(3 + 2, 3));
        CHECK(omega(fence_poset(2), 3) == 25);
        CHECK(omega_bar(fence_poset(2), 4) == numbers::stirling_cycle(4, 2));
        CHECK(omega_bar(fence_poset(2), 4) == 11);
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                CHECK(omega(fence_poset(k), n) == numbers::stirling_subset(n + k, n));
                CHECK(omega_bar(fence_poset(k), n) == numbers::stirling_cycle(n, n - k));
            }
    }
    SECTION("chain-of-inequalities characterizations") {
        // omega: nondecreasing tuples 1 <= x_1 <= ... <= x_k <= n, product of x_i;
        // omega_bar: increasing tuples bounded by n-1.
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= 6; ++n) {
                Int weak = 0, strict = 0;
                std::vector<int> xs(k, 1);
                auto rec = [&](auto&& self, int i, int lo, bool strict_mode, int hi, Int prod) -> void {
                    if (i == k) {
                        (strict_mode ? strict : weak) += prod;
                        return;
                    }
                    for (int v = lo; v <= hi; ++v) self(self, i + 1, strict_mode ? v + 1 : v, strict_mode, hi, prod * v);
                };
                if (n >= 1) rec(rec, 0, 1, false, n, Int(1));
                if (n >= 1) rec(rec, 0, 1, true, n - 1, Int(1));
                CHECK(weak == omega(fence_poset(k), n));
                CHECK(strict == omega_bar(fence_poset(k), n));
            }
    }
}

TEST_CASE("order polynomials") {
    SECTION("antichain of three points") {
        Poly p = order_poly(make_poset(3, {}), false);
        CHECK(p == Poly::monomial(Rat(1), 3));
    }
    SECTION("strict chain of two points") {
        Poly p = order_poly(make_poset(2, {{1, 2}}), true);
        CHECK(p == Poly{Rat(0), Rat(-1, 2), Rat(1, 2)});  // n(n-1)/2
    }
    SECTION("reciprocity on fences and random posets") {
        auto reciprocal = [](const Poset& p) {
            Poly weak = order_poly(p, false);
            Poly strict = order_poly(p, true);
            Poly lhs = weak.reflect_arg();  // omega(P, -n)
            Poly rhs = p.size % 2 == 0 ? strict : -strict;
            return lhs == rhs;
        };
        for (int k = 1; k <= 3; ++k) CHECK(reciprocal(fence_poset(k)));
        SplitMix64 seeds(42);
        for (int trial = 0; trial < 20; ++trial) {
            const int p = 1 + static_cast<int>(seeds.below(6));
            CHECK(reciprocal(random_poset(seeds.next(), p)));
        }
    }
    SECTION("size cap") { CHECK_THROWS_AS(order_poly(make_poset(8, {}), false), cap_error); }
}

TEST_CASE("poset parsing") {
    Poset p = parse_poset("4\n1 < 2\n1 < 3\n2 < 4\n");
    CHECK(p.size == 4);
    CHECK(p.covers.size() == 3);
    CHECK(omega(p, 2) == detail::count_maps(p, 2, false));
    CHECK_THROWS_AS(parse_poset("3\n1 > 2\n"), domain_error);
    CHECK_THROWS_AS(parse_poset("2\n1 < 5\n"), domain_error);
}

TEST_CASE("random posets are reproducible") {
    Poset a = random_poset(7, 5);
    Poset b = random_poset(7, 5);
    CHECK(a.covers == b.covers);
}
