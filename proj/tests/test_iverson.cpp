#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "tandem/iverson.hpp"
#include "tandem/numbers.hpp"

using namespace tandem;
using namespace tandem::iverson;

namespace {

NumExpr kvar() { return NumExpr::var("k"); }
NumExpr cst(std::int64_t v) { return NumExpr::constant(Rat(v)); }

// Independent primality oracle: a sieve, as opposed to the trial division
// used inside the library.
std::vector<bool> sieve(int limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = prime[1] = false;
    for (int i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (int j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

}  // namespace

TEST_CASE("bracket evaluation") {
    CHECK(bracket(Pred::cmp(CmpOp::eq, cst(3), cst(3))) == 1);
    CHECK(bracket(Pred::cmp(CmpOp::gt, NumExpr::var("x"), cst(0)), {{"x", Rat(-2)}}) == 0);
    CHECK(bracket(Pred::prime(NumExpr::var("p")), {{"p", Rat(7)}}) == 1);

    SECTION("primality matches a sieve") {
        auto table = sieve(200);
        for (int n = 0; n <= 200; ++n)
            CHECK(bracket(Pred::prime(cst(n))) == (table[n] ? 1 : 0));
    }
    SECTION("unbound variables are an error") {
        CHECK_THROWS_AS(bracket(Pred::cmp(CmpOp::lt, kvar(), cst(0)), {}), unbound_variable);
    }
    SECTION("rational comparisons work, rational parity does not") {
        CHECK(bracket(Pred::cmp(CmpOp::lt, cst(0), NumExpr::constant(Rat(1, 2)))) == 1);
        CHECK_THROWS_AS(bracket(Pred::even(NumExpr::constant(Rat(1, 2)))), domain_error);
    }
    SECTION("divisibility") {
        CHECK(bracket(Pred::divides(cst(3), cst(12))) == 1);
        CHECK(bracket(Pred::divides(cst(5), cst(12))) == 0);
        CHECK(bracket(Pred::divides(cst(7), cst(0))) == 1);
        CHECK(bracket(Pred::divides(cst(0), cst(0))) == 1);
        CHECK(bracket(Pred::divides(cst(0), cst(4))) == 0);
        CHECK(bracket(Pred::divides(cst(-3), cst(12))) == 1);
    }
}

TEST_CASE("bracket algebra invariants") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t k = rng.range(-30, 30);
        const Assignment asg{{"k", Rat(k)}};
        const Pred p = Pred::cmp(CmpOp::ge, kvar(), cst(rng.range(-5, 5)));
        const Pred q = Pred::divides(cst(rng.range(1, 6)), kvar());
        CHECK(bracket(p, asg) + bracket(!p, asg) == 1);
        CHECK(bracket(p && q, asg) == bracket(p, asg) * bracket(q, asg));
        CHECK(bracket(p || q, asg) == bracket(p, asg) + bracket(q, asg) - bracket(p && q, asg));
    }
}

TEST_CASE("strong zero never evaluates the term") {
    int evaluations = 0;
    auto poison = [&](const Assignment&) -> Rat {
        ++evaluations;
        return Rat(1) / Rat(0);  // would throw if ever reached
    };
    const Rat v = guarded_term(Pred::lit(false), poison);
    CHECK(v == 0);
    CHECK(evaluations == 0);

    SECTION("a true guard evaluates normally") {
        int calls = 0;
        auto term = [&](const Assignment&) {
            ++calls;
            return Rat(5);
        };
        CHECK(guarded_term(Pred::lit(true), term) == 5);
        CHECK(calls == 1);
    }
    SECTION("guard [k >= 0] with k = 3 squares the index") {
        auto term = [](const Assignment& a) { return a.at("k") * a.at("k"); };
        CHECK(guarded_term(Pred::cmp(CmpOp::ge, kvar(), cst(0)), term, {{"k", Rat(3)}}) == 9);
    }
    SECTION("an evaluated zero in a denominator still throws") {
        auto term = [](const Assignment& a) { return Rat(1) / a.at("k"); };
        CHECK_THROWS_AS(guarded_term(Pred::cmp(CmpOp::ge, kvar(), cst(0)), term, {{"k", Rat(0)}}),
                        std::exception);
    }
}

TEST_CASE("summation engine") {
    SECTION("floor-lg binomial sum") {
        const Rat v = sum_brackets(SumSpec{
            "k", Pred::cmp(CmpOp::ge, kvar(), cst(1)),
            [](const Assignment& a) {
                const Int k = to_int(a.at("k"));
                return Rat(numbers::binomial(3, static_cast<std::int64_t>(boost::multiprecision::msb(k))));
            },
            std::pair{Int(1), Int(15)}});
        CHECK(v == 27);
    }
    SECTION("empty support") {
        const Rat v = sum_brackets(SumSpec{"k", Pred::lit(true),
                                           [](const Assignment&) { return Rat(1); },
                                           std::pair{Int(3), Int(2)}});
        CHECK(v == 0);
    }
    SECTION("prime reciprocals below 10") {
        const Rat v = sum_brackets(SumSpec{
            "p",
            Pred::prime(NumExpr::var("p")) && Pred::cmp(CmpOp::le, NumExpr::var("p"), cst(10)),
            [](const Assignment& a) { return Rat(1) / a.at("p"); }, std::pair{Int(0), Int(10)}});
        CHECK(v == Rat(247, 210));
    }
    SECTION("support derived from conjunctive bounds") {
        const Rat v = sum_brackets(SumSpec{
            "k",
            Pred::cmp(CmpOp::le, cst(1), kvar()) && Pred::cmp(CmpOp::le, kvar(), cst(4)),
            [](const Assignment& a) { return a.at("k"); }, std::nullopt});
        CHECK(v == 10);
    }
    SECTION("support derived through strict and reversed comparisons") {
        const Rat v = sum_brackets(SumSpec{
            "k",
            Pred::cmp(CmpOp::lt, cst(0), kvar()) && Pred::cmp(CmpOp::gt, cst(5), kvar()),
            [](const Assignment& a) { return a.at("k"); }, std::nullopt});
        CHECK(v == 10);
    }
    SECTION("equality guards pin the support") {
        const Rat v = sum_brackets(SumSpec{
            "m",
            Pred::cmp(CmpOp::eq, NumExpr::constant(Rat(2)) * NumExpr::var("m"), cst(6)),
            [](const Assignment& a) { return a.at("m"); }, std::nullopt});
        CHECK(v == 3);
        const Rat none = sum_brackets(SumSpec{
            "m",
            Pred::cmp(CmpOp::eq, NumExpr::constant(Rat(2)) * NumExpr::var("m"), cst(7)),
            [](const Assignment& a) { return a.at("m"); }, std::nullopt});
        CHECK(none == 0);
    }
    SECTION("membership guards bound the support") {
        const Rat v = sum_brackets(SumSpec{"k", Pred::in_set(kvar(), {Int(2), Int(5), Int(9)}),
                                           [](const Assignment& a) { return a.at("k"); },
                                           std::nullopt});
        CHECK(v == 16);
    }
    SECTION("underivable support is an explicit error") {
        CHECK_THROWS_AS(sum_brackets(SumSpec{"k", Pred::divides(cst(3), kvar()),
                                             [](const Assignment&) { return Rat(1); },
                                             std::nullopt}),
                        support_error);
    }
    SECTION("declared support is probed at the boundary") {
        // guard true just outside the declared interval with a nonzero term
        CHECK_THROWS_AS(sum_brackets(SumSpec{"k",
                                             Pred::cmp(CmpOp::ge, kvar(), cst(0)),
                                             [](const Assignment&) { return Rat(1); },
                                             std::pair{Int(0), Int(4)}}),
                        support_error);
        // ... but a term that vanishes outside passes the probe
        const Rat ok = sum_brackets(SumSpec{"k", Pred::cmp(CmpOp::ge, kvar(), cst(0)),
                                            [](const Assignment& a) {
                                                const Rat k = a.at("k");
                                                return k <= 4 ? k : Rat(0);
                                            },
                                            std::pair{Int(0), Int(4)}});
        CHECK(ok == 10);
    }
    SECTION("iteration cap") {
        CHECK_THROWS_AS(sum_brackets(SumSpec{"k", Pred::lit(true),
                                             [](const Assignment&) { return Rat(0); },
                                             std::pair{Int(0), Int(100'000'000)}}),
                        cap_error);
    }
}

TEST_CASE("bracket products") {
    SECTION("largest squarefree divisor") {
        auto squarefree_kernel = [](std::int64_t n) {
            return prod_brackets(SumSpec{
                "p",
                Pred::prime(NumExpr::var("p")) &&
                    Pred::divides(NumExpr::var("p"), cst(n)),
                [](const Assignment& a) { return a.at("p"); }, std::pair{Int(1), Int(n)}});
        };
        CHECK(squarefree_kernel(12) == 6);
        CHECK(squarefree_kernel(1) == 1);
        CHECK(squarefree_kernel(30) == 30);
        // cross-check against direct factorization for a range
        for (std::int64_t n = 1; n <= 60; ++n) {
            Int expect = 1;
            for (std::int64_t q = 2; q <= n; ++q)
                if (n % q == 0 && is_prime(Int(q))) expect *= q;
            CHECK(squarefree_kernel(n) == Rat(expect));
        }
    }
    SECTION("boundary probe checks for the neutral element") {
        CHECK_THROWS_AS(prod_brackets(SumSpec{"k", Pred::cmp(CmpOp::ge, kvar(), cst(0)),
                                              [](const Assignment& a) { return a.at("k") + 1; },
                                              std::pair{Int(0), Int(3)}}),
                        support_error);
    }
}

TEST_CASE("identity catalog") {
    SECTION("named examples") {
        IdentityParams p;
        p.n = 3;
        p.seed = 9;
        CHECK(verify_identity("1.9", p).holds);

        IdentityParams q11;
        q11.n = 4;
        CHECK(verify_identity("1.11", q11).holds);

        IdentityParams q18;
        q18.n = 5;
        q18.x = Rat(0);
        q18.y = Rat(1);
        auto r18 = verify_identity("1.18", q18);
        CHECK(r18.holds);
        CHECK(r18.lhs == 1);
        CHECK(r18.rhs == 1);

        // the set-sum instance from the catalog docs: A={1,2,3}, B={2,3,5}, f=k^2
        const std::vector<Int> a{Int(1), Int(2), Int(3)}, b{Int(2), Int(3), Int(5)};
        auto term = [](const Assignment& asg) { return asg.at("k") * asg.at("k"); };
        const Rat lhs = sum_brackets(SumSpec{"k", Pred::in_set(kvar(), a), term, std::nullopt}) +
                        sum_brackets(SumSpec{"k", Pred::in_set(kvar(), b), term, std::nullopt});
        CHECK(lhs == 52);
    }
    SECTION("every catalogued identity holds across seeds and sizes") {
        for (const auto& id : identity_catalog()) {
            for (std::uint64_t seed = 1; seed <= 25; ++seed) {
                IdentityParams p;
                p.seed = seed;
                p.n = static_cast<std::int64_t>(seed % 7);
                p.k = static_cast<std::int64_t>(seed * 3 % 23) - 11;
                p.z = Rat(static_cast<std::int64_t>(seed % 5) - 2, 3);
                p.x = Rat(static_cast<std::int64_t>(seed % 4), 2);
                p.y = Rat(1 + static_cast<std::int64_t>(seed % 3));
                if (id == "1.19") p.n = static_cast<std::int64_t>(seed);
                auto r = verify_identity(id, p);
                INFO(id << " seed=" << seed << " detail=" << r.detail);
                CHECK(r.holds);
            }
        }
    }
    SECTION("1.2 at z = 0 exercises the strong zero of the binomial") {
        IdentityParams p;
        p.n = 4;
        p.z = Rat(0);
        auto r = verify_identity("1.2", p);
        CHECK(r.holds);
        CHECK(r.lhs == 1);
    }
    SECTION("unknown ids are rejected") {
        CHECK_THROWS_AS(verify_identity("9.99", {}), domain_error);
    }
}

TEST_CASE("libri construction") {
    CHECK(libri_P(0, 5) == 1);
    CHECK(libri_P(3, 3) == 1);
    CHECK(libri_P(4, 3) == -1);

    SECTION("closed form on the grid") {
        for (int x = 1; x <= 12; ++x)
            for (int k = 1; k <= 40; ++k) {
                const Int expect = Int((k % x == 0) ? 1 : 0) - Int(((k - 1) % x == 0) ? 1 : 0);
                CHECK(libri_P(k, x) == expect);
            }
    }
    SECTION("divisor quotient") {
        CHECK(libri_divisor(6, 3) == 1);
        CHECK(libri_divisor(7, 3) == 0);
        for (int m = 1; m <= 12; ++m) CHECK(libri_divisor(m, 1) == 1);
        for (int x = 1; x <= 20; ++x)
            for (int m = 1; m <= 40; ++m) CHECK(libri_divisor(m, x) == (m % x == 0 ? 1 : 0));
    }
    SECTION("domain checks") {
        CHECK_THROWS_AS(libri_P(-1, 3), domain_error);
        CHECK_THROWS_AS(libri_P(2, 0), domain_error);
        CHECK_THROWS_AS(libri_divisor(0, 3), domain_error);
    }
}

TEST_CASE("power sums modulo a prime") {
    CHECK(power_sum_mod(5, 4) == 4);
    CHECK(power_sum_mod(5, 3) == 0);
    CHECK(power_sum_mod(2, 1) == 1);

    SECTION("congruence across the grid") {
        for (int p = 2; p <= 50; ++p) {
            if (!is_prime(Int(p))) continue;
            for (int k = 1; k <= 20; ++k) {
                const Int expect = (k % (p - 1) == 0) ? Int(p - 1) % p : Int(0);
                CHECK(power_sum_mod(p, k) == expect);
            }
        }
    }
    SECTION("composite moduli are rejected") {
        CHECK_THROWS_AS(power_sum_mod(9, 2), domain_error);
        CHECK_THROWS_AS(power_sum_mod(5, 0), domain_error);
    }
}
