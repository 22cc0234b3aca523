#pragma once

// Stirling numbers as polynomials in the upper index. cycle_poly(k) is the
// degree-2k polynomial agreeing with the cycle number [n over n-k] at every
// integer n; subset_poly(k) agrees with {n+k over n}. Both are built by exact
// interpolation on integer nodes of the full-plane tables and then validated
// on fresh nodes, including negative ones, so a transcription slip in either
// route cannot survive construction.
//
// The partition-sum polynomials kramp_elementary / kramp_complete are an
// independent second route to the same objects (sums of products of
// combinations without / with repetition); agreement is asserted in tests,
// never assumed.

#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "tandem/exact.hpp"
#include "tandem/numbers.hpp"
#include "tandem/polynomial.hpp"

namespace tandem::stirling_poly {

namespace detail {

template <class Value>
Poly interpolated_table_poly(int k, Value&& value_at) {
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(2 * k + 1);
    for (int n = 0; n <= 2 * k; ++n) pts.emplace_back(Rat(n), Rat(value_at(n)));
    Poly p = Poly::interpolate(pts);
    // Fresh nodes on both sides of the ones used above; the negative side
    // exercises the duality quadrant of the table.
    for (int n = -k; n <= -1; ++n)
        if (p(Rat(n)) != Rat(value_at(n))) throw error("stirling polynomial failed validation");
    for (int n = 2 * k + 1; n <= 3 * k; ++n)
        if (p(Rat(n)) != Rat(value_at(n))) throw error("stirling polynomial failed validation");
    return p;
}

class PolyCache {
  public:
    Poly get(int k, Poly (*build)(int)) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(k) < cache_.size() && cache_[k]) return *cache_[k];
        }
        Poly fresh = build(k);
        std::unique_lock lock(mutex_);
        if (static_cast<std::size_t>(k) >= cache_.size()) cache_.resize(k + 1);
        if (!cache_[k]) cache_[k] = std::move(fresh);
        return *cache_[k];
    }

  private:
    std::shared_mutex mutex_;
    std::vector<std::optional<Poly>> cache_;
};

inline Poly build_cycle_poly(int k) {
    return interpolated_table_poly(
        k, [k](std::int64_t n) { return numbers::stirling_cycle(n, n - k); });
}

inline Poly build_subset_poly(int k) {
    return interpolated_table_poly(
        k, [k](std::int64_t n) { return numbers::stirling_subset(n + k, n); });
}

}  // namespace detail

// p(n) = [n over n-k], degree 2k.
inline Poly cycle_poly(int k) {
    if (k < 0) throw domain_error("cycle_poly: k must be nonnegative");
    static detail::PolyCache cache;
    return cache.get(k, detail::build_cycle_poly);
}

// p(n) = {n+k over n}, degree 2k.
inline Poly subset_poly(int k) {
    if (k < 0) throw domain_error("subset_poly: k must be nonnegative");
    static detail::PolyCache cache;
    return cache.get(k, detail::build_subset_poly);
}

// p(a) = {a over a-k}, the coefficient polynomial of the generalized power
// identities; equal to subset_poly(k) shifted by -k.
inline Poly subset_upper_poly(int k) { return subset_poly(k).shift_arg(Rat(-k)); }

// Multiplicities (j1, j2, ...) with j1 + 2*j2 + 3*j3 + ... = k.
struct PartitionVector {
    std::vector<int> mult;  // mult[i] = j_{i+1}, count of parts of size i+1

    int weight() const {
        int w = 0;
        for (std::size_t i = 0; i < mult.size(); ++i) w += static_cast<int>(i + 1) * mult[i];
        return w;
    }
    int part_count() const {
        int l = 0;
        for (int j : mult) l += j;
        return l;
    }
    bool operator==(const PartitionVector&) const = default;
};

inline constexpr long long kDefaultPartitionCap = 64;

// All partitions of k, ordered by their nondecreasing part lists
// (all-ones first, the single part k last).
inline std::vector<PartitionVector> enumerate_partitions(int k) {
    if (k < 0) throw domain_error("enumerate_partitions: k must be nonnegative");
    if (k > env_cap("TANDEM_PARTITION_CAP", kDefaultPartitionCap))
        throw cap_error("enumerate_partitions: k exceeds TANDEM_PARTITION_CAP");
    std::vector<PartitionVector> out;
    std::vector<int> mult(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.push_back(PartitionVector{std::vector<int>(mult.begin(), mult.begin() + k)});
            return;
        }
        for (int part = min_part; part <= remaining; ++part) {
            ++mult[part - 1];
            self(self, remaining - part, part);
            --mult[part - 1];
        }
    };
    if (k == 0) {
        out.push_back(PartitionVector{{}});
        return out;
    }
    rec(rec, k, 1);
    return out;
}

namespace detail {

// (x + shift)(x + shift - 1)...(x + shift - m + 1) / m!
inline Poly binomial_poly(const Rat& shift, int m) {
    Poly p = Poly::constant(Rat(1));
    for (int i = 0; i < m; ++i) p = p * Poly{shift - i, Rat(1)};
    p /= Rat(numbers::factorial(m));
    return p;
}

}  // namespace detail

// Partition-sum formula for the sums of products of combinations of {1..n}
// taken k at a time, without repetition. Equals stirling_cycle(n+1, n+1-k)
// as a polynomial in n.
inline Poly kramp_elementary(int k) {
    if (k < 0) throw domain_error("kramp_elementary: k must be nonnegative");
    Poly total;
    for (const auto& part : enumerate_partitions(k)) {
        const int l = part.part_count();
        Int denom = 1;
        for (std::size_t i = 0; i < part.mult.size(); ++i) {
            denom *= numbers::factorial(part.mult[i]);
            denom *= ipow(Int(i + 2), static_cast<std::uint64_t>(part.mult[i]));
        }
        const Rat scale(numbers::factorial(k + l), denom);
        total += detail::binomial_poly(Rat(1), k + l) * scale;
    }
    return total;
}

// Same with repetitions permitted. Equals stirling_subset(n+k, n).
inline Poly kramp_complete(int k) {
    if (k < 0) throw domain_error("kramp_complete: k must be nonnegative");
    Poly total;
    for (const auto& part : enumerate_partitions(k)) {
        const int l = part.part_count();
        Int denom = 1;
        for (std::size_t i = 0; i < part.mult.size(); ++i) {
            denom *= numbers::factorial(part.mult[i]);
            denom *= ipow(numbers::factorial(static_cast<std::int64_t>(i) + 2),
                          static_cast<std::uint64_t>(part.mult[i]));
        }
        const Rat scale(numbers::factorial(k + l), denom);
        total += detail::binomial_poly(Rat(k), k + l) * scale;
    }
    return total;
}

// m * cycle_poly(m) = sum_{k=0}^{m-1} binomial(n-k, m+1-k) * cycle_poly(k),
// as an exact identity between polynomials in n.
inline bool kramp_recurrence_check(int m) {
    if (m < 1) throw domain_error("kramp_recurrence_check: m must be positive");
    Poly lhs = cycle_poly(m) * Rat(m);
    Poly rhs;
    for (int k = 0; k < m; ++k)
        rhs += detail::binomial_poly(Rat(-k), m + 1 - k) * cycle_poly(k);
    return lhs == rhs;
}

// kramp_elementary(k) at n-1 coincides with kramp_complete(k) at -n: the
// polynomial form of the cycle/subset duality.
inline bool duality_poly_check(int k) {
    if (k < 0) throw domain_error("duality_poly_check: k must be nonnegative");
    const Poly lhs = kramp_elementary(k).shift_arg(Rat(-1));
    const Poly rhs = kramp_complete(k).reflect_arg();
    return lhs == rhs;
}

// Indices k <= k_max where |cycle_poly(k)(1/2)| > k!/7^k, decided by exact
// rational comparison. Nonempty lists witness the divergence of the
// half-integer expansion.
inline std::vector<int> half_integer_growth(int k_max) {
    if (k_max < 0 || k_max > 40) throw domain_error("half_integer_growth: need 0 <= k_max <= 40");
    std::vector<int> witnesses;
    for (int k = 0; k <= k_max; ++k) {
        Rat v = cycle_poly(k)(Rat(1, 2));
        if (v < 0) v = -v;
        const Rat threshold(numbers::factorial(k), ipow(Int(7), static_cast<std::uint64_t>(k)));
        if (v > threshold) witnesses.push_back(k);
    }
    return witnesses;
}

}  // namespace tandem::stirling_poly
