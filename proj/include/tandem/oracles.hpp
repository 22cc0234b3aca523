#pragma once

// Deliberately naive enumerative ground truth. Everything here counts objects
// one by one; nothing is shared with the formula-based modules, so agreement
// between the two is evidence, not tautology. Size caps are hard-coded and
// violations throw instead of truncating.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tandem/exact.hpp"
#include "tandem/polynomial.hpp"

namespace tandem::oracles {

inline constexpr int kMaxPermSize = 9;
inline constexpr int kMaxPartitionSize = 12;
inline constexpr long long kMapBudget = 300'000'000;

// Number of permutations of {1..n} with exactly k cycles, by enumerating all
// n! permutations and tracing their cycles.
inline Int count_perms_by_cycles(int n, int k) {
    if (n < 0 || n > kMaxPermSize) throw cap_error("count_perms_by_cycles: n out of range");
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? Int(1) : Int(0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int count = 0;
    std::vector<char> seen(n);
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++cycles;
            for (int j = s; !seen[j]; j = perm[j]) seen[j] = 1;
        }
        if (cycles == k) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace detail {

// Counts of set partitions of {1..n} by block count, via restricted growth
// strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); the block count of a
// string is max + 1.
inline std::vector<Int> partition_counts(int n) {
    if (n < 0 || n > kMaxPartitionSize) throw cap_error("set partitions: n out of range");
    std::vector<Int> counts(static_cast<std::size_t>(n) + 1, Int(0));
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    auto rec = [&](auto&& self, int i, int max_label) -> void {
        if (i == n) {
            ++counts[static_cast<std::size_t>(max_label) + 1];
            return;
        }
        for (int v = 0; v <= max_label + 1; ++v) self(self, i + 1, std::max(max_label, v));
    };
    rec(rec, 1, 0);
    return counts;
}

}  // namespace detail

inline Int count_set_partitions(int n, int k) {
    if (k < 0 || k > n) return n == 0 && k == 0 ? Int(1) : Int(0);
    return detail::partition_counts(n)[static_cast<std::size_t>(k)];
}

inline Int bell(int n) {
    auto counts = detail::partition_counts(n);
    Int total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

// Sum of products of k-combinations of {1,2,...,n}, without repetition.
inline Int elem_sym(int n, int k) {
    if (n < 0 || n > 9) throw cap_error("elem_sym: n out of range");
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (k > n) return 0;
    Int total = 0;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        Int prod = 1;
        for (int v : pick) prod *= v;
        total += prod;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

// Same, with repetitions permitted (nondecreasing k-tuples).
inline Int complete_hom(int n, int k) {
    if (n < 0 || n > 8 || k > 6) throw cap_error("complete_hom: arguments out of range");
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n == 0) return 0;
    Int total = 0;
    std::vector<int> pick(k, 1);
    while (true) {
        Int prod = 1;
        for (int v : pick) prod *= v;
        total += prod;
        int i = k - 1;
        while (i >= 0 && pick[i] == n) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[i];
    }
    return total;
}

// Finite poset on elements 1..size given by cover pairs a < b. The pairs only
// need to generate the order: counting routines work on the reachability
// closure.
struct Poset {
    int size = 0;
    std::vector<std::pair<int, int>> covers;
};

namespace detail {

inline std::vector<char> closure(const Poset& p) {
    const int n = p.size;
    std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : p.covers) reach[static_cast<std::size_t>(a - 1) * n + (b - 1)] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            if (reach[static_cast<std::size_t>(i) * n + m])
                for (int j = 0; j < n; ++j)
                    if (reach[static_cast<std::size_t>(m) * n + j])
                        reach[static_cast<std::size_t>(i) * n + j] = 1;
    return reach;
}

}  // namespace detail

inline Poset make_poset(int size, std::vector<std::pair<int, int>> covers) {
    if (size < 1) throw domain_error("poset: need at least one element");
    for (auto [a, b] : covers)
        if (a < 1 || a > size || b < 1 || b > size || a == b)
            throw domain_error("poset: cover pair out of range");
    Poset p{size, std::move(covers)};
    auto reach = detail::closure(p);
    for (int i = 0; i < size; ++i)
        if (reach[static_cast<std::size_t>(i) * size + i]) throw domain_error("poset: relation has a cycle");
    return p;
}

// Zigzag order on 2k points: a chain x_1 <= ... <= x_k with one extra point
// y_i below each x_i. Elements 1..k are the x chain, k+1..2k the y points.
inline Poset fence_poset(int k) {
    if (k < 1) throw domain_error("fence_poset: k must be positive");
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < k; ++i) covers.emplace_back(i, i + 1);
    for (int i = 1; i <= k; ++i) covers.emplace_back(k + i, i);
    return make_poset(2 * k, std::move(covers));
}

// Input format: first line the element count, then one "a < b" pair per line.
inline Poset parse_poset(std::istream& in) {
    int size = 0;
    if (!(in >> size)) throw domain_error("poset input: missing element count");
    std::vector<std::pair<int, int>> covers;
    int a = 0;
    char lt = 0;
    int b = 0;
    while (in >> a >> lt >> b) {
        if (lt != '<') throw domain_error("poset input: expected 'a < b'");
        covers.emplace_back(a, b);
    }
    return make_poset(size, std::move(covers));
}

inline Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

namespace detail {

inline Int count_maps(const Poset& p, int n, bool strict) {
    if (n < 0) throw domain_error("order-preserving maps: negative chain length");
    if (n == 0) return 0;
    double budget = 1.0;
    for (int i = 0; i < p.size; ++i) budget *= n;
    if (budget > static_cast<double>(kMapBudget)) throw cap_error("order-preserving maps: n^p over budget");
    std::vector<int> f(p.size, 1);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (auto [a, b] : p.covers) {
            const int fa = f[a - 1], fb = f[b - 1];
            if (strict ? fa >= fb : fa > fb) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int i = 0;
        while (i < p.size && f[i] == n) f[i++] = 1;
        if (i == p.size) break;
        ++f[i];
    }
    return count;
}

}  // namespace detail

// Order-preserving maps from the poset into the chain {1..n}.
inline Int omega(const Poset& p, int n) {
    if (p.size > 8 || n > 8) throw cap_error("omega: p <= 8 and n <= 8");
    return detail::count_maps(p, n, false);
}

// Strictly order-preserving maps.
inline Int omega_bar(const Poset& p, int n) {
    if (p.size > 8 || n > 8) throw cap_error("omega_bar: p <= 8 and n <= 8");
    return detail::count_maps(p, n, true);
}

// The unique polynomial of degree <= p through the map counts at n = 0..p,
// cross-checked at n = p+1..p+3 before being returned.
inline Poly order_poly(const Poset& p, bool strict) {
    if (p.size > 7) throw cap_error("order_poly: p <= 7");
    std::vector<std::pair<Rat, Rat>> pts;
    for (int n = 0; n <= p.size; ++n)
        pts.emplace_back(Rat(n), Rat(detail::count_maps(p, n, strict)));
    Poly poly = Poly::interpolate(pts);
    for (int n = p.size + 1; n <= p.size + 3; ++n)
        if (poly(Rat(n)) != Rat(detail::count_maps(p, n, strict)))
            throw error("order_poly: interpolation failed validation");
    return poly;
}

// Random labelled DAG on 1..p (edges only from smaller to larger label),
// then transitive reduction of its closure. Deterministic in the seed.
inline Poset random_poset(std::uint64_t seed, int p) {
    SplitMix64 rng(seed);
    Poset draft{p, {}};
    for (int a = 1; a <= p; ++a)
        for (int b = a + 1; b <= p; ++b)
            if (rng.below(2) == 0) draft.covers.emplace_back(a, b);
    auto reach = detail::closure(draft);
    auto related = [&](int a, int b) { return reach[static_cast<std::size_t>(a - 1) * p + (b - 1)] != 0; };
    std::vector<std::pair<int, int>> reduced;
    for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= p; ++b) {
            if (!related(a, b)) continue;
            bool direct = true;
            for (int c = 1; c <= p && direct; ++c)
                if (c != a && c != b && related(a, c) && related(c, b)) direct = false;
            if (direct) reduced.emplace_back(a, b);
        }
    return make_poset(p, std::move(reduced));
}

}  // namespace tandem::oracles
