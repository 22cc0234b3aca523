#pragma once

// Binomial coefficients and Stirling cycle/subset numbers on the full integer
// plane. The nonnegative quadrant is filled by forward dynamic programming on
// the standard recurrences; the negative quadrant is reached through the
// duality {n over k} = [-k over -n], so both kinds live in one doubly
// infinite table. Mixed-sign arguments give 0 (except at the origin).

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tandem/exact.hpp"

namespace tandem::numbers {

inline Int factorial(std::int64_t n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace detail {

// Triangular DP table for 0 <= k <= n, grown on demand. Readers share a lock;
// growth happens under an exclusive lock and never mutates published rows, so
// concurrent lookups always observe identical values.
class TriangleTable {
  public:
    // weight(n) multiplies the "keep k" branch of the recurrence:
    // cycle numbers use n-1, subset numbers use k.
    enum class Kind { cycle, subset };

    explicit TriangleTable(Kind kind) : kind_(kind) { rows_.push_back({Int(1)}); }

    Int get(std::int64_t n, std::int64_t k) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            const std::size_t m = rows_.size();  // building row m from row m-1
            std::vector<Int> row(m + 1, Int(0));
            const auto& prev = rows_[m - 1];
            auto prev_at = [&](std::size_t j) { return j < prev.size() ? prev[j] : Int(0); };
            for (std::size_t j = 1; j <= m; ++j) {
                const Int w = kind_ == Kind::cycle ? Int(m - 1) : Int(j);
                row[j] = w * prev_at(j) + prev_at(j - 1);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

  private:
    Kind kind_;
    std::shared_mutex mutex_;
    std::vector<std::vector<Int>> rows_;
};

inline Int cycle_quadrant(std::int64_t n, std::int64_t k) {
    static TriangleTable table(TriangleTable::Kind::cycle);
    if (k > n) return 0;
    return table.get(n, k);
}

inline Int subset_quadrant(std::int64_t n, std::int64_t k) {
    static TriangleTable table(TriangleTable::Kind::subset);
    if (k > n) return 0;
    return table.get(n, k);
}

}  // namespace detail

// Defined for every pair of integers. For n, k >= 0 this counts permutations
// of n objects with k cycles; for n, k < 0 it equals the subset number
// {-k over -n}; mixed signs give 0 apart from the origin entry 1.
inline Int stirling_cycle(std::int64_t n, std::int64_t k) {
    if (n == 0 && k == 0) return 1;
    if (n > 0 && k > 0) return detail::cycle_quadrant(n, k);
    if (n < 0 && k < 0) return detail::subset_quadrant(-k, -n);
    return 0;
}

inline Int stirling_subset(std::int64_t n, std::int64_t k) { return stirling_cycle(-k, -n); }

// Binomial coefficient for all integers: zero for k < 0, the usual value in
// the upper quadrant, and the negative-upper-index extension
// binomial(n, k) = (-1)^k binomial(k-n-1, k) for n < 0, which keeps the
// addition formula valid on the whole plane.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n < 0) {
        Int v = binomial(k - n - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

enum class TableKind { cycle, subset, binomial };

inline const char* to_string(TableKind k) {
    switch (k) {
        case TableKind::cycle: return "cycle";
        case TableKind::subset: return "subset";
        default: return "binomial";
    }
}

// A rectangular window of one of the three tables; entries are stored
// row-major with n ascending and k ascending.
struct TableWindow {
    TableKind kind = TableKind::cycle;
    std::int64_t n_min = 0, n_max = 0, k_min = 0, k_max = 0;
    std::vector<Int> entries;

    std::int64_t rows() const { return n_max - n_min + 1; }
    std::int64_t cols() const { return k_max - k_min + 1; }
    const Int& at(std::int64_t n, std::int64_t k) const {
        return entries[static_cast<std::size_t>((n - n_min) * cols() + (k - k_min))];
    }
};

inline constexpr long long kDefaultTableCap = 1'000'000;

inline TableWindow table_window(TableKind kind, std::int64_t n_min, std::int64_t n_max,
                                std::int64_t k_min, std::int64_t k_max) {
    if (n_min > n_max || k_min > k_max) throw domain_error("table_window: empty range");
    const long long cap = env_cap("TANDEM_TABLE_CAP", kDefaultTableCap);
    const long long total = static_cast<long long>(n_max - n_min + 1) * (k_max - k_min + 1);
    if (total > cap)
        throw cap_error("table_window: " + std::to_string(total) + " entries exceeds cap " +
                        std::to_string(cap));
    TableWindow w{kind, n_min, n_max, k_min, k_max, {}};
    w.entries.reserve(static_cast<std::size_t>(total));
    for (std::int64_t n = n_min; n <= n_max; ++n)
        for (std::int64_t k = k_min; k <= k_max; ++k) {
            switch (kind) {
                case TableKind::cycle: w.entries.push_back(stirling_cycle(n, k)); break;
                case TableKind::subset: w.entries.push_back(stirling_subset(n, k)); break;
                case TableKind::binomial: w.entries.push_back(binomial(n, k)); break;
            }
        }
    return w;
}

// Header row carries the k values, header column the n values; rows are n
// ascending, columns k ascending. This layout is load-bearing for the golden
// CLI output and must not change.
inline std::string to_tsv(const TableWindow& w) {
    std::string out = "n\\k";
    for (std::int64_t k = w.k_min; k <= w.k_max; ++k) out += "\t" + std::to_string(k);
    out += "\n";
    for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
        out += std::to_string(n);
        for (std::int64_t k = w.k_min; k <= w.k_max; ++k) out += "\t" + w.at(n, k).str();
        out += "\n";
    }
    return out;
}

// Entries as decimal strings to keep exactness through any JSON consumer.
inline std::string to_json(const TableWindow& w) {
    std::string out = "{\"kind\":\"";
    out += to_string(w.kind);
    out += "\",\"n_range\":[" + std::to_string(w.n_min) + "," + std::to_string(w.n_max) + "]";
    out += ",\"k_range\":[" + std::to_string(w.k_min) + "," + std::to_string(w.k_max) + "]";
    out += ",\"entries\":[";
    for (std::int64_t n = w.n_min; n <= w.n_max; ++n) {
        if (n != w.n_min) out += ",";
        out += "[";
        for (std::int64_t k = w.k_min; k <= w.k_max; ++k) {
            if (k != w.k_min) out += ",";
            out += "\"" + w.at(n, k).str() + "\"";
        }
        out += "]";
    }
    out += "]}";
    return out;
}

}  // namespace tandem::numbers
