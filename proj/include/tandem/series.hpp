#pragma once

// Formal power series truncated at a fixed order K, over any commutative
// Q-algebra coefficient type (exact rationals, polynomials in a parameter,
// or plain doubles for the numeric paths). Arithmetic is exact up to order K
// whenever the coefficient type is exact.

#include <vector>

#include "tandem/exact.hpp"
#include "tandem/polynomial.hpp"

namespace tandem {

namespace series_detail {

template <class C>
struct CoeffOps {
    static C from_rat(const Rat& q) { return C(q); }
    static bool is_zero(const C& c) { return c == C(Rat(0)); }
};

template <>
struct CoeffOps<Rat> {
    static Rat from_rat(const Rat& q) { return q; }
    static bool is_zero(const Rat& c) { return c == 0; }
};

template <>
struct CoeffOps<Poly> {
    static Poly from_rat(const Rat& q) { return Poly::constant(q); }
    static bool is_zero(const Poly& c) { return c.is_zero(); }
};

template <>
struct CoeffOps<double> {
    static double from_rat(const Rat& q) { return to_double(q); }
    static bool is_zero(double c) { return c == 0.0; }
};

}  // namespace series_detail

template <class C>
class Series {
  public:
    explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1, zero()) {
        if (order < 0) throw domain_error("series order must be nonnegative");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set(int i, C v) { c_[static_cast<std::size_t>(i)] = std::move(v); }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (series_detail::CoeffOps<C>::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }

    Series scaled(const Rat& s) const {
        Series r = *this;
        const C f = series_detail::CoeffOps<C>::from_rat(s);
        for (auto& c : r.c_) c = c * f;
        return r;
    }

    // log of a series with constant term 1, by the derivative recurrence
    // k*f_k = k*g_k + sum_{j=1}^{k-1} j*g_j*f_{k-j} solved for g = log f.
    Series log() const {
        if (!series_detail::CoeffOps<C>::is_zero(c_[0] - one()))
            throw domain_error("series log: constant term must be 1");
        Series g(order());
        for (int k = 1; k <= order(); ++k) {
            C s = c_[k] * series_detail::CoeffOps<C>::from_rat(Rat(k));
            for (int j = 1; j < k; ++j)
                s = s - g.c_[j] * c_[k - j] * series_detail::CoeffOps<C>::from_rat(Rat(j));
            g.c_[k] = s * series_detail::CoeffOps<C>::from_rat(Rat(1, k));
        }
        return g;
    }

    // exp of a series with constant term 0:
    // k*f_k = sum_{j=1}^{k} j*g_j*f_{k-j} with f_0 = 1.
    Series exp() const {
        if (!series_detail::CoeffOps<C>::is_zero(c_[0]))
            throw domain_error("series exp: constant term must be 0");
        Series f(order());
        f.c_[0] = one();
        for (int k = 1; k <= order(); ++k) {
            C s = zero();
            for (int j = 1; j <= k; ++j)
                s = s + c_[j] * f.c_[k - j] * series_detail::CoeffOps<C>::from_rat(Rat(j));
            f.c_[k] = s * series_detail::CoeffOps<C>::from_rat(Rat(1, k));
        }
        return f;
    }

  private:
    static C zero() { return series_detail::CoeffOps<C>::from_rat(Rat(0)); }
    static C one() { return series_detail::CoeffOps<C>::from_rat(Rat(1)); }
    void check_order(const Series& o) const {
        if (o.order() != order()) throw domain_error("series order mismatch");
    }

    std::vector<C> c_;
};

}  // namespace tandem
