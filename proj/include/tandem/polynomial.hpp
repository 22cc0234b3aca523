#pragma once

// Univariate polynomials with exact rational coefficients (ascending order).
// Invariant: the coefficient list is empty (zero polynomial) or ends with a
// nonzero coefficient.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tandem/exact.hpp"

namespace tandem {

class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Rat v) {
        Poly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static Poly variable() { return Poly{Rat(0), Rat(1)}; }
    static Poly monomial(Rat coeff, std::size_t deg) {
        Poly p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, Rat(0));
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    double operator()(double x) const {
        double r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Rat& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& c : c_) c *= s;
        }
        return *this;
    }
    Poly& operator/=(const Rat& s) {
        if (s == 0) throw pole_error("polynomial division by zero scalar");
        for (auto& c : c_) c /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    bool operator==(const Poly&) const = default;

    // p(inner(x)); Horner over the polynomial ring.
    Poly compose(const Poly& inner) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
        return r;
    }
    // p(x + a)
    Poly shift_arg(const Rat& a) const { return compose(Poly{a, Rat(1)}); }
    // p(-x)
    Poly reflect_arg() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    // Unique interpolating polynomial through distinct nodes (Newton form).
    static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
        const std::size_t n = pts.size();
        std::vector<Rat> dd(n);
        for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = n - 1; i >= j; --i) {
                const Rat dx = pts[i].first - pts[i - j].first;
                if (dx == 0) throw domain_error("interpolate: repeated node");
                dd[i] = (dd[i] - dd[i - 1]) / dx;
                if (i == j) break;
            }
        Poly acc;
        Poly basis = constant(Rat(1));
        for (std::size_t j = 0; j < n; ++j) {
            acc += basis * dd[j];
            basis = basis * Poly{-pts[j].first, Rat(1)};
        }
        return acc;
    }

    // Exact coefficient list, ascending: "c0, c1, ...". The zero polynomial
    // serializes as "0".
    std::string coeff_list() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += str(c_[i]);
        }
        return out;
    }

    std::string pretty(const std::string& var = "n") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            const bool neg = c_[i] < 0;
            Rat a = neg ? Rat(-c_[i]) : c_[i];
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = a == 1 && i > 0;
            if (!unit) out += str(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

}  // namespace tandem
