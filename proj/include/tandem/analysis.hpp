#pragma once

// Factorial powers with integer and real exponents, conversions between the
// power / falling / rising bases, the exact reciprocal expansions, the
// generalized power identity, the generating series for its coefficients, and
// asymptotic gamma-ratio expansions.
//
// Floating point appears only where the claim itself is analytic
// (convergence, asymptotic order); everything statable over the rationals is
// computed exactly.

#include <cmath>
#include <cstdint>
#include <vector>

#include "tandem/exact.hpp"
#include "tandem/numbers.hpp"
#include "tandem/polynomial.hpp"
#include "tandem/series.hpp"
#include "tandem/stirling_poly.hpp"

namespace tandem::analysis {

enum class Kind { rising, falling };

// z(z-1)...(z-n+1) for n >= 0; 1/((z+1)(z+2)...(z+|n|)) for n < 0.
inline Rat falling(const Rat& z, std::int64_t n) {
    Rat r = 1;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) r *= z - i;
        return r;
    }
    for (std::int64_t i = 1; i <= -n; ++i) {
        const Rat f = z + i;
        if (f == 0) throw pole_error("falling power: zero factor at z + " + std::to_string(i));
        r *= f;
    }
    return 1 / r;
}

// z(z+1)...(z+n-1) for n >= 0; 1/((z-1)(z-2)...(z-|n|)) for n < 0.
inline Rat rising(const Rat& z, std::int64_t n) {
    Rat r = 1;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) r *= z + i;
        return r;
    }
    for (std::int64_t i = 1; i <= -n; ++i) {
        const Rat f = z - i;
        if (f == 0) throw pole_error("rising power: zero factor at z - " + std::to_string(i));
        r *= f;
    }
    return 1 / r;
}

inline double falling(double z, std::int64_t n) {
    double r = 1.0;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) r *= z - static_cast<double>(i);
        return r;
    }
    for (std::int64_t i = 1; i <= -n; ++i) {
        const double f = z + static_cast<double>(i);
        if (f == 0.0) throw pole_error("falling power: zero factor");
        r *= f;
    }
    return 1.0 / r;
}

inline double rising(double z, std::int64_t n) {
    double r = 1.0;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) r *= z + static_cast<double>(i);
        return r;
    }
    for (std::int64_t i = 1; i <= -n; ++i) {
        const double f = z - static_cast<double>(i);
        if (f == 0.0) throw pole_error("rising power: zero factor");
        r *= f;
    }
    return 1.0 / r;
}

// Gamma-ratio definition of real factorial powers: rising is
// gamma(z+a)/gamma(z), falling is gamma(z+1)/gamma(z-a+1). Computed through
// sign-tracked log-gamma; target relative accuracy 1e-12 away from poles.
// Integer exponents take the exact product path, which also covers arguments
// where the gamma ratio is a removable limit.
inline double factorial_power_real(double z, double a, Kind kind) {
    if (!std::isfinite(z) || !std::isfinite(a))
        throw domain_error("factorial_power_real: arguments must be finite");
    if (a == std::rint(a) && std::fabs(a) < 1e6) {
        const auto n = static_cast<std::int64_t>(std::llrint(a));
        return kind == Kind::falling ? falling(z, n) : rising(z, n);
    }
    const double num = kind == Kind::rising ? z + a : z + 1.0;
    const double den = kind == Kind::rising ? z : z - a + 1.0;
    for (double arg : {num, den})
        if (arg < 0.5 && std::fabs(arg - std::rint(arg)) < 1e-9)
            throw pole_error("factorial_power_real: gamma argument within 1e-9 of a pole");
    int sign_num = 0, sign_den = 0;
    const double ln = lgamma_r(num, &sign_num);
    const double ld = lgamma_r(den, &sign_den);
    return static_cast<double>(sign_num * sign_den) * std::exp(ln - ld);
}

// ---------------------------------------------------------------------------
// Basis conversions. power_to_falling expands a polynomial over falling
// factorial powers via subset numbers; falling_to_power/rising_to_power
// invert via signed/unsigned cycle numbers.

inline std::vector<Rat> power_to_falling(const Poly& p) {
    const int d = p.degree();
    std::vector<Rat> out(static_cast<std::size_t>(std::max(d, 0)) + 1, Rat(0));
    for (int n = 0; n <= d; ++n) {
        if (p.coeff(n) == 0) continue;
        for (int k = 0; k <= n; ++k)
            out[k] += p.coeff(n) * Rat(numbers::stirling_subset(n, k));
    }
    return out;
}

inline std::vector<Rat> power_to_rising(const Poly& p) {
    const int d = p.degree();
    std::vector<Rat> out(static_cast<std::size_t>(std::max(d, 0)) + 1, Rat(0));
    for (int n = 0; n <= d; ++n) {
        if (p.coeff(n) == 0) continue;
        for (int k = 0; k <= n; ++k) {
            const Rat term = p.coeff(n) * Rat(numbers::stirling_subset(n, k));
            out[k] += (n - k) % 2 == 0 ? term : -term;
        }
    }
    return out;
}

inline Poly falling_to_power(const std::vector<Rat>& coeffs) {
    Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        std::vector<Rat> c(k + 1, Rat(0));
        for (std::size_t j = 0; j <= k; ++j) {
            const Rat term = coeffs[k] * Rat(numbers::stirling_cycle(static_cast<std::int64_t>(k),
                                                                     static_cast<std::int64_t>(j)));
            c[j] = (k - j) % 2 == 0 ? term : -term;
        }
        out += Poly(std::move(c));
    }
    return out;
}

inline Poly rising_to_power(const std::vector<Rat>& coeffs) {
    Poly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        std::vector<Rat> c(k + 1, Rat(0));
        for (std::size_t j = 0; j <= k; ++j)
            c[j] = coeffs[k] * Rat(numbers::stirling_cycle(static_cast<std::int64_t>(k),
                                                           static_cast<std::int64_t>(j)));
        out += Poly(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact reciprocal expansions.

// 1/z = sum_{k=1}^{n} z_1...z_{k-1} / ((z+z_1)...(z+z_k))
//       + z_1...z_n / (z (z+z_1)...(z+z_n)), verified exactly.
inline bool nicole_check(const Rat& z, const std::vector<Rat>& zs) {
    if (z == 0) throw pole_error("nicole_check: z must be nonzero");
    Rat sum = 0;
    Rat numer = 1;  // z_1...z_{k-1}
    Rat denom = 1;  // (z+z_1)...(z+z_k)
    for (std::size_t k = 0; k < zs.size(); ++k) {
        const Rat f = z + zs[k];
        if (f == 0) throw pole_error("nicole_check: vanishing denominator factor");
        denom *= f;
        sum += numer / denom;
        numer *= zs[k];
    }
    const Rat remainder = numer / (z * denom);
    return sum + remainder == 1 / z;
}

// Partial sum and remainder of the factorial reciprocal series:
// partial = sum_{k=1}^{n} (k-1)!/((z+1)...(z+k)),
// remainder = n!/(z(z+1)...(z+n)); their sum is exactly 1/z.
inline std::pair<Rat, Rat> reciprocal_series(const Rat& z, int n) {
    if (n < 1) throw domain_error("reciprocal_series: n must be positive");
    if (z == 0) throw pole_error("reciprocal_series: z must be nonzero");
    Rat partial = 0;
    Rat denom = 1;
    Int kfact = 1;  // (k-1)! entering term k
    for (int k = 1; k <= n; ++k) {
        const Rat f = z + k;
        if (f == 0) throw pole_error("reciprocal_series: vanishing factor z + " + std::to_string(k));
        denom *= f;
        if (k > 1) kfact *= k - 1;
        partial += Rat(kfact) / denom;
    }
    const Rat remainder = Rat(kfact * n) / (z * denom);
    return {partial, remainder};
}

// ---------------------------------------------------------------------------
// Series for negative and general powers.

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    double last_term = 0.0;
    bool converged = false;  // stopping rule fired before the budget ran out
};

// Convergent expansion of z^n for negative integer n over falling powers:
// term j is {n over n-j} * z^(n-j falling), j = 0..m-1. Internally exact
// (the double z is converted to a rational without rounding), so the
// reported value carries no accumulation error beyond the final rounding.
inline SeriesResult negative_power_series(double z, std::int64_t n, int m) {
    if (!(z > 0)) throw domain_error("negative_power_series: z must be positive");
    if (n >= 0) throw domain_error("negative_power_series: n must be negative");
    if (m < 1) throw domain_error("negative_power_series: need at least one term");
    const Rat zr(z);
    Rat total = 0;
    Rat term = 0;
    for (int j = 0; j < m; ++j) {
        term = Rat(numbers::stirling_subset(n, n - j)) * falling(zr, n - j);
        total += term;
    }
    return {to_double(total), m, to_double(term), false};
}

// Exact finite instance of the power-to-falling expansion for integer
// exponents; the workhorse behind the nonnegative-alpha branch below.
inline Rat generalized_power_exact(const Rat& z, int alpha) {
    if (alpha < 0) throw domain_error("generalized_power_exact: alpha must be nonnegative");
    Rat total = 0;
    for (int k = 0; k <= alpha; ++k)
        total += Rat(numbers::stirling_subset(alpha, alpha - k)) * falling(z, alpha - k);
    return total;
}

namespace detail {

// Coefficients h_k of ((1/u) ln(1/(1-u)))^(-alpha) in double arithmetic; the
// exact symbolic counterpart is log_power_series below. Cross-validated
// against it in tests for small k.
inline std::vector<double> h_coefficients(double alpha, int order) {
    std::vector<double> base(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) base[i] = 1.0 / (i + 1);
    std::vector<double> lg(base.size(), 0.0);
    for (int k = 1; k <= order; ++k) {
        double s = k * base[k];
        for (int j = 1; j < k; ++j) s -= j * lg[j] * base[k - j];
        lg[k] = s / k;
    }
    for (auto& c : lg) c *= -alpha;
    std::vector<double> h(base.size(), 0.0);
    h[0] = 1.0;
    for (int k = 1; k <= order; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * lg[j] * h[k - j];
        h[k] = s / k;
    }
    return h;
}

}  // namespace detail

// z^alpha = sum_k {alpha over alpha-k} z^(alpha-k falling) for Re z > 0.
// Terms are formed in log space (coefficient growth and falling-power decay
// both overflow double separately, their product does not). Stops early once
// three consecutive terms drop below tol * |partial sum|.
inline SeriesResult generalized_power_series(double z, double alpha, int budget,
                                             double tol = 1e-15) {
    if (!(z > 0)) throw domain_error("generalized_power_series: z must be positive");
    if (budget < 1) throw domain_error("generalized_power_series: empty term budget");
    if (alpha == std::rint(alpha) && alpha >= 0 && alpha < 1e6) {
        const int a = static_cast<int>(std::llrint(alpha));
        SeriesResult r;
        Rat total = 0;
        Rat term = 0;
        const Rat zr(z);
        const int top = std::min(budget - 1, a);
        for (int k = 0; k <= top; ++k) {
            term = Rat(numbers::stirling_subset(a, a - k)) * falling(zr, a - k);
            total += term;
        }
        r.value = to_double(total);
        r.terms_used = top + 1;
        r.last_term = to_double(term);
        r.converged = top == a;  // the expansion terminates
        return r;
    }

    const auto h = detail::h_coefficients(alpha, budget - 1);
    int sign_z1 = 0;
    const double lg_z1 = lgamma_r(z + 1.0, &sign_z1);
    double log_prod = 0.0;  // log |prod_{j=1}^{k} (j - alpha)|
    double prod_sign = 1.0;
    double total = 0.0;
    double last = 0.0;
    int quiet = 0;
    int used = 0;
    for (int k = 0; k < budget; ++k) {
        if (k > 0) {
            const double factor = k - alpha;
            log_prod += std::log(std::fabs(factor));
            prod_sign *= factor < 0 ? -1.0 : 1.0;
        }
        used = k + 1;
        if (h[k] == 0.0) continue;
        int sign_den = 0;
        const double lg_den = lgamma_r(z + 1.0 + k - alpha, &sign_den);
        const double magnitude = std::exp(std::log(std::fabs(h[k])) + log_prod + lg_z1 - lg_den);
        const double sign = (h[k] < 0 ? -1.0 : 1.0) * prod_sign *
                            static_cast<double>(sign_z1 * sign_den);
        last = sign * magnitude;
        total += last;
        if (std::fabs(last) < tol * std::fabs(total)) {
            if (++quiet >= 3) return {total, used, last, true};
        } else {
            quiet = 0;
        }
    }
    return {total, used, last, false};
}

// Asymptotic expansion of real factorial powers: rising uses
// sum_{k=0}^{m} cycle_poly(k)(alpha) z^(alpha-k), falling the same with
// alternating signs. The reported bound is the magnitude of the first
// omitted term; the true error has that order, but the bound itself is a
// heuristic, not a guarantee.
struct AsymResult {
    double value = 0.0;
    double error_bound = 0.0;
};

inline AsymResult asym_factorial_power(double z, double alpha, int m, Kind kind) {
    if (!(z > 0)) throw domain_error("asym_factorial_power: z must be positive");
    if (m < 0) throw domain_error("asym_factorial_power: m must be nonnegative");
    double total = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double coeff = stirling_poly::cycle_poly(k)(alpha);
        if (coeff == 0.0) continue;
        const double sign = (kind == Kind::falling && k % 2 == 1) ? -1.0 : 1.0;
        total += sign * coeff * std::pow(z, alpha - k);
    }
    const double bound =
        std::fabs(stirling_poly::cycle_poly(m + 1)(alpha)) * std::pow(z, alpha - m - 1);
    return {total, bound};
}

// ---------------------------------------------------------------------------
// Generalized factorial powers with step r.

// a(a+r)...(a+(n-1)r) for n >= 0; 1/((a-r)(a-2r)...(a-|n|r)) for n < 0.
inline Rat kramp_general_factorial(const Rat& a, const Rat& r, std::int64_t n) {
    Rat out = 1;
    if (n >= 0) {
        for (std::int64_t i = 0; i < n; ++i) out *= a + r * i;
        return out;
    }
    for (std::int64_t i = 1; i <= -n; ++i) {
        const Rat f = a - r * i;
        if (f == 0) throw pole_error("generalized factorial power: vanishing factor");
        out *= f;
    }
    return 1 / out;
}

// For n >= 0: a^(n|r) = sum_m [n over n-m] a^(n-m) r^m as an exact bivariate
// polynomial identity. For n < 0: exact partial sums at interior sample
// points converge to the closed product; the tail is geometrically dominated,
// so the residual after the budget must be below four times the next term.
inline bool kramp_expansion_check(std::int64_t n, int m) {
    if (n >= 0) {
        // bivariate polynomials as vectors of Poly-in-a indexed by r-degree
        std::vector<Poly> lhs{Poly::constant(Rat(1))};
        for (std::int64_t i = 0; i < n; ++i) {
            std::vector<Poly> next(lhs.size() + 1);
            for (std::size_t j = 0; j < lhs.size(); ++j) {
                next[j] += lhs[j] * Poly::variable();           // * a
                next[j + 1] += lhs[j] * Rat(i);                 // * i r
            }
            lhs = std::move(next);
        }
        std::vector<Poly> rhs(static_cast<std::size_t>(n) + 1);
        for (std::int64_t j = 0; j <= n; ++j)
            rhs[j] = Poly::monomial(Rat(numbers::stirling_cycle(n, n - j)),
                                    static_cast<std::size_t>(n - j));
        if (lhs.size() != rhs.size()) return false;
        for (std::size_t j = 0; j < lhs.size(); ++j)
            if (lhs[j] != rhs[j]) return false;
        return true;
    }

    if (m < 4) throw domain_error("kramp_expansion_check: need a few terms for n < 0");
    const std::int64_t depth = -n;
    const std::vector<std::pair<Rat, Rat>> samples = {
        {Rat(3 * (depth + 1)), Rat(1)},
        {Rat(4 * (depth + 1)), Rat(-1)},
        {Rat(7 * (depth + 1), 2), Rat(1, 2)},
    };
    for (const auto& [a, r] : samples) {
        const Rat target = kramp_general_factorial(a, r, n);
        Rat partial = 0;
        Rat halfway_err = 0;
        for (int j = 0; j <= m; ++j) {
            partial += Rat(numbers::stirling_cycle(n, n - j)) * rpow(a, n - j) * rpow(r, j);
            if (j == m / 2) {
                halfway_err = partial - target;
                if (halfway_err < 0) halfway_err = -halfway_err;
            }
        }
        Rat err = partial - target;
        if (err < 0) err = -err;
        Rat next = Rat(numbers::stirling_cycle(n, n - m - 1)) * rpow(a, n - m - 1) * rpow(r, m + 1);
        if (next < 0) next = -next;
        if (!(err < halfway_err)) return false;
        if (!(err <= 4 * next)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact generating series for the generalized-power coefficients.

inline constexpr long long kDefaultSeriesOrderCap = 16;

// Coefficients h_k in Q[alpha] of ((1/u) ln(1/(1-u)))^(-alpha), truncated at
// order K. They satisfy h_k * prod_{j=1}^{k} (j - alpha) = {alpha over
// alpha-k} as exact polynomials in alpha.
inline Series<Poly> log_power_series(int order) {
    if (order < 0) throw domain_error("log_power_series: order must be nonnegative");
    if (order > env_cap("TANDEM_SERIES_ORDER_CAP", kDefaultSeriesOrderCap))
        throw cap_error("log_power_series: order exceeds TANDEM_SERIES_ORDER_CAP");
    Series<Rat> base(order);
    for (int i = 0; i <= order; ++i) base.set(i, Rat(1, i + 1));
    const Series<Rat> lg = base.log();
    Series<Poly> exponent(order);
    for (int i = 1; i <= order; ++i) exponent.set(i, Poly::monomial(-lg[i], 1));
    return exponent.exp();
}

}  // namespace tandem::analysis
