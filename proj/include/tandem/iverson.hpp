#pragma once

// Bracket evaluation with strong-zero semantics, a finite-support summation
// engine, and a machine-checkable catalog of bracket identities.
//
// A bracket [P] is exactly 0 or 1. When a guard is false the guarded term is
// never evaluated, so expressions like [false] * (1/0) are 0 rather than an
// error. A zero that *is* evaluated in a denominator still raises pole_error:
// brackets annihilate multiplicatively, nothing more.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tandem/exact.hpp"
#include "tandem/numbers.hpp"

namespace tandem::iverson {

using Assignment = std::map<std::string, Rat>;

inline Int rfloor(const Rat& q) {
    const Int& num = boost::multiprecision::numerator(q);
    const Int& den = boost::multiprecision::denominator(q);
    Int quot = num / den;
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

inline Int rceil(const Rat& q) { return -rfloor(-q); }

// Integer-valued expression over named variables; immutable and shareable.
// An "opaque" node is evaluable but invisible to affine analysis, which is
// how host expression languages plug arbitrary terms into guards.
class NumExpr {
  public:
    static NumExpr constant(Rat v) { return NumExpr(Node{std::move(v)}); }
    static NumExpr constant(Int v) { return NumExpr(Node{Rat(std::move(v))}); }
    static NumExpr var(std::string name) { return NumExpr(Node{Var{std::move(name)}}); }
    static NumExpr opaque(std::function<Rat(const Assignment&)> fn) {
        return NumExpr(Node{Opaque{std::move(fn)}});
    }

    friend NumExpr operator+(const NumExpr& a, const NumExpr& b) { return binary('+', a, b); }
    friend NumExpr operator-(const NumExpr& a, const NumExpr& b) { return binary('-', a, b); }
    friend NumExpr operator*(const NumExpr& a, const NumExpr& b) { return binary('*', a, b); }
    friend NumExpr operator-(const NumExpr& a) {
        return binary('-', constant(Rat(0)), a);
    }

    Rat eval(const Assignment& asg) const { return eval_node(*node_, asg); }

    // Decompose as a*var + b with all other variables resolved through the
    // assignment. nullopt when the expression is not recognizably affine.
    std::optional<std::pair<Rat, Rat>> affine_in(const std::string& var, const Assignment& asg) const {
        return affine_node(*node_, var, asg);
    }

  private:
    struct Node;
    struct Var {
        std::string name;
    };
    struct Opaque {
        std::function<Rat(const Assignment&)> fn;
    };
    struct Binary {
        char op;
        std::shared_ptr<const Node> lhs, rhs;
    };
    using Payload = std::variant<Rat, Var, Opaque, Binary>;
    struct Node {
        Payload payload;
    };

    explicit NumExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    static NumExpr binary(char op, const NumExpr& a, const NumExpr& b) {
        return NumExpr(Node{Binary{op, a.node_, b.node_}});
    }

    static Rat eval_node(const Node& n, const Assignment& asg) {
        if (const auto* c = std::get_if<Rat>(&n.payload)) return *c;
        if (const auto* v = std::get_if<Var>(&n.payload)) {
            auto it = asg.find(v->name);
            if (it == asg.end()) throw unbound_variable("unbound variable '" + v->name + "'");
            return it->second;
        }
        if (const auto* o = std::get_if<Opaque>(&n.payload)) return o->fn(asg);
        const auto& b = std::get<Binary>(n.payload);
        const Rat l = eval_node(*b.lhs, asg);
        const Rat r = eval_node(*b.rhs, asg);
        switch (b.op) {
            case '+': return l + r;
            case '-': return l - r;
            default: return l * r;
        }
    }

    static std::optional<std::pair<Rat, Rat>> affine_node(const Node& n, const std::string& var,
                                                          const Assignment& asg) {
        // Anything that evaluates without the variable bound is a constant.
        try {
            return std::pair{Rat(0), eval_node(n, asg)};
        } catch (const unbound_variable&) {
        } catch (const error&) {
            return std::nullopt;
        }
        if (const auto* v = std::get_if<Var>(&n.payload)) {
            if (v->name == var) return std::pair{Rat(1), Rat(0)};
            return std::nullopt;  // some other unbound variable
        }
        const auto* b = std::get_if<Binary>(&n.payload);
        if (b == nullptr) return std::nullopt;
        auto l = affine_node(*b->lhs, var, asg);
        auto r = affine_node(*b->rhs, var, asg);
        if (!l || !r) return std::nullopt;
        switch (b->op) {
            case '+': return std::pair{l->first + r->first, l->second + r->second};
            case '-': return std::pair{l->first - r->first, l->second - r->second};
            default:
                if (l->first == 0) return std::pair{l->second * r->first, l->second * r->second};
                if (r->first == 0) return std::pair{r->second * l->first, r->second * l->second};
                return std::nullopt;
        }
    }

    std::shared_ptr<const Node> node_;
};

enum class CmpOp { lt, le, eq, ne, ge, gt };

// Decidable predicate over integer-valued expressions.
class Pred {
  public:
    static Pred cmp(CmpOp op, NumExpr l, NumExpr r) {
        return Pred(Node{Cmp{op, std::move(l), std::move(r)}});
    }
    static Pred divides(NumExpr d, NumExpr m) { return Pred(Node{Div{std::move(d), std::move(m)}}); }
    static Pred prime(NumExpr e) { return Pred(Node{Unary{UnaryKind::prime, std::move(e)}}); }
    static Pred even(NumExpr e) { return Pred(Node{Unary{UnaryKind::even, std::move(e)}}); }
    static Pred odd(NumExpr e) { return Pred(Node{Unary{UnaryKind::odd, std::move(e)}}); }
    static Pred in_set(NumExpr e, std::vector<Int> values) {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return Pred(Node{InSet{std::move(e), std::move(values)}});
    }
    static Pred lit(bool b) { return Pred(Node{b}); }
    // Truth decided by an arbitrary callable; opaque to support derivation.
    static Pred opaque(std::function<bool(const Assignment&)> fn) {
        return Pred(Node{OpaquePred{std::move(fn)}});
    }

    friend Pred operator&&(const Pred& a, const Pred& b) {
        return Pred(Node{Junction{true, a.node_, b.node_}});
    }
    friend Pred operator||(const Pred& a, const Pred& b) {
        return Pred(Node{Junction{false, a.node_, b.node_}});
    }
    Pred operator!() const { return Pred(Node{Negation{node_}}); }

    bool holds(const Assignment& asg) const { return holds_node(*node_, asg); }

    struct Range {
        std::optional<Int> lo, hi;
        bool infeasible = false;
    };

    // Bounds implied for `var` by the conjunctive structure of the predicate.
    // Sound: outside the reported range the predicate is false. Disjunctions
    // and negations contribute nothing.
    Range bounds_for(const std::string& var, const Assignment& asg) const {
        Range r;
        bound_node(*node_, var, asg, r);
        return r;
    }

  private:
    enum class UnaryKind { prime, even, odd };
    struct Node;
    struct Cmp {
        CmpOp op;
        NumExpr lhs, rhs;
    };
    struct Div {
        NumExpr d, m;
    };
    struct Unary {
        UnaryKind kind;
        NumExpr e;
    };
    struct InSet {
        NumExpr e;
        std::vector<Int> values;  // sorted
    };
    struct OpaquePred {
        std::function<bool(const Assignment&)> fn;
    };
    struct Junction {
        bool conj;
        std::shared_ptr<const Node> lhs, rhs;
    };
    struct Negation {
        std::shared_ptr<const Node> inner;
    };
    using Payload = std::variant<bool, Cmp, Div, Unary, InSet, OpaquePred, Junction, Negation>;
    struct Node {
        Payload payload;
    };

    explicit Pred(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    static Int int_operand(const NumExpr& e, const Assignment& asg, const char* what) {
        Rat v = e.eval(asg);
        if (!is_integer(v)) throw domain_error(std::string(what) + " expects an integer operand");
        return boost::multiprecision::numerator(v);
    }

    static bool holds_node(const Node& n, const Assignment& asg) {
        if (const auto* b = std::get_if<bool>(&n.payload)) return *b;
        if (const auto* c = std::get_if<Cmp>(&n.payload)) {
            const Rat l = c->lhs.eval(asg), r = c->rhs.eval(asg);
            switch (c->op) {
                case CmpOp::lt: return l < r;
                case CmpOp::le: return l <= r;
                case CmpOp::eq: return l == r;
                case CmpOp::ne: return l != r;
                case CmpOp::ge: return l >= r;
                default: return l > r;
            }
        }
        if (const auto* d = std::get_if<Div>(&n.payload)) {
            const Int dv = int_operand(d->d, asg, "divides");
            const Int mv = int_operand(d->m, asg, "divides");
            if (dv == 0) return mv == 0;
            return mv % dv == 0;
        }
        if (const auto* u = std::get_if<Unary>(&n.payload)) {
            const Int v = int_operand(u->e, asg, "parity/primality");
            switch (u->kind) {
                case UnaryKind::prime: return is_prime(v);
                case UnaryKind::even: return v % 2 == 0;
                default: return v % 2 != 0;
            }
        }
        if (const auto* s = std::get_if<InSet>(&n.payload)) {
            const Rat v = s->e.eval(asg);
            if (!is_integer(v)) return false;
            return std::binary_search(s->values.begin(), s->values.end(),
                                      boost::multiprecision::numerator(v));
        }
        if (const auto* o = std::get_if<OpaquePred>(&n.payload)) return o->fn(asg);
        if (const auto* j = std::get_if<Junction>(&n.payload)) {
            if (j->conj) return holds_node(*j->lhs, asg) && holds_node(*j->rhs, asg);
            return holds_node(*j->lhs, asg) || holds_node(*j->rhs, asg);
        }
        return !holds_node(*std::get<Negation>(n.payload).inner, asg);
    }

    static void merge_lo(Range& r, Int v) {
        if (!r.lo || *r.lo < v) r.lo = std::move(v);
    }
    static void merge_hi(Range& r, Int v) {
        if (!r.hi || *r.hi > v) r.hi = std::move(v);
    }

    // a*v + b REL 0 with a != 0, solved over the integers.
    static void bound_affine(Range& r, const Rat& a, const Rat& b, CmpOp op) {
        CmpOp rel = op;
        if (a < 0) {
            switch (op) {
                case CmpOp::lt: rel = CmpOp::gt; break;
                case CmpOp::le: rel = CmpOp::ge; break;
                case CmpOp::ge: rel = CmpOp::le; break;
                case CmpOp::gt: rel = CmpOp::lt; break;
                default: break;
            }
        }
        const Rat t = -b / a;
        switch (rel) {
            case CmpOp::lt: merge_hi(r, is_integer(t) ? rfloor(t) - 1 : rfloor(t)); break;
            case CmpOp::le: merge_hi(r, rfloor(t)); break;
            case CmpOp::ge: merge_lo(r, rceil(t)); break;
            case CmpOp::gt: merge_lo(r, is_integer(t) ? rceil(t) + 1 : rceil(t)); break;
            case CmpOp::eq:
                if (is_integer(t)) {
                    merge_lo(r, boost::multiprecision::numerator(t));
                    merge_hi(r, boost::multiprecision::numerator(t));
                } else {
                    r.infeasible = true;
                }
                break;
            case CmpOp::ne: break;
        }
    }

    static void bound_node(const Node& n, const std::string& var, const Assignment& asg, Range& r) {
        if (const auto* b = std::get_if<bool>(&n.payload)) {
            if (!*b) r.infeasible = true;
            return;
        }
        if (const auto* j = std::get_if<Junction>(&n.payload)) {
            if (j->conj) {
                bound_node(*j->lhs, var, asg, r);
                bound_node(*j->rhs, var, asg, r);
            }
            return;
        }
        if (const auto* c = std::get_if<Cmp>(&n.payload)) {
            auto l = c->lhs.affine_in(var, asg);
            auto r2 = c->rhs.affine_in(var, asg);
            if (!l || !r2) return;
            const Rat a = l->first - r2->first;
            const Rat b = l->second - r2->second;
            if (a == 0) {
                // Constant conjunct: a false one empties the support.
                Assignment probe = asg;
                probe[var] = 0;
                if (!holds_node(n, probe)) r.infeasible = true;
                return;
            }
            bound_affine(r, a, b, c->op);
            return;
        }
        if (const auto* s = std::get_if<InSet>(&n.payload)) {
            auto aff = s->e.affine_in(var, asg);
            if (!aff || aff->first == 0) return;
            std::optional<Int> lo, hi;
            for (const Int& target : s->values) {
                const Rat sol = (Rat(target) - aff->second) / aff->first;
                if (!is_integer(sol)) continue;
                Int v = boost::multiprecision::numerator(sol);
                if (!lo || v < *lo) lo = v;
                if (!hi || v > *hi) hi = v;
            }
            if (!lo) {
                r.infeasible = true;
            } else {
                merge_lo(r, *lo);
                merge_hi(r, *hi);
            }
            return;
        }
        // divisibility, parity, primality, negation, disjunction, opaque:
        // no usable bound.
    }

    std::shared_ptr<const Node> node_;
};

inline int bracket(const Pred& p, const Assignment& asg = {}) { return p.holds(asg) ? 1 : 0; }

// Guard-first lazy evaluation: the term is untouched when the guard fails.
inline Rat guarded_term(const Pred& guard, const std::function<Rat(const Assignment&)>& term,
                        const Assignment& asg = {}) {
    if (!guard.holds(asg)) return 0;
    return term(asg);
}

// One bound variable ranging over the integers; the guard times the term must
// have finite support, either declared explicitly or derivable from the
// guard's conjunctive linear bounds.
struct SumSpec {
    std::string var;
    Pred guard;
    std::function<Rat(const Assignment&)> term;
    std::optional<std::pair<Int, Int>> support;
};

inline constexpr long long kDefaultSumCap = 10'000'000;

namespace detail {

struct ResolvedSupport {
    Int lo, hi;
    bool empty = false;
};

inline ResolvedSupport resolve_support(const SumSpec& spec, const Assignment& outer, bool multiplicative) {
    if (spec.support) {
        // Declared support: sample just outside both ends; a live guard with a
        // non-neutral (or non-evaluable) term there disproves the declaration.
        const auto& [lo, hi] = *spec.support;
        if (lo > hi) return {lo, hi, true};
        Assignment asg = outer;
        for (int d = 1; d <= 3; ++d) {
            for (const Int& probe : {Int(lo - d), Int(hi + d)}) {
                asg[spec.var] = Rat(probe);
                if (!spec.guard.holds(asg)) continue;
                Rat v;
                try {
                    v = spec.term(asg);
                } catch (const std::exception&) {
                    throw support_error("declared support violated at " + probe.str() +
                                        ": guard holds and term fails to evaluate");
                }
                if (v != (multiplicative ? 1 : 0))
                    throw support_error("declared support violated at " + probe.str());
            }
        }
        return {lo, hi, false};
    }
    const Pred::Range r = spec.guard.bounds_for(spec.var, outer);
    if (r.infeasible) return {Int(0), Int(-1), true};
    if (!r.lo || !r.hi)
        throw support_error("cannot derive a finite support for '" + spec.var +
                            "'; declare one explicitly");
    return {*r.lo, *r.hi, *r.lo > *r.hi};
}

inline void check_width(const Int& lo, const Int& hi) {
    const long long cap = env_cap("TANDEM_SUM_CAP", kDefaultSumCap);
    if (hi - lo + 1 > cap) throw cap_error("summation support wider than TANDEM_SUM_CAP");
}

}  // namespace detail

inline Rat sum_brackets(const SumSpec& spec, const Assignment& outer = {}) {
    auto sup = detail::resolve_support(spec, outer, false);
    if (sup.empty) return 0;
    detail::check_width(sup.lo, sup.hi);
    Assignment asg = outer;
    Rat total = 0;
    for (Int v = sup.lo; v <= sup.hi; ++v) {
        asg[spec.var] = Rat(v);
        if (spec.guard.holds(asg)) total += spec.term(asg);
    }
    return total;
}

// Multiplicative form: brackets act as exponents, so guard-false indices
// contribute the neutral factor 1 and the term stays unevaluated.
inline Rat prod_brackets(const SumSpec& spec, const Assignment& outer = {}) {
    auto sup = detail::resolve_support(spec, outer, true);
    if (sup.empty) return 1;
    detail::check_width(sup.lo, sup.hi);
    Assignment asg = outer;
    Rat total = 1;
    for (Int v = sup.lo; v <= sup.hi; ++v) {
        asg[spec.var] = Rat(v);
        if (spec.guard.holds(asg)) total *= spec.term(asg);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Libri's recursive construction and the divisor quotient built from it.

// P_0 = 1 and P_k = -sum_{j=0}^{k-1} [x > k-j] P_j for k > 0, which
// telescopes to P_k(x) = [x divides k] - [x divides k-1].
inline Int libri_P(int k, Int x) {
    if (k < 0 || x < 1) throw domain_error("libri_P: need k >= 0 and x >= 1");
    std::vector<Int> p(static_cast<std::size_t>(k) + 1);
    p[0] = 1;
    for (int j = 1; j <= k; ++j) {
        Int acc = 0;
        for (int i = 0; i < j; ++i)
            if (x > j - i) acc += p[i];
        p[j] = -acc;
    }
    return p[k];
}

// Evaluates (1 - sum_{k=0}^{m-1} (m-k) [x > m-k] P_k(x)) / x, which is the
// indicator [x divides m].
inline Int libri_divisor(Int m, Int x) {
    if (m < 1 || x < 1) throw domain_error("libri_divisor: need m, x >= 1");
    const int mi = m.convert_to<int>();
    std::vector<Int> p(static_cast<std::size_t>(mi));
    p[0] = 1;
    for (int j = 1; j < mi; ++j) {
        Int acc = 0;
        for (int i = 0; i < j; ++i)
            if (x > j - i) acc += p[i];
        p[j] = -acc;
    }
    Int numerator = 1;
    for (int k = 0; k < mi; ++k)
        if (x > m - k) numerator -= (m - k) * p[k];
    if (numerator % x != 0) throw error("libri_divisor: quotient is not an integer");
    return numerator / x;
}

// (sum_{m=1}^{p-1} m^k) mod p for prime p; equals (p-1)[p-1 | k] mod p.
inline Int power_sum_mod(Int p, std::int64_t k) {
    if (!is_prime(p)) throw domain_error("power_sum_mod: modulus must be prime");
    if (k < 1) throw domain_error("power_sum_mod: exponent must be positive");
    auto modpow = [&p](Int base, std::int64_t e) {
        Int r = 1;
        base %= p;
        while (e > 0) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    Int total = 0;
    for (Int m = 1; m < p; ++m) total = (total + modpow(m, k)) % p;
    return total;
}

// ---------------------------------------------------------------------------
// Identity catalog. Each entry evaluates both sides of one catalogued
// identity exactly at the given parameters and reports the outcome.

struct IdentityParams {
    std::int64_t n = 4;        // size / bound parameter
    std::int64_t k = 0;        // evaluation point for pointwise identities
    Rat z = Rat(1, 2);         // sample point for series-shaped identities
    Rat x = Rat(0), y = Rat(1);
    std::uint64_t seed = 1;    // drives random sets / coefficients
};

struct Report {
    bool holds = false;
    Rat lhs, rhs;
    std::string detail;
};

namespace detail {

inline NumExpr var_k() { return NumExpr::var("k"); }

inline Pred range_guard(const std::string& var, std::int64_t lo, std::int64_t hi) {
    return Pred::cmp(CmpOp::le, NumExpr::constant(Rat(lo)), NumExpr::var(var)) &&
           Pred::cmp(CmpOp::le, NumExpr::var(var), NumExpr::constant(Rat(hi)));
}

inline std::vector<Int> random_set(SplitMix64& rng) {
    std::set<Int> s;
    const int size = 3 + static_cast<int>(rng.below(4));
    while (static_cast<int>(s.size()) < size) s.insert(Int(rng.range(-8, 12)));
    return {s.begin(), s.end()};
}

// Random cubic with coefficients in [-5, 5]; the test function for the
// set-union and parity-split identities.
inline std::function<Rat(const Rat&)> random_cubic(SplitMix64& rng) {
    std::array<std::int64_t, 4> c{rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5),
                                  rng.range(-5, 5)};
    return [c](const Rat& v) { return ((Rat(c[3]) * v + c[2]) * v + c[1]) * v + c[0]; };
}

inline Rat binomial_term(std::int64_t n, const Int& k, const Rat& z) {
    // The binomial coefficient is a strong zero here: when it vanishes the
    // power z^k is not formed at all (it may have a negative exponent).
    const Int coeff = numbers::binomial(n, k.convert_to<std::int64_t>());
    if (coeff == 0) return 0;
    return Rat(coeff) * rpow(z, k.convert_to<std::int64_t>());
}

inline Rat sum_over(const std::string& var, Pred guard, std::function<Rat(const Assignment&)> term,
                    std::optional<std::pair<Int, Int>> support = std::nullopt,
                    const Assignment& outer = {}) {
    return sum_brackets(SumSpec{var, std::move(guard), std::move(term), std::move(support)}, outer);
}

}  // namespace detail

inline const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> ids = {"1.2",  "1.3",  "1.5",  "1.8",  "1.9",  "1.10",
                                                 "1.11", "1.12", "1.13", "1.14", "1.18", "1.19"};
    return ids;
}

inline Report verify_identity(std::string_view id, const IdentityParams& p = {}) {
    using namespace detail;
    SplitMix64 rng(p.seed);
    Report rep;

    if (id == "1.2") {
        if (p.n < 0) throw domain_error("identity 1.2: n must be nonnegative");
        rep.lhs = rpow(Rat(1) + p.z, p.n);
        rep.rhs = sum_over(
            "k", Pred::lit(true),
            [&](const Assignment& a) { return binomial_term(p.n, to_int(a.at("k")), p.z); },
            std::pair{Int(-3), Int(p.n + 3)});
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "(1+z)^n as an unbounded bracket sum, n=" + std::to_string(p.n) +
                     ", z=" + str(p.z);
        return rep;
    }
    if (id == "1.3") {
        if (p.n < 0) throw domain_error("identity 1.3: n must be nonnegative");
        const std::int64_t h = p.n / 2;
        const Rat target = rpow(Rat(1) + p.z, p.n);
        const Rat s1 = sum_over(
            "k", Pred::lit(true),
            [&](const Assignment& a) { return binomial_term(p.n, to_int(a.at("k")), p.z); },
            std::pair{Int(-3), Int(p.n + 3)});
        const Rat s2 = sum_over(
            "k", Pred::lit(true),
            [&](const Assignment& a) { return binomial_term(p.n, to_int(a.at("k")) + 1, p.z); },
            std::pair{Int(-4), Int(p.n + 2)});
        const Rat s3 = sum_over(
            "k", Pred::lit(true),
            [&](const Assignment& a) {
                return binomial_term(p.n, Int(h) - to_int(a.at("k")), p.z);
            },
            std::pair{Int(h - p.n - 3), Int(h + 3)});
        rep.lhs = s1;
        rep.rhs = s3;
        rep.holds = s1 == target && s2 == target && s3 == target;
        rep.detail = "index shift and reflection leave the sum unchanged";
        return rep;
    }
    if (id == "1.5") {
        if (p.n < 0) throw domain_error("identity 1.5: n must be nonnegative");
        auto term = [&](const Assignment& a) {
            const Rat k = a.at("k");
            return k * (k - 1) * (Rat(p.n) - k);
        };
        rep.lhs = sum_over("k", range_guard("k", 2, p.n - 1), term);
        rep.rhs = sum_over("k", range_guard("k", 0, p.n), term);
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "zero-padded limits, n=" + std::to_string(p.n);
        return rep;
    }
    if (id == "1.8") {
        const Assignment asg{{"k", Rat(p.k)}};
        const Pred ge0 = Pred::cmp(CmpOp::ge, var_k(), NumExpr::constant(Rat(0)));
        const Pred ge1 = Pred::cmp(CmpOp::ge, var_k(), NumExpr::constant(Rat(1)));
        rep.lhs = Rat(p.k) * bracket(ge0, asg);
        rep.rhs = Rat(p.k) * bracket(ge1, asg);
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "k[k>=0] = k[k>=1] at k=" + std::to_string(p.k);
        return rep;
    }
    if (id == "1.9" || id == "1.10") {
        const std::vector<Int> a = random_set(rng);
        const std::vector<Int> b = random_set(rng);
        std::vector<Int> unite, meet;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(unite));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        if (id == "1.10") {
            const Assignment asg{{"k", Rat(p.k)}};
            auto member = [&](const std::vector<Int>& s) {
                return bracket(Pred::in_set(var_k(), s), asg);
            };
            rep.lhs = member(a) + member(b);
            rep.rhs = member(unite) + member(meet);
            rep.holds = rep.lhs == rep.rhs;
            rep.detail = "membership brackets at k=" + std::to_string(p.k);
            return rep;
        }
        auto f = random_cubic(rng);
        auto term = [&](const Assignment& asg) { return f(asg.at("k")); };
        auto over = [&](const std::vector<Int>& s) {
            if (s.empty()) return Rat(0);
            return sum_over("k", Pred::in_set(var_k(), s), term);
        };
        rep.lhs = over(a) + over(b);
        rep.rhs = over(unite) + over(meet);
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "set-union axiom over random sets";
        return rep;
    }
    if (id == "1.11") {
        if (p.n < 0) throw domain_error("identity 1.11: n must be nonnegative");
        std::array<std::int64_t, 4> c{rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4),
                                      rng.range(-4, 4)};
        auto f = [c](const Rat& j, const Rat& k) {
            return Rat(c[0]) * j * k + Rat(c[1]) * j + Rat(c[2]) * k + Rat(c[3]);
        };
        rep.lhs = sum_over("j", range_guard("j", 1, p.n), [&](const Assignment& outer) {
            return sum_over(
                "k",
                Pred::cmp(CmpOp::le, NumExpr::constant(Rat(1)), var_k()) &&
                    Pred::cmp(CmpOp::le, var_k(), NumExpr::var("j")),
                [&](const Assignment& a) { return f(a.at("j"), a.at("k")); }, std::nullopt, outer);
        });
        rep.rhs = sum_over("k", range_guard("k", 1, p.n), [&](const Assignment& outer) {
            return sum_over(
                "j",
                Pred::cmp(CmpOp::le, var_k(), NumExpr::var("j")) &&
                    Pred::cmp(CmpOp::le, NumExpr::var("j"), NumExpr::constant(Rat(p.n))),
                [&](const Assignment& a) { return f(a.at("j"), a.at("k")); }, std::nullopt, outer);
        });
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "summation order interchange, n=" + std::to_string(p.n);
        return rep;
    }
    if (id == "1.12") {
        const Assignment asg{{"k", Rat(p.k)}};
        const Rat even_lhs = bracket(Pred::even(var_k()), asg);
        const Rat even_rhs = sum_over(
            "m",
            Pred::cmp(CmpOp::eq, var_k(),
                      NumExpr::constant(Rat(2)) * NumExpr::var("m")),
            [](const Assignment&) { return Rat(1); }, std::nullopt, asg);
        const Rat odd_lhs = bracket(Pred::odd(var_k()), asg);
        const Rat odd_rhs = sum_over(
            "m",
            Pred::cmp(CmpOp::eq, var_k(),
                      NumExpr::constant(Rat(2)) * NumExpr::var("m") + NumExpr::constant(Rat(1))),
            [](const Assignment&) { return Rat(1); }, std::nullopt, asg);
        rep.lhs = even_lhs;
        rep.rhs = even_rhs;
        rep.holds = even_lhs == even_rhs && odd_lhs == odd_rhs;
        rep.detail = "parity brackets as equality sums at k=" + std::to_string(p.k);
        return rep;
    }
    if (id == "1.13") {
        // f is restricted to [-bound, bound] so that every sum is finite; the
        // split into even and odd indices must not change the total.
        const std::int64_t bound = std::max<std::int64_t>(p.n, 0);
        auto f = random_cubic(rng);
        rep.lhs = sum_over("k", range_guard("k", -bound, bound),
                           [&](const Assignment& a) { return f(a.at("k")); });
        const NumExpr twice = NumExpr::constant(Rat(2)) * NumExpr::var("m");
        const NumExpr twice1 = twice + NumExpr::constant(Rat(1));
        auto between = [&](const NumExpr& e) {
            return Pred::cmp(CmpOp::le, NumExpr::constant(Rat(-bound)), e) &&
                   Pred::cmp(CmpOp::le, e, NumExpr::constant(Rat(bound)));
        };
        const Rat evens = sum_over("m", between(twice),
                                   [&](const Assignment& a) { return f(Rat(2) * a.at("m")); });
        const Rat odds = sum_over("m", between(twice1),
                                  [&](const Assignment& a) { return f(Rat(2) * a.at("m") + 1); });
        rep.rhs = evens + odds;
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "even/odd split over [-" + std::to_string(bound) + ", " + std::to_string(bound) + "]";
        return rep;
    }
    if (id == "1.14") {
        const std::int64_t n = p.n;
        if (n < 0 || n > 16) throw domain_error("identity 1.14: need 0 <= n <= 16");
        rep.lhs = sum_over(
            "k", Pred::cmp(CmpOp::ge, var_k(), NumExpr::constant(Rat(1))),
            [&](const Assignment& a) {
                const Int k = to_int(a.at("k"));
                const std::int64_t lg = static_cast<std::int64_t>(boost::multiprecision::msb(k));
                return Rat(numbers::binomial(n, lg));
            },
            std::pair{Int(1), ipow(Int(2), static_cast<std::uint64_t>(n) + 1) - 1});
        rep.rhs = rpow(Rat(3), n);
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "floor-lg binomial sum equals 3^n, n=" + std::to_string(n);
        return rep;
    }
    if (id == "1.18") {
        if (p.n < 0) throw domain_error("identity 1.18: n must be nonnegative");
        rep.lhs = rpow(p.x + p.y, p.n);
        rep.rhs = sum_over("k", range_guard("k", 0, p.n), [&](const Assignment& a) {
            const std::int64_t k = to_int(a.at("k")).convert_to<std::int64_t>();
            return Rat(numbers::binomial(p.n, k)) * rpow(p.x, k) * rpow(p.y, p.n - k);
        });
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "binomial theorem with 0^0 = 1, x=" + str(p.x) + ", y=" + str(p.y);
        return rep;
    }
    if (id == "1.19") {
        const std::int64_t x = p.n;
        rep.lhs = sum_over(
            "p",
            Pred::prime(NumExpr::var("p")) &&
                Pred::cmp(CmpOp::le, NumExpr::var("p"), NumExpr::constant(Rat(x))),
            [](const Assignment& a) { return Rat(1) / a.at("p"); },
            std::pair{Int(0), Int(std::max<std::int64_t>(x, 1))});
        Rat direct = 0;
        for (Int q = 2; q <= x; ++q)
            if (is_prime(q)) direct += Rat(1, q);
        rep.rhs = direct;
        rep.holds = rep.lhs == rep.rhs;
        rep.detail = "prime reciprocal sum through x=" + std::to_string(x) +
                     " (support includes p=0; the 1/p term is never formed there)";
        return rep;
    }
    throw domain_error("unknown identity id '" + std::string(id) + "'");
}

}  // namespace tandem::iverson
