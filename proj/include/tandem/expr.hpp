#pragma once

// Surface expression language for the command line: exact rational
// arithmetic, the table functions, Iverson brackets, and bounded sum/prod
// forms. Everything evaluates exactly; decimal literals are parsed as exact
// rationals. Summations are compiled onto the iverson engine, so strong-zero
// semantics and support derivation behave identically in both front ends.
//
// Grammar sketch (precedence low to high):
//   expr    := mulexpr (('+'|'-') mulexpr)*
//   mulexpr := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' unary]
//   primary := NUMBER | IDENT | IDENT '(' args ')' | '(' expr ')' | '[' pred ']'
//   pred    := andpred ('or' andpred)*          (and binds tighter than or)
//   atom    := expr (CMP expr)+ | expr 'divides' expr | expr 'in' '{' list '}'
//              | 'prime(...)' | 'even(...)' | 'odd(...)' | 'not' atom
//   sum/prod: sum(var, guard, body [, lo, hi])
//
// Comparison chains like [0<=k<=n] parse as conjunctions.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tandem/analysis.hpp"
#include "tandem/exact.hpp"
#include "tandem/iverson.hpp"
#include "tandem/numbers.hpp"

namespace tandem::expr {

using iverson::Assignment;

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

inline constexpr std::size_t kMaxSourceBytes = 64 * 1024;

// ---------------------------------------------------------------------------
// AST

class Expr;

enum class PredOp { lt, le, eq, ne, ge, gt };

struct PredNode;
using PredPtr = std::shared_ptr<const PredNode>;

class Expr {
  public:
    struct Num {
        Rat value;
    };
    struct Var {
        std::string name;
    };
    struct Call {
        std::string name;
        std::vector<Expr> args;
    };
    struct Bin {
        char op;  // + - * / ^
        std::shared_ptr<const Expr> lhs, rhs;
    };
    struct Neg {
        std::shared_ptr<const Expr> inner;
    };
    struct Bracket {
        PredPtr pred;
    };
    struct Reduce {  // sum(...) or prod(...)
        bool product;
        std::string var;
        std::shared_ptr<const Expr> guard, body;
        std::shared_ptr<const Expr> lo, hi;  // optional declared support
    };
    using Payload = std::variant<Num, Var, Call, Bin, Neg, Bracket, Reduce>;

    explicit Expr(Payload p) : payload_(std::make_shared<const Payload>(std::move(p))) {}
    const Payload& payload() const { return *payload_; }

  private:
    std::shared_ptr<const Payload> payload_;
};

struct PredNode {
    struct Cmp {
        PredOp op;
        Expr lhs, rhs;
    };
    struct Divides {
        Expr d, m;
    };
    struct Unary {
        int kind;  // 0 prime, 1 even, 2 odd
        Expr e;
    };
    struct InSet {
        Expr e;
        std::vector<Expr> values;
    };
    struct And {
        PredPtr lhs, rhs;
    };
    struct Or {
        PredPtr lhs, rhs;
    };
    struct Not {
        PredPtr inner;
    };
    using Payload = std::variant<Cmp, Divides, Unary, InSet, And, Or, Not>;
    Payload payload;
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class Tok {
    number,
    ident,
    lparen,
    rparen,
    lbracket,
    rbracket,
    lbrace,
    rbrace,
    comma,
    plus,
    minus,
    star,
    slash,
    caret,
    lt,
    le,
    eq,
    ne,
    ge,
    gt,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

inline const char* describe(Tok t) {
    switch (t) {
        case Tok::number: return "a number";
        case Tok::ident: return "an identifier";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lt: return "'<'";
        case Tok::le: return "'<='";
        case Tok::eq: return "'='";
        case Tok::ne: return "'!='";
        case Tok::ge: return "'>='";
        case Tok::gt: return "'>'";
        default: return "end of input";
    }
}

inline std::vector<Token> lex(std::string_view src) {
    if (src.size() > kMaxSourceBytes)
        throw parse_error("input exceeds 64 KiB", 1, 1);
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text) {
        out.push_back(Token{k, std::move(text), line, col});
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        const int startcol = col;
        auto advance = [&](std::size_t n) {
            i += n;
            col += static_cast<int>(n);
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '.' && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            out.push_back(Token{Tok::number, std::string(src.substr(i, j - i)), line, startcol});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back(Token{Tok::ident, std::string(src.substr(i, j - i)), line, startcol});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '(': push(Tok::lparen, "("); advance(1); continue;
            case ')': push(Tok::rparen, ")"); advance(1); continue;
            case '[': push(Tok::lbracket, "["); advance(1); continue;
            case ']': push(Tok::rbracket, "]"); advance(1); continue;
            case '{': push(Tok::lbrace, "{"); advance(1); continue;
            case '}': push(Tok::rbrace, "}"); advance(1); continue;
            case ',': push(Tok::comma, ","); advance(1); continue;
            case '+': push(Tok::plus, "+"); advance(1); continue;
            case '-': push(Tok::minus, "-"); advance(1); continue;
            case '*': push(Tok::star, "*"); advance(1); continue;
            case '/': push(Tok::slash, "/"); advance(1); continue;
            case '^': push(Tok::caret, "^"); advance(1); continue;
            case '<':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    push(Tok::le, "<=");
                    advance(2);
                } else {
                    push(Tok::lt, "<");
                    advance(1);
                }
                continue;
            case '>':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    push(Tok::ge, ">=");
                    advance(2);
                } else {
                    push(Tok::gt, ">");
                    advance(1);
                }
                continue;
            case '=':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    push(Tok::eq, "==");
                    advance(2);
                } else {
                    push(Tok::eq, "=");
                    advance(1);
                }
                continue;
            case '!':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    push(Tok::ne, "!=");
                    advance(2);
                    continue;
                }
                throw parse_error("unexpected character '!'", line, startcol);
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", line, startcol);
        }
    }
    out.push_back(Token{Tok::end, "", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
  public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    Expr parse_all() {
        Expr e = parse_expr();
        expect(Tok::end, "end of input");
        return e;
    }

  private:
    const Token& peek(int ahead = 0) const {
        const std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw parse_error("expected " + expected + ", found " +
                              (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"),
                          t.line, t.column);
    }
    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail(what);
        return take();
    }

    static bool is_reserved(const std::string& name) {
        return name == "and" || name == "or" || name == "not" || name == "in" ||
               name == "divides" || name == "prime" || name == "even" || name == "odd";
    }

    Expr parse_expr() {
        Expr lhs = parse_mul();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const char op = take().kind == Tok::plus ? '+' : '-';
            Expr rhs = parse_mul();
            lhs = Expr(Expr::Bin{op, std::make_shared<const Expr>(lhs),
                                 std::make_shared<const Expr>(rhs)});
        }
        return lhs;
    }

    Expr parse_mul() {
        Expr lhs = parse_unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const char op = take().kind == Tok::star ? '*' : '/';
            Expr rhs = parse_unary();
            lhs = Expr(Expr::Bin{op, std::make_shared<const Expr>(lhs),
                                 std::make_shared<const Expr>(rhs)});
        }
        return lhs;
    }

    Expr parse_unary() {
        if (peek().kind == Tok::minus) {
            take();
            Expr inner = parse_unary();
            // fold a negated literal into the literal itself
            if (const auto* num = std::get_if<Expr::Num>(&inner.payload()))
                return Expr(Expr::Num{-num->value});
            return Expr(Expr::Neg{std::make_shared<const Expr>(inner)});
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (peek().kind == Tok::caret) {
            take();
            Expr exponent = parse_unary();
            return Expr(Expr::Bin{'^', std::make_shared<const Expr>(base),
                                  std::make_shared<const Expr>(exponent)});
        }
        return base;
    }

    Expr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                return Expr(Expr::Num{parse_rat(t.text)});
            }
            case Tok::ident: {
                if (is_reserved(t.text)) fail("an expression");
                take();
                if (peek().kind != Tok::lparen) return Expr(Expr::Var{t.text});
                take();  // '('
                if (t.text == "sum" || t.text == "prod") return parse_reduce(t.text == "prod");
                std::vector<Expr> args;
                if (peek().kind != Tok::rparen) {
                    args.push_back(parse_expr());
                    while (peek().kind == Tok::comma) {
                        take();
                        args.push_back(parse_expr());
                    }
                }
                expect(Tok::rparen, "')'");
                return Expr(Expr::Call{t.text, std::move(args)});
            }
            case Tok::lparen: {
                take();
                Expr inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::lbracket: {
                take();
                PredPtr p = parse_pred();
                expect(Tok::rbracket, "']'");
                return Expr(Expr::Bracket{std::move(p)});
            }
            default:
                fail("an expression");
        }
    }

    // called with "sum(" / "prod(" already consumed
    Expr parse_reduce(bool product) {
        const Token var = expect(Tok::ident, "a bound variable name");
        if (is_reserved(var.text))
            throw parse_error("'" + var.text + "' is reserved and cannot bind", var.line, var.column);
        expect(Tok::comma, "','");
        Expr guard = parse_expr();
        expect(Tok::comma, "','");
        Expr body = parse_expr();
        std::shared_ptr<const Expr> lo, hi;
        if (peek().kind == Tok::comma) {
            take();
            lo = std::make_shared<const Expr>(parse_expr());
            expect(Tok::comma, "','");
            hi = std::make_shared<const Expr>(parse_expr());
        }
        expect(Tok::rparen, "')'");
        return Expr(Expr::Reduce{product, var.text, std::make_shared<const Expr>(guard),
                                 std::make_shared<const Expr>(body), std::move(lo), std::move(hi)});
    }

    PredPtr parse_pred() {
        PredPtr lhs = parse_pred_and();
        while (peek().kind == Tok::ident && peek().text == "or") {
            take();
            PredPtr rhs = parse_pred_and();
            lhs = std::make_shared<const PredNode>(PredNode{PredNode::Or{lhs, rhs}});
        }
        return lhs;
    }

    PredPtr parse_pred_and() {
        PredPtr lhs = parse_pred_atom();
        while (peek().kind == Tok::ident && peek().text == "and") {
            take();
            PredPtr rhs = parse_pred_atom();
            lhs = std::make_shared<const PredNode>(PredNode{PredNode::And{lhs, rhs}});
        }
        return lhs;
    }

    static PredOp to_pred_op(Tok t) {
        switch (t) {
            case Tok::lt: return PredOp::lt;
            case Tok::le: return PredOp::le;
            case Tok::eq: return PredOp::eq;
            case Tok::ne: return PredOp::ne;
            case Tok::ge: return PredOp::ge;
            default: return PredOp::gt;
        }
    }
    static bool is_cmp(Tok t) {
        return t == Tok::lt || t == Tok::le || t == Tok::eq || t == Tok::ne || t == Tok::ge ||
               t == Tok::gt;
    }

    PredPtr parse_pred_atom() {
        if (peek().kind == Tok::ident && peek().text == "not") {
            take();
            PredPtr inner = parse_pred_atom();
            return std::make_shared<const PredNode>(PredNode{PredNode::Not{inner}});
        }
        if (peek().kind == Tok::ident &&
            (peek().text == "prime" || peek().text == "even" || peek().text == "odd") &&
            peek(1).kind == Tok::lparen) {
            const std::string name = take().text;
            take();  // '('
            Expr arg = parse_expr();
            expect(Tok::rparen, "')'");
            const int kind = name == "prime" ? 0 : name == "even" ? 1 : 2;
            return std::make_shared<const PredNode>(PredNode{PredNode::Unary{kind, arg}});
        }
        Expr lhs = parse_expr();
        if (peek().kind == Tok::ident && peek().text == "divides") {
            take();
            Expr rhs = parse_expr();
            return std::make_shared<const PredNode>(PredNode{PredNode::Divides{lhs, rhs}});
        }
        if (peek().kind == Tok::ident && peek().text == "in") {
            take();
            expect(Tok::lbrace, "'{'");
            std::vector<Expr> values;
            values.push_back(parse_expr());
            while (peek().kind == Tok::comma) {
                take();
                values.push_back(parse_expr());
            }
            expect(Tok::rbrace, "'}'");
            return std::make_shared<const PredNode>(PredNode{PredNode::InSet{lhs, std::move(values)}});
        }
        if (!is_cmp(peek().kind)) fail("a comparison, 'divides', or 'in'");
        // comparison chains become conjunctions: a <= b < c
        PredPtr acc;
        Expr prev = lhs;
        while (is_cmp(peek().kind)) {
            const PredOp op = to_pred_op(take().kind);
            Expr next = parse_expr();
            auto link = std::make_shared<const PredNode>(PredNode{PredNode::Cmp{op, prev, next}});
            acc = acc ? std::make_shared<const PredNode>(PredNode{PredNode::And{acc, link}}) : link;
            prev = next;
        }
        return acc;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Canonical printing. parse(to_text(e)) reproduces e's structure, and
// to_text(parse(s)) is a fixed point for canonical s.

namespace detail {

// precedence levels: 0 additive, 1 multiplicative, 2 unary, 3 power, 4 atom
inline void print_expr(const Expr& e, int context, std::string& out);

inline void print_pred(const PredNode& p, int context, std::string& out) {
    // 0 or, 1 and, 2 atom
    auto wrap = [&](int level, auto&& body) {
        // predicate grammar has no parentheses; callers only nest correctly
        (void)level;
        body();
    };
    if (const auto* c = std::get_if<PredNode::Cmp>(&p.payload)) {
        wrap(2, [&] {
            print_expr(c->lhs, 0, out);
            switch (c->op) {
                case PredOp::lt: out += "<"; break;
                case PredOp::le: out += "<="; break;
                case PredOp::eq: out += "="; break;
                case PredOp::ne: out += "!="; break;
                case PredOp::ge: out += ">="; break;
                case PredOp::gt: out += ">"; break;
            }
            print_expr(c->rhs, 0, out);
        });
        return;
    }
    if (const auto* d = std::get_if<PredNode::Divides>(&p.payload)) {
        print_expr(d->d, 0, out);
        out += " divides ";
        print_expr(d->m, 0, out);
        return;
    }
    if (const auto* u = std::get_if<PredNode::Unary>(&p.payload)) {
        out += u->kind == 0 ? "prime(" : u->kind == 1 ? "even(" : "odd(";
        print_expr(u->e, 0, out);
        out += ")";
        return;
    }
    if (const auto* s = std::get_if<PredNode::InSet>(&p.payload)) {
        print_expr(s->e, 0, out);
        out += " in {";
        for (std::size_t i = 0; i < s->values.size(); ++i) {
            if (i) out += ",";
            print_expr(s->values[i], 0, out);
        }
        out += "}";
        return;
    }
    if (const auto* a = std::get_if<PredNode::And>(&p.payload)) {
        print_pred(*a->lhs, 1, out);
        out += " and ";
        print_pred(*a->rhs, 1, out);
        return;
    }
    if (const auto* o = std::get_if<PredNode::Or>(&p.payload)) {
        print_pred(*o->lhs, 0, out);
        out += " or ";
        print_pred(*o->rhs, 0, out);
        return;
    }
    const auto& n = std::get<PredNode::Not>(p.payload);
    out += "not ";
    print_pred(*n.inner, 2, out);
}

inline void print_expr(const Expr& e, int context, std::string& out) {
    auto parenthesize = [&](int level, auto&& body) {
        const bool parens = level < context;
        if (parens) out += "(";
        body();
        if (parens) out += ")";
    };
    if (const auto* n = std::get_if<Expr::Num>(&e.payload())) {
        const int level = n->value < 0 ? 2 : 4;
        parenthesize(level, [&] { out += str(n->value); });
        return;
    }
    if (const auto* v = std::get_if<Expr::Var>(&e.payload())) {
        out += v->name;
        return;
    }
    if (const auto* c = std::get_if<Expr::Call>(&e.payload())) {
        out += c->name;
        out += "(";
        for (std::size_t i = 0; i < c->args.size(); ++i) {
            if (i) out += ",";
            print_expr(c->args[i], 0, out);
        }
        out += ")";
        return;
    }
    if (const auto* b = std::get_if<Expr::Bin>(&e.payload())) {
        const int level = b->op == '+' || b->op == '-' ? 0 : b->op == '^' ? 3 : 1;
        parenthesize(level, [&] {
            if (b->op == '^') {
                print_expr(*b->lhs, 4, out);
                out += '^';
                print_expr(*b->rhs, 2, out);
            } else {
                print_expr(*b->lhs, level, out);
                out += b->op;
                print_expr(*b->rhs, level + 1, out);
            }
        });
        return;
    }
    if (const auto* n = std::get_if<Expr::Neg>(&e.payload())) {
        parenthesize(2, [&] {
            out += "-";
            print_expr(*n->inner, 2, out);
        });
        return;
    }
    if (const auto* br = std::get_if<Expr::Bracket>(&e.payload())) {
        out += "[";
        print_pred(*br->pred, 0, out);
        out += "]";
        return;
    }
    const auto& r = std::get<Expr::Reduce>(e.payload());
    out += r.product ? "prod(" : "sum(";
    out += r.var;
    out += ",";
    print_expr(*r.guard, 0, out);
    out += ",";
    print_expr(*r.body, 0, out);
    if (r.lo) {
        out += ",";
        print_expr(*r.lo, 0, out);
        out += ",";
        print_expr(*r.hi, 0, out);
    }
    out += ")";
}

}  // namespace detail

inline std::string to_text(const Expr& e) {
    std::string out;
    detail::print_expr(e, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline std::int64_t to_i64(const Rat& v, const char* what) {
    if (!is_integer(v)) throw domain_error(std::string(what) + ": expected an integer");
    const Int n = boost::multiprecision::numerator(v);
    if (n > Int(std::int64_t(1) << 62) || n < -Int(std::int64_t(1) << 62))
        throw domain_error(std::string(what) + ": argument out of range");
    return n.convert_to<std::int64_t>();
}

inline Rat eval_expr(const Expr& e, const Assignment& asg);

inline bool eval_pred(const PredNode& p, const Assignment& asg) {
    if (const auto* c = std::get_if<PredNode::Cmp>(&p.payload)) {
        const Rat l = eval_expr(c->lhs, asg), r = eval_expr(c->rhs, asg);
        switch (c->op) {
            case PredOp::lt: return l < r;
            case PredOp::le: return l <= r;
            case PredOp::eq: return l == r;
            case PredOp::ne: return l != r;
            case PredOp::ge: return l >= r;
            default: return l > r;
        }
    }
    if (const auto* d = std::get_if<PredNode::Divides>(&p.payload)) {
        const Int dv = to_i64(eval_expr(d->d, asg), "divides");
        const Int mv = to_i64(eval_expr(d->m, asg), "divides");
        if (dv == 0) return mv == 0;
        return mv % dv == 0;
    }
    if (const auto* u = std::get_if<PredNode::Unary>(&p.payload)) {
        const Rat v = eval_expr(u->e, asg);
        if (!is_integer(v)) throw domain_error("parity/primality expects an integer");
        const Int n = boost::multiprecision::numerator(v);
        if (u->kind == 0) return is_prime(n);
        if (u->kind == 1) return n % 2 == 0;
        return n % 2 != 0;
    }
    if (const auto* s = std::get_if<PredNode::InSet>(&p.payload)) {
        const Rat v = eval_expr(s->e, asg);
        for (const Expr& cand : s->values)
            if (eval_expr(cand, asg) == v) return true;
        return false;
    }
    if (const auto* a = std::get_if<PredNode::And>(&p.payload))
        return eval_pred(*a->lhs, asg) && eval_pred(*a->rhs, asg);
    if (const auto* o = std::get_if<PredNode::Or>(&p.payload))
        return eval_pred(*o->lhs, asg) || eval_pred(*o->rhs, asg);
    return !eval_pred(*std::get<PredNode::Not>(p.payload).inner, asg);
}

// Structural translation into the iverson layer, so that sums written on the
// command line get the same support derivation as native SumSpecs.
inline iverson::NumExpr to_numexpr(const Expr& e) {
    if (const auto* n = std::get_if<Expr::Num>(&e.payload()))
        return iverson::NumExpr::constant(n->value);
    if (const auto* v = std::get_if<Expr::Var>(&e.payload()))
        return iverson::NumExpr::var(v->name);
    if (const auto* b = std::get_if<Expr::Bin>(&e.payload())) {
        if (b->op == '+') return to_numexpr(*b->lhs) + to_numexpr(*b->rhs);
        if (b->op == '-') return to_numexpr(*b->lhs) - to_numexpr(*b->rhs);
        if (b->op == '*') return to_numexpr(*b->lhs) * to_numexpr(*b->rhs);
    }
    if (const auto* n = std::get_if<Expr::Neg>(&e.payload())) return -to_numexpr(*n->inner);
    return iverson::NumExpr::opaque([e](const Assignment& a) { return eval_expr(e, a); });
}

inline iverson::Pred to_iverson(const PredNode& p, const Assignment& outer) {
    using IP = iverson::Pred;
    if (const auto* c = std::get_if<PredNode::Cmp>(&p.payload)) {
        iverson::CmpOp op;
        switch (c->op) {
            case PredOp::lt: op = iverson::CmpOp::lt; break;
            case PredOp::le: op = iverson::CmpOp::le; break;
            case PredOp::eq: op = iverson::CmpOp::eq; break;
            case PredOp::ne: op = iverson::CmpOp::ne; break;
            case PredOp::ge: op = iverson::CmpOp::ge; break;
            default: op = iverson::CmpOp::gt; break;
        }
        return IP::cmp(op, to_numexpr(c->lhs), to_numexpr(c->rhs));
    }
    if (const auto* d = std::get_if<PredNode::Divides>(&p.payload))
        return IP::divides(to_numexpr(d->d), to_numexpr(d->m));
    if (const auto* u = std::get_if<PredNode::Unary>(&p.payload)) {
        if (u->kind == 0) return IP::prime(to_numexpr(u->e));
        if (u->kind == 1) return IP::even(to_numexpr(u->e));
        return IP::odd(to_numexpr(u->e));
    }
    if (const auto* s = std::get_if<PredNode::InSet>(&p.payload)) {
        // When every member evaluates to an integer under the enclosing
        // bindings, the membership test can bound the support; otherwise it
        // stays opaque but evaluable.
        std::vector<Int> constants;
        bool closed = true;
        for (const Expr& cand : s->values) {
            try {
                const Rat v = eval_expr(cand, outer);
                if (!is_integer(v)) {
                    closed = false;
                    break;
                }
                constants.push_back(boost::multiprecision::numerator(v));
            } catch (const std::exception&) {
                closed = false;
                break;
            }
        }
        if (closed) return IP::in_set(to_numexpr(s->e), std::move(constants));
        PredNode copy = p;
        return IP::opaque([copy](const Assignment& a) { return eval_pred(copy, a); });
    }
    if (const auto* a = std::get_if<PredNode::And>(&p.payload))
        return to_iverson(*a->lhs, outer) && to_iverson(*a->rhs, outer);
    if (const auto* o = std::get_if<PredNode::Or>(&p.payload))
        return to_iverson(*o->lhs, outer) || to_iverson(*o->rhs, outer);
    return !to_iverson(*std::get<PredNode::Not>(p.payload).inner, outer);
}

// Guards are ordinary expressions; bracket products and numeric literals map
// onto predicate conjunctions so their bounds stay visible to the engine.
inline iverson::Pred guard_pred(const Expr& e, const Assignment& outer) {
    if (const auto* br = std::get_if<Expr::Bracket>(&e.payload()))
        return to_iverson(*br->pred, outer);
    if (const auto* b = std::get_if<Expr::Bin>(&e.payload());
        b != nullptr && b->op == '*')
        return guard_pred(*b->lhs, outer) && guard_pred(*b->rhs, outer);
    if (const auto* n = std::get_if<Expr::Num>(&e.payload()))
        return iverson::Pred::lit(n->value != 0);
    return iverson::Pred::opaque([e](const Assignment& a) { return eval_expr(e, a) != 0; });
}

inline Rat eval_call(const Expr::Call& call, const Assignment& asg) {
    auto arity = [&](std::size_t n) {
        if (call.args.size() != n)
            throw domain_error("function '" + call.name + "' expects " + std::to_string(n) +
                               " argument(s)");
    };
    if (call.name == "binomial") {
        arity(2);
        return Rat(numbers::binomial(to_i64(eval_expr(call.args[0], asg), "binomial"),
                                     to_i64(eval_expr(call.args[1], asg), "binomial")));
    }
    if (call.name == "cycle") {
        arity(2);
        return Rat(numbers::stirling_cycle(to_i64(eval_expr(call.args[0], asg), "cycle"),
                                           to_i64(eval_expr(call.args[1], asg), "cycle")));
    }
    if (call.name == "subset") {
        arity(2);
        return Rat(numbers::stirling_subset(to_i64(eval_expr(call.args[0], asg), "subset"),
                                            to_i64(eval_expr(call.args[1], asg), "subset")));
    }
    if (call.name == "falling") {
        arity(2);
        return analysis::falling(eval_expr(call.args[0], asg),
                                 to_i64(eval_expr(call.args[1], asg), "falling"));
    }
    if (call.name == "rising") {
        arity(2);
        return analysis::rising(eval_expr(call.args[0], asg),
                                to_i64(eval_expr(call.args[1], asg), "rising"));
    }
    if (call.name == "factorial") {
        arity(1);
        return Rat(numbers::factorial(to_i64(eval_expr(call.args[0], asg), "factorial")));
    }
    throw domain_error("unknown function '" + call.name + "'");
}

inline Rat eval_expr(const Expr& e, const Assignment& asg) {
    if (const auto* n = std::get_if<Expr::Num>(&e.payload())) return n->value;
    if (const auto* v = std::get_if<Expr::Var>(&e.payload())) {
        auto it = asg.find(v->name);
        if (it == asg.end()) throw unbound_variable("unbound variable '" + v->name + "'");
        return it->second;
    }
    if (const auto* c = std::get_if<Expr::Call>(&e.payload())) return eval_call(*c, asg);
    if (const auto* b = std::get_if<Expr::Bin>(&e.payload())) {
        if (b->op == '*') {
            // A bracket factor is a strong zero: evaluate bracket factors
            // first and skip everything else if one of them vanishes.
            std::vector<const Expr*> factors;
            auto flatten = [&](auto&& self, const Expr& node) -> void {
                if (const auto* bin = std::get_if<Expr::Bin>(&node.payload());
                    bin != nullptr && bin->op == '*') {
                    self(self, *bin->lhs);
                    self(self, *bin->rhs);
                } else {
                    factors.push_back(&node);
                }
            };
            flatten(flatten, e);
            for (const Expr* f : factors)
                if (const auto* br = std::get_if<Expr::Bracket>(&f->payload()))
                    if (!eval_pred(*br->pred, asg)) return 0;
            Rat out = 1;
            for (const Expr* f : factors)
                if (!std::holds_alternative<Expr::Bracket>(f->payload()))
                    out *= eval_expr(*f, asg);
            return out;
        }
        const Rat l = eval_expr(*b->lhs, asg);
        switch (b->op) {
            case '+': return l + eval_expr(*b->rhs, asg);
            case '-': return l - eval_expr(*b->rhs, asg);
            case '/': {
                const Rat r = eval_expr(*b->rhs, asg);
                if (r == 0) throw pole_error("division by zero");
                return l / r;
            }
            default: {  // '^'
                const std::int64_t k = to_i64(eval_expr(*b->rhs, asg), "exponent");
                return rpow(l, k);
            }
        }
    }
    if (const auto* n = std::get_if<Expr::Neg>(&e.payload())) return -eval_expr(*n->inner, asg);
    if (const auto* br = std::get_if<Expr::Bracket>(&e.payload()))
        return eval_pred(*br->pred, asg) ? 1 : 0;

    const auto& r = std::get<Expr::Reduce>(e.payload());
    const std::shared_ptr<const Expr> body = r.body;
    iverson::SumSpec spec{r.var, guard_pred(*r.guard, asg),
                          [body](const Assignment& a) { return eval_expr(*body, a); },
                          std::nullopt};
    if (r.lo) {
        const Rat lo = eval_expr(*r.lo, asg);
        const Rat hi = eval_expr(*r.hi, asg);
        if (!is_integer(lo) || !is_integer(hi))
            throw domain_error("sum/prod bounds must be integers");
        spec.support = {boost::multiprecision::numerator(lo), boost::multiprecision::numerator(hi)};
    }
    return r.product ? iverson::prod_brackets(spec, asg) : iverson::sum_brackets(spec, asg);
}

}  // namespace detail

inline Rat eval(const Expr& e, const Assignment& bindings = {}) {
    return detail::eval_expr(e, bindings);
}

inline Rat eval(std::string_view text, const Assignment& bindings = {}) {
    return eval(parse(text), bindings);
}

}  // namespace tandem::expr
