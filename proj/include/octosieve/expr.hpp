#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "octosieve/algebra.hpp"
#include "octosieve/errors.hpp"
#include "octosieve/octonion.hpp"

namespace octosieve {

/**
 * Immutable polynomial expression over octonion-valued variables.
 *
 * Products keep their operand order and grouping, so "(a*b)*c" and
 * "a*(b*c)" are different trees and evaluate differently. Subtrees are
 * shared; copying an Expr is cheap.
 */
class Expr {
public:
    enum class Kind { var, constant, add, sub, neg, mul, conj };

    static Expr var(std::string name) {
        if (name.empty()) throw PreconditionViolation("variable name must be nonempty");
        auto n = std::make_shared<Node>();
        n->kind = Kind::var;
        n->name = std::move(name);
        return Expr(std::move(n));
    }
    static Expr constant(double v) {
        if (!std::isfinite(v)) throw PreconditionViolation("constant must be finite");
        auto n = std::make_shared<Node>();
        n->kind = Kind::constant;
        n->value = v;
        return Expr(std::move(n));
    }
    static Expr add(Expr l, Expr r) { return binary(Kind::add, std::move(l), std::move(r)); }
    static Expr sub(Expr l, Expr r) { return binary(Kind::sub, std::move(l), std::move(r)); }
    static Expr mul(Expr l, Expr r) { return binary(Kind::mul, std::move(l), std::move(r)); }
    static Expr neg(Expr x) { return unary(Kind::neg, std::move(x)); }
    static Expr conj(Expr x) { return unary(Kind::conj, std::move(x)); }

    [[nodiscard]] Kind kind() const { return node_->kind; }
    [[nodiscard]] const std::string& name() const { return node_->name; }
    [[nodiscard]] double value() const { return node_->value; }
    /// Operand of neg/conj, left operand of binary nodes.
    [[nodiscard]] const Expr& lhs() const { return *node_->lhs; }
    [[nodiscard]] const Expr& rhs() const { return *node_->rhs; }

    [[nodiscard]] bool is_binary() const {
        return kind() == Kind::add || kind() == Kind::sub || kind() == Kind::mul;
    }
    [[nodiscard]] bool is_unary() const { return kind() == Kind::neg || kind() == Kind::conj; }

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case Kind::var: return a.name() == b.name();
            case Kind::constant: return a.value() == b.value();
            case Kind::neg:
            case Kind::conj: return a.lhs() == b.lhs();
            default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
        }
    }

private:
    struct Node {
        Kind kind = Kind::constant;
        std::string name;
        double value = 0.0;
        std::shared_ptr<const Expr> lhs;
        std::shared_ptr<const Expr> rhs;
    };

    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Expr binary(Kind k, Expr l, Expr r) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->lhs = std::make_shared<const Expr>(std::move(l));
        n->rhs = std::make_shared<const Expr>(std::move(r));
        return Expr(std::move(n));
    }
    static Expr unary(Kind k, Expr x) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->lhs = std::make_shared<const Expr>(std::move(x));
        return Expr(std::move(n));
    }

    std::shared_ptr<const Node> node_;
};

/// Variable bindings; ordered so iteration (and output) is deterministic.
using Assignment = std::map<std::string, Octonion, std::less<>>;

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := IDENT | NUMBER | '(' expr ')' | '-' factor | 'conj' '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : src_(text) {}

    Expr parse() {
        skip_space();
        if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
        Expr e = expr();
        skip_space();
        if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

private:
    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::add(std::move(lhs), term());
            } else if (accept('-')) {
                lhs = Expr::sub(std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (accept('*')) lhs = Expr::mul(std::move(lhs), factor());
        return lhs;
    }

    Expr factor() {
        skip_space();
        if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return Expr::neg(factor());
        }
        if (is_digit(c) || c == '.') return number();
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (name == "conj") {
                expect('(');
                Expr inner = expr();
                expect(')');
                return Expr::conj(std::move(inner));
            }
            return Expr::var(std::move(name));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && is_digit(src_[p])) {
                while (p < src_.size() && is_digit(src_[p])) ++p;
                pos_ = p;
            }
        }
        double v = 0.0;
        const char* first = src_.data() + start;
        const char* last = src_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
            throw ParseError("malformed number", start);
        }
        return Expr::constant(v);
    }

    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r')) {
            ++pos_;
        }
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        default: return 3;
    }
}

inline void print(const Expr& e, std::string& out);

inline void print_wrapped(const Expr& e, bool wrap, std::string& out) {
    if (wrap) out += '(';
    print(e, out);
    if (wrap) out += ')';
}

inline void print(const Expr& e, std::string& out) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::var: out += e.name(); return;
        case K::constant: {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, e.value());
            out.append(buf, res.ptr);
            return;
        }
        case K::neg:
            out += '-';
            print_wrapped(e.lhs(), e.lhs().is_binary(), out);
            return;
        case K::conj:
            out += "conj(";
            print(e.lhs(), out);
            out += ')';
            return;
        default: break;
    }
    const int p = precedence(e);
    // Left-associative: only the right operand needs parentheses at equal precedence.
    print_wrapped(e.lhs(), precedence(e.lhs()) < p, out);
    out += e.kind() == K::add ? " + " : e.kind() == K::sub ? " - " : " * ";
    print_wrapped(e.rhs(), precedence(e.rhs()) <= p, out);
}

inline void collect_vars(const Expr& e, std::vector<std::string>& out) {
    switch (e.kind()) {
        case Expr::Kind::var:
            for (const auto& n : out) {
                if (n == e.name()) return;
            }
            out.push_back(e.name());
            return;
        case Expr::Kind::constant: return;
        default:
            collect_vars(e.lhs(), out);
            if (e.is_binary()) collect_vars(e.rhs(), out);
    }
}

}  // namespace detail

[[nodiscard]] inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Canonical text with minimal parentheses; parse(to_string(e)) == e for
/// every parsed expression.
[[nodiscard]] inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print(e, out);
    return out;
}

/// Variable names in order of first occurrence, left to right.
[[nodiscard]] inline std::vector<std::string> free_vars(const Expr& e) {
    std::vector<std::string> out;
    detail::collect_vars(e, out);
    return out;
}

/// Evaluates `e` with every product taken in rule n.
[[nodiscard]] inline Octonion eval(const Expr& e, const Assignment& env, AlgebraId n) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::var: {
            const auto it = env.find(e.name());
            if (it == env.end()) throw UnboundVariable(e.name());
            return it->second;
        }
        case K::constant: return Octonion::real(e.value());
        case K::add: return eval(e.lhs(), env, n) + eval(e.rhs(), env, n);
        case K::sub: return eval(e.lhs(), env, n) - eval(e.rhs(), env, n);
        case K::neg: return -eval(e.lhs(), env, n);
        case K::conj: return conjugate(eval(e.lhs(), env, n));
        case K::mul: return multiply(eval(e.lhs(), env, n), eval(e.rhs(), env, n), n);
    }
    return {};
}

}  // namespace octosieve
