#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcsid/combinatorics.hpp"
#include "arcsid/errors.hpp"
#include "arcsid/identities.hpp"
#include "arcsid/qpi2.hpp"
#include "arcsid/rational.hpp"
#include "arcsid/report.hpp"

namespace arcsid {

// ---------------------------------------------------------------------------
// AST. One value-semantic node type; children live in a vector.
//   Integer:  value
//   Variable: name
//   Pi2:      (none)
//   Negate:   children = {operand}
//   Binary:   op in + - * / ^, children = {lhs, rhs}
//   Call:     name in binom/fact/dfact/catalan/trigamma_half, children = args
//   Sum:      name = bound variable, children = {lo, hi, body}
// ---------------------------------------------------------------------------

struct Expr {
    enum class Kind { Integer, Variable, Pi2, Negate, Binary, Call, Sum };

    Kind kind = Kind::Integer;
    BigInt value;
    std::string name;
    char op = 0;
    std::vector<Expr> children;
    source_pos pos;
};

struct IdentityAst {
    Expr lhs;
    Expr rhs;
};

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Integer: return a.value == b.value;
        case Expr::Kind::Variable: return a.name == b.name;
        case Expr::Kind::Pi2: return true;
        case Expr::Kind::Negate:
            return structurally_equal(a.children[0], b.children[0]);
        case Expr::Kind::Binary:
            return a.op == b.op && structurally_equal(a.children[0], b.children[0]) &&
                   structurally_equal(a.children[1], b.children[1]);
        case Expr::Kind::Call: {
            if (a.name != b.name || a.children.size() != b.children.size()) return false;
            for (std::size_t i = 0; i < a.children.size(); ++i) {
                if (!structurally_equal(a.children[i], b.children[i])) return false;
            }
            return true;
        }
        case Expr::Kind::Sum:
            return a.name == b.name &&
                   structurally_equal(a.children[0], b.children[0]) &&
                   structurally_equal(a.children[1], b.children[1]) &&
                   structurally_equal(a.children[2], b.children[2]);
    }
    return false;
}

inline bool structurally_equal(const IdentityAst& a, const IdentityAst& b) {
    return structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
}

// ---------------------------------------------------------------------------
// Lexer.
// ---------------------------------------------------------------------------

namespace dsl_detail {

enum class Tok {
    End, Int, Ident, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, Comma, EqEq, Assign, DotDot
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    BigInt value;
    source_pos pos;
};

inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
    Lexer(std::string text, source_pos start) : text_(std::move(text)), pos_(start) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.pos = pos_;
        if (i_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = text_[i_];
        if (is_digit(c)) {
            std::size_t start = i_;
            while (i_ < text_.size() && is_digit(text_[i_])) advance();
            t.kind = Tok::Int;
            t.text = text_.substr(start, i_ - start);
            t.value = BigInt(t.text);
            return t;
        }
        if (is_ident_start(c)) {
            std::size_t start = i_;
            while (i_ < text_.size() && is_ident_char(text_[i_])) advance();
            t.kind = Tok::Ident;
            t.text = text_.substr(start, i_ - start);
            return t;
        }
        switch (c) {
            case '+': advance(); t.kind = Tok::Plus; t.text = "+"; return t;
            case '-': advance(); t.kind = Tok::Minus; t.text = "-"; return t;
            case '*': advance(); t.kind = Tok::Star; t.text = "*"; return t;
            case '/': advance(); t.kind = Tok::Slash; t.text = "/"; return t;
            case '^': advance(); t.kind = Tok::Caret; t.text = "^"; return t;
            case '(': advance(); t.kind = Tok::LParen; t.text = "("; return t;
            case ')': advance(); t.kind = Tok::RParen; t.text = ")"; return t;
            case ',': advance(); t.kind = Tok::Comma; t.text = ","; return t;
            case '=':
                advance();
                if (i_ < text_.size() && text_[i_] == '=') {
                    advance();
                    t.kind = Tok::EqEq;
                    t.text = "==";
                } else {
                    t.kind = Tok::Assign;
                    t.text = "=";
                }
                return t;
            case '.':
                advance();
                if (i_ < text_.size() && text_[i_] == '.') {
                    advance();
                    t.kind = Tok::DotDot;
                    t.text = "..";
                    return t;
                }
                throw parse_error("unexpected character '.'", t.pos);
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", t.pos);
        }
    }

private:
    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    void skip_space_and_comments() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string text_;
    std::size_t i_ = 0;
    source_pos pos_;
};

inline bool is_function_name(const std::string& s) {
    return s == "binom" || s == "fact" || s == "dfact" || s == "catalan" ||
           s == "trigamma_half";
}
inline bool is_reserved(const std::string& s) {
    return is_function_name(s) || s == "sum" || s == "pi2";
}
inline std::size_t function_arity(const std::string& s) { return s == "binom" ? 2 : 1; }

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace-insensitive, "#" comments to end of line):
//   identity = expr "==" expr
//   expr     = term { ("+"|"-") term }
//   term     = factor { ("*"|"/") factor }
//   factor   = ["-"] power
//   power    = atom [ "^" factor ]
//   atom     = integer | ident | "pi2" | "(" expr ")" | call
//   call     = fn "(" expr {"," expr} ")" | "sum" "(" ident "=" expr ".." expr "," expr ")"
// Unbound variables (anything but n and enclosing sum binders) are rejected
// here, not at evaluation time.
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(const std::string& text, source_pos start) : lex_(text, start) {
        cur_ = lex_.next();
        scope_.push_back("n");
    }

    IdentityAst parse_identity() {
        IdentityAst ast;
        ast.lhs = parse_expr();
        if (cur_.kind != Tok::EqEq) {
            if (cur_.kind == Tok::Assign) {
                throw parse_error("expected '==' (single '=' is only the sum binder)",
                                  cur_.pos);
            }
            throw parse_error("expected '=='", cur_.pos);
        }
        consume();
        ast.rhs = parse_expr();
        if (cur_.kind != Tok::End) {
            throw parse_error("unexpected trailing input '" + cur_.text + "'", cur_.pos);
        }
        return ast;
    }

    Expr parse_single_expr() {
        Expr e = parse_expr();
        if (cur_.kind != Tok::End) {
            throw parse_error("unexpected trailing input '" + cur_.text + "'", cur_.pos);
        }
        return e;
    }

private:
    static constexpr int kMaxDepth = 1000;

    struct DepthGuard {
        explicit DepthGuard(Parser& p, source_pos pos) : p_(p) {
            if (++p_.depth_ > kMaxDepth) {
                throw parse_error("expression too deeply nested", pos);
            }
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    void consume() { cur_ = lex_.next(); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            throw parse_error(std::string("expected ") + what +
                                  (cur_.kind == Tok::End ? " at end of input"
                                                         : ", got '" + cur_.text + "'"),
                              cur_.pos);
        }
        consume();
    }

    bool in_scope(const std::string& name) const {
        for (const auto& s : scope_) {
            if (s == name) return true;
        }
        return false;
    }

    Expr parse_expr() {
        DepthGuard g(*this, cur_.pos);
        Expr lhs = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            char op = cur_.kind == Tok::Plus ? '+' : '-';
            source_pos pos = cur_.pos;
            consume();
            Expr rhs = parse_term();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = op;
            node.pos = pos;
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parse_term() {
        DepthGuard g(*this, cur_.pos);
        Expr lhs = parse_factor();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            char op = cur_.kind == Tok::Star ? '*' : '/';
            source_pos pos = cur_.pos;
            consume();
            Expr rhs = parse_factor();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = op;
            node.pos = pos;
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parse_factor() {
        DepthGuard g(*this, cur_.pos);
        if (cur_.kind == Tok::Minus) {
            source_pos pos = cur_.pos;
            consume();
            Expr node;
            node.kind = Expr::Kind::Negate;
            node.pos = pos;
            node.children.push_back(parse_power());
            return node;
        }
        return parse_power();
    }

    Expr parse_power() {
        DepthGuard g(*this, cur_.pos);
        Expr base = parse_atom();
        if (cur_.kind == Tok::Caret) {
            source_pos pos = cur_.pos;
            consume();
            Expr node;
            node.kind = Expr::Kind::Binary;
            node.op = '^';
            node.pos = pos;
            node.children.push_back(std::move(base));
            node.children.push_back(parse_factor());
            return node;
        }
        return base;
    }

    Expr parse_atom() {
        DepthGuard g(*this, cur_.pos);
        switch (cur_.kind) {
            case Tok::Int: {
                Expr node;
                node.kind = Expr::Kind::Integer;
                node.value = cur_.value;
                node.pos = cur_.pos;
                consume();
                return node;
            }
            case Tok::LParen: {
                consume();
                Expr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident: {
                std::string name = cur_.text;
                source_pos pos = cur_.pos;
                if (name == "pi2") {
                    Expr node;
                    node.kind = Expr::Kind::Pi2;
                    node.pos = pos;
                    consume();
                    return node;
                }
                if (name == "sum") {
                    consume();
                    return parse_sum(pos);
                }
                if (is_function_name(name)) {
                    consume();
                    return parse_call(name, pos);
                }
                if (!in_scope(name)) {
                    throw parse_error("unbound variable '" + name + "'", pos);
                }
                Expr node;
                node.kind = Expr::Kind::Variable;
                node.name = name;
                node.pos = pos;
                consume();
                return node;
            }
            case Tok::End:
                throw parse_error("expected expression at end of input", cur_.pos);
            default:
                throw parse_error("expected expression, got '" + cur_.text + "'",
                                  cur_.pos);
        }
    }

    Expr parse_call(const std::string& name, source_pos pos) {
        expect(Tok::LParen, "'(' after function name");
        Expr node;
        node.kind = Expr::Kind::Call;
        node.name = name;
        node.pos = pos;
        node.children.push_back(parse_expr());
        while (cur_.kind == Tok::Comma) {
            consume();
            node.children.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        std::size_t want = function_arity(name);
        if (node.children.size() != want) {
            throw parse_error(name + " expects " + std::to_string(want) +
                                  (want == 1 ? " argument, got " : " arguments, got ") +
                                  std::to_string(node.children.size()),
                              pos);
        }
        return node;
    }

    Expr parse_sum(source_pos pos) {
        expect(Tok::LParen, "'(' after sum");
        if (cur_.kind != Tok::Ident) {
            throw parse_error("expected sum variable name", cur_.pos);
        }
        std::string binder = cur_.text;
        if (is_reserved(binder)) {
            throw parse_error("reserved word '" + binder + "' cannot be a sum variable",
                              cur_.pos);
        }
        consume();
        expect(Tok::Assign, "'=' after sum variable");
        Expr lo = parse_expr();  // bounds see only the outer scope
        expect(Tok::DotDot, "'..'");
        Expr hi = parse_expr();
        expect(Tok::Comma, "',' before sum body");
        scope_.push_back(binder);
        Expr body = parse_expr();
        scope_.pop_back();
        expect(Tok::RParen, "')'");
        Expr node;
        node.kind = Expr::Kind::Sum;
        node.name = binder;
        node.pos = pos;
        node.children.push_back(std::move(lo));
        node.children.push_back(std::move(hi));
        node.children.push_back(std::move(body));
        return node;
    }

    Lexer lex_;
    Token cur_;
    std::vector<std::string> scope_;
    int depth_ = 0;
};

}  // namespace dsl_detail

inline IdentityAst parse_identity(const std::string& text,
                                  source_pos start = source_pos{1, 1}) {
    dsl_detail::Parser p(text, start);
    return p.parse_identity();
}

// ---------------------------------------------------------------------------
// Renderer. Canonical text whose reparse is structurally identical. Parens
// appear exactly where the grammar would otherwise bind differently:
// precedence levels are +- (1), */ (2), unary - (3), ^ (4), atoms (5); a
// child is parenthesized when its level is below what its slot requires.
// ---------------------------------------------------------------------------

namespace dsl_detail {

inline int precedence_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Binary:
            if (e.op == '+' || e.op == '-') return 1;
            if (e.op == '*' || e.op == '/') return 2;
            return 4;  // '^'
        case Expr::Kind::Negate: return 3;
        default: return 5;
    }
}

inline void render_to(const Expr& e, std::string& out);

inline void render_child(const Expr& child, int min_level, std::string& out) {
    if (precedence_level(child) < min_level) {
        out += '(';
        render_to(child, out);
        out += ')';
    } else {
        render_to(child, out);
    }
}

inline void render_to(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Integer:
            out += e.value.str();
            return;
        case Expr::Kind::Variable:
            out += e.name;
            return;
        case Expr::Kind::Pi2:
            out += "pi2";
            return;
        case Expr::Kind::Negate:
            out += '-';
            render_child(e.children[0], 4, out);
            return;
        case Expr::Kind::Binary: {
            switch (e.op) {
                case '+':
                case '-':
                    render_child(e.children[0], 1, out);
                    out += ' ';
                    out += e.op;
                    out += ' ';
                    render_child(e.children[1], 2, out);
                    return;
                case '*':
                case '/':
                    render_child(e.children[0], 2, out);
                    out += e.op;
                    render_child(e.children[1], 3, out);
                    return;
                default:  // '^'
                    render_child(e.children[0], 5, out);
                    out += '^';
                    render_child(e.children[1], 3, out);
                    return;
            }
        }
        case Expr::Kind::Call: {
            out += e.name;
            out += '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i > 0) out += ", ";
                render_to(e.children[i], out);
            }
            out += ')';
            return;
        }
        case Expr::Kind::Sum: {
            out += "sum(";
            out += e.name;
            out += '=';
            render_to(e.children[0], out);
            out += "..";
            render_to(e.children[1], out);
            out += ", ";
            render_to(e.children[2], out);
            out += ')';
            return;
        }
    }
}

}  // namespace dsl_detail

inline std::string render(const Expr& e) {
    std::string out;
    dsl_detail::render_to(e, out);
    return out;
}

inline std::string render(const IdentityAst& ast) {
    return render(ast.lhs) + " == " + render(ast.rhs);
}

// ---------------------------------------------------------------------------
// Evaluator. Values live in QPi2; variables hold integers. Resource guards
// (documented limits, each an eval_error): |exponent| <= 1e6, sum length
// <= 1e7 terms, |function argument| <= 1e6.
// ---------------------------------------------------------------------------

using Env = std::map<std::string, BigInt>;

namespace dsl_detail {

constexpr long long kMaxExponent = 1'000'000;
constexpr long long kMaxSumLength = 10'000'000;
constexpr long long kMaxFunctionArg = 1'000'000;

[[noreturn]] inline void fail(const std::string& msg, const Expr& e) {
    throw eval_error(msg, render(e), e.pos);
}

// The node's value must be a plain integer within |limit|.
inline long long integer_operand(const QPi2& v, const Expr& node, const char* what,
                                 long long limit) {
    if (!v.is_rational() || !v.rational_part().is_integer()) {
        fail(std::string("non-integer ") + what + " (value " + to_string(v) + ")", node);
    }
    BigInt n = v.rational_part().num();
    if (n > limit || n < -limit) {
        fail(std::string(what) + " magnitude exceeds limit " + std::to_string(limit) +
                 " (value " + n.str() + ")",
             node);
    }
    return n.convert_to<long long>();
}

inline QPi2 evaluate_node(const Expr& e, const Env& env);

inline QPi2 evaluate_call(const Expr& e, const Env& env) {
    std::vector<long long> args;
    args.reserve(e.children.size());
    for (const auto& child : e.children) {
        args.push_back(integer_operand(evaluate_node(child, env), e,
                                       "function argument", kMaxFunctionArg));
    }
    try {
        if (e.name == "binom") return QPi2(Rat(binomial(args[0], args[1])));
        if (e.name == "fact") return QPi2(Rat(factorial(args[0])));
        if (e.name == "dfact") return QPi2(Rat(double_factorial(args[0])));
        if (e.name == "catalan") return QPi2(Rat(catalan(args[0])));
        return trigamma_half_integer(args[0]);  // trigamma_half
    } catch (const consistency_error&) {
        throw;
    } catch (const std::exception& ex) {
        fail(ex.what(), e);
    }
}

inline QPi2 evaluate_pow(const Expr& e, const Env& env) {
    QPi2 base = evaluate_node(e.children[0], env);
    long long exp =
        integer_operand(evaluate_node(e.children[1], env), e, "exponent", kMaxExponent);
    if (base.is_rational()) {
        if (exp < 0 && base.rational_part().is_zero()) {
            fail("zero raised to negative exponent " + std::to_string(exp), e);
        }
        return QPi2(pow(base.rational_part(), exp));
    }
    if (exp == 0) return QPi2(Rat(1));
    if (exp == 1) return base;
    if (exp < 0) fail("negative exponent requires a rational base", e);
    fail("degree overflow: raising a pi^2 value to power " + std::to_string(exp) +
             " leaves the pi^2 space",
         e);
}

inline QPi2 evaluate_sum(const Expr& e, const Env& env) {
    QPi2 lo_v = evaluate_node(e.children[0], env);
    QPi2 hi_v = evaluate_node(e.children[1], env);
    auto bound = [&](const QPi2& v) -> BigInt {
        if (!v.is_rational() || !v.rational_part().is_integer()) {
            fail("non-integer sum bound (value " + to_string(v) + ")", e);
        }
        return v.rational_part().num();
    };
    BigInt lo = bound(lo_v);
    BigInt hi = bound(hi_v);
    if (lo > hi) return QPi2(Rat(0));  // empty sum
    if (hi - lo + 1 > kMaxSumLength) {
        fail("sum length exceeds limit " + std::to_string(kMaxSumLength), e);
    }
    QPi2 acc;
    Env inner = env;
    for (BigInt k = lo; k <= hi; ++k) {
        inner[e.name] = k;
        acc += evaluate_node(e.children[2], inner);
    }
    return acc;
}

inline QPi2 evaluate_node(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Integer:
            return QPi2(Rat(e.value));
        case Expr::Kind::Variable: {
            auto it = env.find(e.name);
            if (it == env.end()) fail("unbound variable '" + e.name + "'", e);
            return QPi2(Rat(it->second));
        }
        case Expr::Kind::Pi2:
            return QPi2::pi2();
        case Expr::Kind::Negate:
            return -evaluate_node(e.children[0], env);
        case Expr::Kind::Binary: {
            if (e.op == '^') return evaluate_pow(e, env);
            QPi2 lhs = evaluate_node(e.children[0], env);
            QPi2 rhs = evaluate_node(e.children[1], env);
            switch (e.op) {
                case '+': return lhs + rhs;
                case '-': return lhs - rhs;
                case '*':
                    try {
                        return lhs * rhs;
                    } catch (const arith_error& ex) {
                        fail(ex.what(), e);
                    }
                default: {  // '/'
                    if (!rhs.is_rational()) {
                        fail("division by a value with a pi^2 component (" +
                                 to_string(rhs) + ")",
                             e);
                    }
                    if (rhs.rational_part().is_zero()) fail("division by zero", e);
                    return lhs / rhs.rational_part();
                }
            }
        }
        case Expr::Kind::Call:
            return evaluate_call(e, env);
        case Expr::Kind::Sum:
            return evaluate_sum(e, env);
    }
    fail("unreachable expression kind", e);
}

}  // namespace dsl_detail

inline QPi2 evaluate(const Expr& e, const Env& env) {
    return dsl_detail::evaluate_node(e, env);
}

inline QPi2 evaluate(const Expr& e, long long n) {
    Env env;
    env["n"] = BigInt(n);
    return dsl_detail::evaluate_node(e, env);
}

// Sweep an identity AST over [n_lo, n_hi]; same semantics as
// identities verify_range, except that evaluation errors at some n count as a
// failure at that n (with the error text in place of the failing value).
inline VerifyReport verify_ast(const IdentityAst& ast, long long n_lo, long long n_hi,
                               const VerifyOptions& opts = {},
                               const std::string& label = "dsl") {
    PointCheck check = [&ast](long long n) -> std::optional<FirstFailure> {
        Env env;
        env["n"] = BigInt(n);
        std::string lhs_s, rhs_s;
        bool ok = true;
        std::optional<QPi2> lhs_v, rhs_v;
        try {
            lhs_v = evaluate(ast.lhs, env);
            lhs_s = to_string(*lhs_v);
        } catch (const error& ex) {
            lhs_s = std::string("error: ") + ex.what();
            ok = false;
        }
        try {
            rhs_v = evaluate(ast.rhs, env);
            rhs_s = to_string(*rhs_v);
        } catch (const error& ex) {
            rhs_s = std::string("error: ") + ex.what();
            ok = false;
        }
        if (ok && *lhs_v == *rhs_v) return std::nullopt;
        return FirstFailure{n, lhs_s, rhs_s};
    };
    return verify_points(label, std::nullopt, check, n_lo, n_hi, opts);
}

// ---------------------------------------------------------------------------
// Identity files: one identity per line, optional "name:" prefix, blank lines
// and "#" comments ignored. Reported positions use file coordinates.
// ---------------------------------------------------------------------------

struct NamedIdentity {
    std::string name;
    std::string text;
    IdentityAst ast;
};

inline std::vector<NamedIdentity> parse_identity_file(const std::string& content) {
    std::vector<NamedIdentity> out;
    std::size_t line_start = 0;
    int line_no = 0;
    while (line_start <= content.size()) {
        std::size_t nl = content.find('\n', line_start);
        std::string line = content.substr(
            line_start, nl == std::string::npos ? std::string::npos : nl - line_start);
        ++line_no;

        std::size_t hash = line.find('#');
        std::string effective = hash == std::string::npos ? line : line.substr(0, hash);
        if (effective.find_first_not_of(" \t\r") != std::string::npos) {
            // Optional "name:" prefix: identifier (dots and dashes allowed in
            // file-level names) followed by ':'. The language itself has no
            // ':', so the split is unambiguous.
            std::string name = "line" + std::to_string(line_no);
            std::string text = effective;
            int col = 1;
            std::size_t i = effective.find_first_not_of(" \t");
            if (dsl_detail::is_ident_start(effective[i])) {
                std::size_t j = i;
                while (j < effective.size() &&
                       (dsl_detail::is_ident_char(effective[j]) || effective[j] == '.' ||
                        effective[j] == '-')) {
                    ++j;
                }
                std::size_t k = j;
                while (k < effective.size() &&
                       (effective[k] == ' ' || effective[k] == '\t')) {
                    ++k;
                }
                if (k < effective.size() && effective[k] == ':') {
                    name = effective.substr(i, j - i);
                    text = effective.substr(k + 1);
                    col = static_cast<int>(k) + 2;  // 1-based column after the ':'
                }
            }
            NamedIdentity entry;
            entry.name = name;
            entry.text = text;
            entry.ast = parse_identity(text, source_pos{line_no, col});
            out.push_back(std::move(entry));
        }

        if (nl == std::string::npos) break;
        line_start = nl + 1;
    }
    return out;
}

}  // namespace arcsid
