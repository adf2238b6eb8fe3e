#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "arcsid/dsl.hpp"
#include "arcsid/dsl_corpus.hpp"
#include "oracles.hpp"

using arcsid::Env;
using arcsid::Expr;
using arcsid::IdentityAst;
using arcsid::QPi2;
using arcsid::Rat;
using arcsid::BigInt;

namespace {

Expr expr(const std::string& text) {
    return arcsid::parse_identity(text + " == 0").lhs;
}

QPi2 ev(const std::string& text, long long n = 0) {
    return arcsid::evaluate(expr(text), n);
}

Rat q(long long num, long long den) { return Rat(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("precedence and associativity", "[dsl]") {
    CHECK(ev("1 + 2*3") == QPi2(Rat(7)));
    CHECK(ev("(1 + 2)*3") == QPi2(Rat(9)));
    CHECK(ev("2^2*3") == QPi2(Rat(12)));
    CHECK(ev("-2^2") == QPi2(Rat(-4)));      // unary minus binds looser than ^
    CHECK(ev("(-2)^2") == QPi2(Rat(4)));
    CHECK(ev("2^3^2") == QPi2(Rat(512)));    // ^ is right-associative
    CHECK(ev("2^-1") == QPi2(q(1, 2)));
    CHECK(ev("2 - 3 - 4") == QPi2(Rat(-5)));  // +,- left-associative
    CHECK(ev("12/3/2") == QPi2(Rat(2)));
    CHECK(ev("-(1 + 2)") == QPi2(Rat(-3)));
    CHECK(ev("2*n + 1", 5) == QPi2(Rat(11)));
    CHECK(ev("16^n", 2) == QPi2(Rat(256)));
    CHECK(ev("0^0") == QPi2(Rat(1)));
    CHECK(ev("(1/2)^-2") == QPi2(Rat(4)));
}

TEST_CASE("rendering is canonical and minimally parenthesized", "[dsl]") {
    CHECK(arcsid::render(expr("1+2*3")) == "1 + 2*3");
    CHECK(arcsid::render(expr("(1+2)*3")) == "(1 + 2)*3");
    CHECK(arcsid::render(expr("2 - 3 - 4")) == "2 - 3 - 4");
    CHECK(arcsid::render(expr("2 - (3 - 4)")) == "2 - (3 - 4)");
    CHECK(arcsid::render(expr("n/n/n")) == "n/n/n");
    CHECK(arcsid::render(expr("n/(n/n)")) == "n/(n/n)");
    CHECK(arcsid::render(expr("-2^2")) == "-2^2");
    CHECK(arcsid::render(expr("(-2)^2")) == "(-2)^2");
    CHECK(arcsid::render(expr("2^(n+1)")) == "2^(n + 1)");
    CHECK(arcsid::render(expr("2^-1")) == "2^-1");
    CHECK(arcsid::render(expr("sum( k = 0 .. n , k )")) == "sum(k=0..n, k)");
    CHECK(arcsid::render(expr("binom( 2*n , n )")) == "binom(2*n, n)");
    CHECK(arcsid::render(arcsid::parse_identity("n==n")) == "n == n");

    // pi2 renders as itself.
    CHECK(arcsid::render(expr("pi2 - 2*trigamma_half(n+1)")) ==
          "pi2 - 2*trigamma_half(n + 1)");
}

TEST_CASE("round-trip: parse, render, reparse is structurally stable", "[dsl]") {
    for (const auto& entry : arcsid::dsl_corpus()) {
        INFO(entry.name);
        IdentityAst ast = arcsid::parse_identity(entry.text);
        std::string rendered = arcsid::render(ast);
        IdentityAst again = arcsid::parse_identity(rendered);
        CHECK(arcsid::structurally_equal(ast, again));
        CHECK(arcsid::render(again) == rendered);  // canonical fixed point
    }
}

TEST_CASE("binder names are part of the structure", "[dsl]") {
    auto a = arcsid::parse_identity("sum(k=0..n, k) == n");
    auto b = arcsid::parse_identity("sum(j=0..n, j) == n");
    CHECK_FALSE(arcsid::structurally_equal(a, b));
    CHECK(arcsid::structurally_equal(a, a));
}

TEST_CASE("parse errors carry positions", "[dsl]") {
    using arcsid::parse_error;

    try {
        arcsid::parse_identity("n == sum(k=0..n, j)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("unbound variable 'j'"));
        CHECK(e.pos().line == 1);
        CHECK(e.pos().col == 18);
    }

    try {
        arcsid::parse_identity("n = n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK_THAT(e.what(),
                   Catch::Matchers::ContainsSubstring("single '=' is only the sum binder"));
        CHECK(e.pos().col == 3);
    }

    CHECK_THROWS_WITH(arcsid::parse_identity("n == sum(pi2=0..n, 1)"),
                      Catch::Matchers::ContainsSubstring("reserved word 'pi2'"));
    CHECK_THROWS_WITH(arcsid::parse_identity("binom(n) == 1"),
                      Catch::Matchers::ContainsSubstring("binom expects 2 arguments, got 1"));
    CHECK_THROWS_WITH(arcsid::parse_identity("fact(n, n) == 1"),
                      Catch::Matchers::ContainsSubstring("fact expects 1 argument, got 2"));
    CHECK_THROWS_WITH(arcsid::parse_identity("n == n n"),
                      Catch::Matchers::ContainsSubstring("unexpected trailing input 'n'"));
    CHECK_THROWS_WITH(arcsid::parse_identity("n == $"),
                      Catch::Matchers::ContainsSubstring("unexpected character '$'"));
    CHECK_THROWS_WITH(arcsid::parse_identity("n == 1.5"),
                      Catch::Matchers::ContainsSubstring("unexpected character '.'"));
    CHECK_THROWS_WITH(arcsid::parse_identity("n == sum(k=0..k, 1)"),
                      Catch::Matchers::ContainsSubstring("unbound variable 'k'"));

    // Nesting depth is bounded.
    std::string deep = std::string(400, '(') + "n" + std::string(400, ')') + " == n";
    CHECK_THROWS_WITH(arcsid::parse_identity(deep),
                      Catch::Matchers::ContainsSubstring("too deeply nested"));
}

TEST_CASE("sum evaluation: scope, shadowing, emptiness", "[dsl]") {
    CHECK(ev("sum(k=0..n, k)", 4) == QPi2(Rat(10)));
    CHECK(ev("sum(k=1..0, fact(20))") == QPi2(Rat(0)));   // empty range
    CHECK(ev("sum(k=-2..2, k)") == QPi2(Rat(0)));
    CHECK(ev("sum(n=0..2, n)", 99) == QPi2(Rat(3)));      // binder shadows n
    CHECK(ev("sum(i=0..2, sum(j=0..i, j))") == QPi2(Rat(4)));
    CHECK(ev("sum(k=0..2, pi2)") == QPi2(Rat(0)) + QPi2::pi2() * QPi2(Rat(3)));
    CHECK(ev("sum(k=0..n/2, 1)", 4) == QPi2(Rat(3)));
}

TEST_CASE("evaluation spot values match the hand-coded identities", "[dsl]") {
    Expr lhs21 = arcsid::parse_identity(arcsid::dsl_corpus()[0].text).lhs;
    CHECK(arcsid::evaluate(lhs21, 1) == QPi2(q(8, 3)));
    CHECK(arcsid::evaluate(lhs21, 2) == QPi2(q(128, 15)));

    CHECK(ev("pi2 - 2*trigamma_half(1)") == QPi2(Rat(8)));
    CHECK(ev("pi2") == QPi2::pi2());
    CHECK(ev("trigamma_half(0)") == QPi2(Rat(0), q(1, 2)));
    CHECK(ev("catalan(5)") == QPi2(Rat(42)));
    CHECK(ev("dfact(7)") == QPi2(Rat(105)));
    CHECK(ev("binom(2*n, n)", 4) == QPi2(Rat(70)));
}

TEST_CASE("evaluation errors: arithmetic", "[dsl]") {
    using arcsid::eval_error;
    CHECK_THROWS_AS(ev("1/(n - 3)", 3), eval_error);
    CHECK_THROWS_WITH(ev("1/(n - 3)", 3),
                      Catch::Matchers::ContainsSubstring("division by zero") &&
                          Catch::Matchers::ContainsSubstring("1/(n - 3)"));
    CHECK_THROWS_WITH(ev("2^(1/2)"),
                      Catch::Matchers::ContainsSubstring("non-integer exponent"));
    CHECK_THROWS_WITH(ev("pi2*pi2"),
                      Catch::Matchers::ContainsSubstring("degree overflow"));
    CHECK_THROWS_WITH(ev("pi2^2"),
                      Catch::Matchers::ContainsSubstring("degree overflow"));
    CHECK_THROWS_WITH(ev("pi2^-1"),
                      Catch::Matchers::ContainsSubstring("requires a rational base"));
    CHECK(ev("pi2^1") == QPi2::pi2());
    CHECK(ev("pi2^0") == QPi2(Rat(1)));
    CHECK_THROWS_WITH(ev("0^-1"),
                      Catch::Matchers::ContainsSubstring("zero raised to negative exponent"));
    CHECK_THROWS_WITH(ev("1/pi2"),
                      Catch::Matchers::ContainsSubstring("pi^2 component"));
    CHECK_THROWS_AS(ev("fact(-1)"), eval_error);
    CHECK_THROWS_AS(ev("catalan(-2)"), eval_error);
    CHECK_THROWS_AS(ev("dfact(-2)"), eval_error);
    CHECK_THROWS_AS(ev("trigamma_half(-1)"), eval_error);
    CHECK_THROWS_WITH(ev("sum(k=0..n/2, 1)", 3),
                      Catch::Matchers::ContainsSubstring("non-integer sum bound"));

    Env empty;
    CHECK_THROWS_WITH(arcsid::evaluate(expr("n"), empty),
                      Catch::Matchers::ContainsSubstring("unbound variable 'n'"));
}

TEST_CASE("evaluation errors: resource guards", "[dsl]") {
    using arcsid::eval_error;
    CHECK_THROWS_WITH(ev("2^2000000"),
                      Catch::Matchers::ContainsSubstring("exponent magnitude exceeds limit"));
    CHECK_THROWS_WITH(ev("sum(k=0..20000000, 1)"),
                      Catch::Matchers::ContainsSubstring("sum length exceeds limit"));
    CHECK_THROWS_WITH(ev("fact(2000000)"),
                      Catch::Matchers::ContainsSubstring(
                          "function argument magnitude exceeds limit"));
    // Just inside the caps is fine.
    CHECK(ev("2^20") == QPi2(Rat(1048576)));
    CHECK(ev("sum(k=1..100000, 1)") == QPi2(Rat(100000)));
}

TEST_CASE("AST sweeps report pass, mismatch, and evaluation failure", "[dsl]") {
    IdentityAst good = arcsid::parse_identity(arcsid::dsl_corpus()[0].text);
    auto rep = arcsid::verify_ast(good, 0, 50, {}, "thm2.1");
    CHECK(rep.identity == "thm2.1");
    CHECK(rep.passed);
    CHECK(rep.n_lo == 0);
    CHECK(rep.n_hi == 50);

    IdentityAst wrong = arcsid::parse_identity(
        "sum(k=0..n, binom(2*k,k)/(2*k+1) * binom(2*(n-k), n-k)) == "
        "16^n / ((2*n+2) * binom(2*n,n))");
    auto bad = arcsid::verify_ast(wrong, 0, 20);
    CHECK(bad.identity == "dsl");
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.first_failure.has_value());
    CHECK(bad.first_failure->n == 0);
    CHECK(bad.first_failure->lhs == "1");
    CHECK(bad.first_failure->rhs == "1/2");

    // An evaluation error at some n is a failure at that n, carrying the text.
    IdentityAst sometimes = arcsid::parse_identity("(n - 3)/(n - 3) == 1");
    auto err = arcsid::verify_ast(sometimes, 0, 10);
    CHECK_FALSE(err.passed);
    REQUIRE(err.first_failure.has_value());
    CHECK(err.first_failure->n == 3);
    CHECK(err.first_failure->lhs.rfind("error:", 0) == 0);
    CHECK_THAT(err.first_failure->lhs,
               Catch::Matchers::ContainsSubstring("division by zero"));
    CHECK(err.first_failure->rhs == "1");

    // Parallel sweeps agree, including on error-failures.
    arcsid::VerifyOptions four;
    four.jobs = 4;
    auto err_par = arcsid::verify_ast(sometimes, 0, 10, four);
    REQUIRE(err_par.first_failure.has_value());
    CHECK(err_par.first_failure->n == 3);
}

TEST_CASE("language corpus agrees with the hand-coded evaluators", "[dsl]") {
    for (const auto& entry : arcsid::dsl_corpus()) {
        IdentityAst ast = arcsid::parse_identity(entry.text);
        for (long long n = 0; n <= 25; ++n) {
            INFO(entry.name << " at n = " << n);
            auto [lhs, rhs] = arcsid::evaluate_identity(entry.identity, entry.form, n);
            CHECK(arcsid::evaluate(ast.lhs, n) == lhs);
            CHECK(arcsid::evaluate(ast.rhs, n) == rhs);
        }
    }
}

TEST_CASE("identity files: names, comments, positions", "[dsl]") {
    std::string content =
        "# leading comment\n"
        "\n"
        "thm: sum(k=0..n, catalan(k)) == sum(k=0..n, catalan(k))\n"
        "1 + n == n + 1\n"
        "named-2.x: n == n   # trailing comment\n";
    auto entries = arcsid::parse_identity_file(content);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].name == "thm");
    CHECK(entries[1].name == "line4");
    CHECK(entries[2].name == "named-2.x");
    CHECK(arcsid::render(entries[1].ast) == "1 + n == n + 1");

    // Errors on later lines report file coordinates.
    try {
        arcsid::parse_identity_file("ok: n == n\nbad: n == (");
        FAIL("expected parse_error");
    } catch (const arcsid::parse_error& e) {
        CHECK(e.pos().line == 2);
        CHECK(e.pos().col == 12);
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("expected expression"));
    }

    CHECK(arcsid::parse_identity_file("").empty());
    CHECK(arcsid::parse_identity_file("# only a comment\n   \n").empty());
}

TEST_CASE("malformed inputs always raise parse errors", "[dsl]") {
    const char* bad[] = {
        "",
        "n",
        "n ==",
        "== n",
        "n == )",
        "(",
        "n == ((n)",
        "n == n)",
        "sum(k 0..n, k) == 0",
        "sum(k=0..n k) == 0",
        "sum(k=0..n, ) == 0",
        "sum(=0..n, k) == 0",
        "sum(k=0..n) == 0",
        "binom(n n) == 0",
        "fact() == 1",
        "n === n",
        "n = = n",
        "n == pi2 pi2",
        "n == 2^^3",
        "n == k recycle",
        "n == [1]",
        "n == 1e5",
        "n == --2",
        "n == 1..2",
        "sum(fact=0..n, 1) == 0",
        "n == sum(k=0..n, k:1)",
    };
    for (const char* text : bad) {
        INFO("input: " << text);
        CHECK_THROWS_AS(arcsid::parse_identity(text), arcsid::parse_error);
    }
}

TEST_CASE("single-character mutations never produce unexpected exceptions", "[dsl]") {
    const std::string pool = "()+-*/^=,.0123456789abknsum# \t";
    std::mt19937 rng(0xF0220);
    const auto& corpus = arcsid::dsl_corpus();
    std::uniform_int_distribution<std::size_t> pick_entry(0, corpus.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_char(0, pool.size() - 1);

    for (int iter = 0; iter < 500; ++iter) {
        std::string text = corpus[pick_entry(rng)].text;
        std::uniform_int_distribution<std::size_t> pick_pos(0, text.size() - 1);
        text[pick_pos(rng)] = pool[pick_char(rng)];
        try {
            IdentityAst ast = arcsid::parse_identity(text);
            // When the mutant still parses, the renderer round-trips it.
            IdentityAst again = arcsid::parse_identity(arcsid::render(ast));
            CHECK(arcsid::structurally_equal(ast, again));
        } catch (const arcsid::parse_error&) {
            // expected for most mutants
        }
    }
}
