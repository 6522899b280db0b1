#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horseshoe/expr.hpp"

using namespace horseshoe;

TEST_CASE("parse and evaluate")
{
    auto e = parse_expr("x*(1-x)");
    CHECK(e->eval(0.5) == doctest::Approx(0.25));
    CHECK(e->eval(2.0) == doctest::Approx(-2.0));

    auto f = parse_expr("3*ln(x+2)");
    CHECK(f->eval(0.0) == doctest::Approx(3.0 * std::log(2.0)));

    auto g = parse_expr("exp(x)-1");
    CHECK(g->eval(0.0) == doctest::Approx(0.0));

    auto s = parse_expr("sin(2*pi*y)");
    CHECK(s->eval(0.25) == doctest::Approx(1.0));
    CHECK(s->eval(1.0) == doctest::Approx(0.0));

    auto p = parse_expr("x^3 - 2*x^2 + x");
    CHECK(p->eval(2.0) == doctest::Approx(2.0));

    auto hx = parse_expr("0x1.8p1"); // hex-float constant 3.0
    CHECK(hx->eval(0.0) == 3.0);

    CHECK(parse_expr("-x")->eval(2.0) == -2.0);
    CHECK(parse_expr("1/x")->eval(4.0) == 0.25);
    CHECK(parse_expr("x^-2")->eval(2.0) == 0.25);
}

TEST_CASE("parse errors carry byte offsets")
{
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("foo(x)"), ParseError);
    CHECK_THROWS_AS(parse_expr("sin x"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x"), ParseError);
    CHECK_THROWS_AS(parse_expr("x^y"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    try {
        parse_expr("x + @");
        CHECK(false);
    } catch (const ParseError& pe) {
        CHECK(pe.byte_offset == 4);
    }
}

TEST_CASE("interval evaluation is sound")
{
    std::mt19937_64 rng(11);
    const char* exprs[] = {"x*(1-x)", "3*ln(x+2)", "exp(x)-1", "sin(2*pi*x)",
                           "x^3-x", "cos(x)*x", "x/(x+3)"};
    int violations = 0;
    for (const char* src : exprs) {
        auto e = parse_expr(src);
        for (int i = 0; i < 2000; ++i) {
            std::uniform_real_distribution<double> d(-1.0, 1.0);
            double a = d(rng), b = d(rng);
            if (a > b) std::swap(a, b);
            Interval X(a, b);
            std::uniform_real_distribution<double> dp(a, b);
            double x = std::clamp(dp(rng), a, b);
            if (!e->eval(X).contains(e->eval(x))) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("domain errors on interval evaluation")
{
    CHECK_THROWS_AS(parse_expr("ln(x)")->eval(Interval(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(parse_expr("tan(x)")->eval(Interval(1.0, 2.0)), PoleError);
    CHECK_THROWS_AS(parse_expr("1/x")->eval(Interval(-1.0, 1.0)), DivisionByZeroInterval);
    // tan composed with sin stays within one branch
    auto t = parse_expr("tan(x)");
    Interval ok = t->eval(Interval(-1.0, 1.0));
    CHECK(ok.contains(std::tan(0.5)));
}

TEST_CASE("symbolic differentiation against central differences")
{
    std::mt19937_64 rng(5);
    const char* exprs[] = {"x*(1-x)", "3*ln(x+2)", "exp(x)-1", "sin(2*pi*x)",
                           "x^4", "tan(x)", "cos(x)/(x+5)"};
    for (const char* src : exprs) {
        auto e = parse_expr(src);
        auto de = e->derivative();
        for (int i = 0; i < 300; ++i) {
            std::uniform_real_distribution<double> d(-0.9, 0.9);
            double x = d(rng);
            double h = 1e-6;
            double fd = (e->eval(x + h) - e->eval(x - h)) / (2 * h);
            CHECK(de->eval(x) == doctest::Approx(fd).epsilon(1e-4));
        }
    }
}

TEST_CASE("pi constant is rigorous in interval mode")
{
    auto e = parse_expr("pi");
    Interval p = e->eval(Interval(0.0));
    CHECK(p.lo() < 3.14159265358979323846);
    CHECK(p.hi() > 3.14159265358979323846);
    CHECK(p.width() < 1e-15);
}
