#include <random>

#include "doctest.h"
#include "pellcf/poly.hpp"
#include "test_util.hpp"

using namespace pellcf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }

// Cubic discriminant 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 of x^3+ax^2+bx+c.
Rat cubic_disc_formula(const Rat& a, const Rat& b, const Rat& c) {
    return Rat(18) * a * b * c - Rat(4) * a.pow(3) * c + a * a * b * b - Rat(4) * b.pow(3) - Rat(27) * c * c;
}
}  // namespace

TEST_CASE("Rat normal form") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(6, -4).den() == 2);
    CHECK(Rat(0, 5).to_string() == "0");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat(9, 16).sqrt() == Rat(3, 4));
    CHECK_FALSE(Rat(1728).is_square());
    CHECK_FALSE(Rat(-4).is_square());
    CHECK(Rat(-12345, 7).digits() == 5);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
}

TEST_CASE("parse and print") {
    Poly d = P("x^4+4*x^3-6*x^2+4*x+1");
    CHECK(d.degree() == 4);
    CHECK(d.coeff(2) == Rat(-6));
    CHECK(d.to_string() == "x^4+4*x^3-6*x^2+4*x+1");
    CHECK(P("x^2-1/4").to_string() == "x^2-1/4");
    CHECK(P(" 2x^2 - x + (-0)").to_string() == "2*x^2-x" );
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("1/12*x+1/4").coeff(1) == Rat(1, 12));
    CHECK(P("x^2+x^2").to_string() == "2*x^2");
    CHECK(P("x-x").is_zero());
    CHECK(P("0").to_string() == "0");
    CHECK(P("(-1/2)*x^3").lc() == Rat(-1, 2));
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("y+1"), ParseError);
    CHECK_THROWS_AS(P("x 2"), ParseError);
    CHECK(P("x^2/3") == P("1/3*x^2"));
    CHECK(P("(x^2+7/4)^2+8*(x-1/2)") == P("x^4+7/2*x^2+8*x-15/16"));
    CHECK(P("2(x+1)x") == P("2*x^2+2*x"));
    CHECK(P("-x^2") == P("-1*x^2"));
    CHECK_THROWS_AS(P("x/x"), ParseError);
    CHECK_THROWS_AS(P("x/0"), ParseError);
    CHECK_THROWS_AS(P("(x+1"), ParseError);
    CHECK_THROWS_AS(P("x^99999"), ParseError);
    CHECK(P("x^2+2*x").to_latex() == "x^{2}+2x");
    CHECK(P("-1/3*x+1/4").to_latex() == "-\\frac{1}{3}x+\\frac{1}{4}");
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_poly(rng, static_cast<int>(rng() % 8), 40);
        CHECK(Poly::parse(p.to_string()) == p);
    }
}

TEST_CASE("poly_divrem") {
    auto [q, r] = divrem(P("2*x^2+4*x-10"), P("24*x-24"));
    CHECK(q == P("1/12*x+1/4"));
    CHECK(r == Poly(Rat(-4)));
    CHECK(q * P("24*x-24") + r == P("2*x^2+4*x-10"));

    Poly p = P("3*x^5-x+7/3");
    auto unit = divrem(p, Poly(1));
    CHECK(unit.quot == p);
    CHECK(unit.rem.is_zero());

    auto exact = divrem(P("x^2-1"), P("x-1"));
    CHECK(exact.quot == P("x+1"));
    CHECK(exact.rem.is_zero());

    CHECK_THROWS_AS(divrem(p, Poly()), std::domain_error);
    CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x-1")), InexactDivision);
}

TEST_CASE("poly_gcd") {
    CHECK(gcd(P("x^2-1"), P("x^2-2*x+1")) == P("x-1"));
    Poly D = P("x^4+4*x^3-6*x^2+4*x+1");
    CHECK(gcd(D, D.derivative()) == Poly(1));
    CHECK(gcd(P("3*x^2-3"), Poly()) == P("x^2-1"));
    CHECK(gcd(Poly(), P("-2*x")) == P("x"));
    CHECK_THROWS_AS(gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(P("x^4+4*x^3-6*x^2+4*x+1")));
    CHECK_FALSE(is_squarefree(P("x^2-2*x+1")));
    CHECK(is_squarefree(P("x^2+2*x")));
    CHECK_THROWS_AS(is_squarefree(Poly()), std::domain_error);
}

TEST_CASE("polypart_sqrt") {
    auto [A, R] = polypart_sqrt(P("x^4+4*x^3-6*x^2+4*x+1"));
    CHECK(A == P("x^2+2*x-5"));
    CHECK(R == P("24*x-24"));

    auto sq = polypart_sqrt(P("x^2"));
    CHECK(sq.A == P("x"));
    CHECK(sq.R.is_zero());

    // x^2 + 2vx + w with v = 3/2, w = -7
    auto g0 = polypart_sqrt(P("x^2+3*x-7"));
    CHECK(g0.A == P("x+3/2"));
    CHECK(g0.R == Poly(Rat(-7) - Rat(9, 4)));

    CHECK_THROWS_AS(polypart_sqrt(P("x^3+1")), std::invalid_argument);
    CHECK_THROWS_AS(polypart_sqrt(P("2*x^2+1")), std::invalid_argument);
}

TEST_CASE("polypart_sqrt reconstructs D with deg R <= g") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        int g = static_cast<int>(rng() % 4);
        Poly D = testutil::random_poly(rng, 2 * g + 2, 30).monic();
        auto [A, R] = polypart_sqrt(D);
        CHECK(A * A + R == D);
        CHECK(A.is_monic());
        CHECK(A.degree() == g + 1);
        CHECK(R.degree() <= g);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(P("x^2+5*x+3")) == Rat(25 - 12));
    CHECK(discriminant(P("x^4+x+1")) == Rat(-27 + 256));
    CHECK(discriminant(P("x^3-x^2-x+15/7")) == cubic_disc_formula(Rat(-1), Rat(-1), Rat(15, 7)));
    CHECK(discriminant(P("x^3-x^2-x+15/7")) == Rat(-3520, 49));
    CHECK_THROWS_AS(discriminant(P("x+1")), std::invalid_argument);
}

TEST_CASE("ring laws and gcd properties on random polynomials") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        Poly a = testutil::random_poly(rng, static_cast<int>(rng() % 6), 20);
        Poly b = testutil::random_poly(rng, static_cast<int>(rng() % 6), 20);
        Poly c = testutil::random_poly(rng, static_cast<int>(rng() % 6), 20);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);

        Poly common = testutil::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
        if (common.is_zero() || (a.is_zero() && b.is_zero())) continue;
        Poly x = a * common, y = b * common;
        if (x.is_zero() && y.is_zero()) continue;
        Poly g = gcd(x, y);
        CHECK(divides(g, x));
        CHECK(divides(g, y));
        CHECK(divides(common, g));
    }
}

TEST_CASE("discriminant vanishes exactly on non-squarefree input") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        Poly a = testutil::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
        Poly b = testutil::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
        if (a.degree() < 1 || b.degree() < 1) continue;
        for (const Poly& p : {a * b, a * a * b, a * b * b}) {
            CHECK((discriminant(p).is_zero()) == !is_squarefree(p));
        }
    }
}
