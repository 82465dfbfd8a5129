#include <random>

#include "doctest.h"
#include "pellcf/cfrac.hpp"
#include "pellcf/units.hpp"
#include "test_util.hpp"

using namespace pellcf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }
const char* kWorked = "x^4+4*x^3-6*x^2+4*x+1";
}  // namespace

TEST_CASE("init rejects bad input") {
    CHECK_THROWS_AS(CFExpansion::init(P("x^3+1")), std::invalid_argument);
    CHECK_THROWS_AS(CFExpansion::init(P("2*x^4+1")), std::invalid_argument);
    CHECK_THROWS_AS(CFExpansion::init(P("(x^2+1)^2*1")), std::invalid_argument);
    CHECK_THROWS_AS(CFExpansion::init(P("x^4+2*x^2+1")), std::invalid_argument);
    CHECK_THROWS_AS(CFExpansion::init(P("5")), std::invalid_argument);
}

TEST_CASE("worked quartic tableau") {
    auto e = CFExpansion::init(P(kWorked));
    CHECK(e.A() == P("x^2+2*x-5"));
    CHECK(e.line(0).a == P("2*x^2+4*x-10"));
    e.extend_to(5);
    CHECK(e.line(1).Q == P("24*x-24"));
    CHECK(e.line(2).Q == P("-1/3*x"));
    CHECK(e.line(5).Q == P("-108"));
    for (int h = 1; h <= 4; ++h) CHECK(e.line(h).Q.degree() == 1);

    auto e2 = CFExpansion::init(P(kWorked));
    const auto& st = e2.detect(Bounds{});
    REQUIRE(std::holds_alternative<QuasiPeriodic>(st));
    CHECK(std::get<QuasiPeriodic>(st).r == 5);
    CHECK(std::get<QuasiPeriodic>(st).kappa == Rat(-108));
    CHECK(to_string(st) == "quasi_periodic(r=5, kappa=-108)");
}

TEST_CASE("recurrence invariant: Q_h Q_{h+1} = D - P_{h+1}^2") {
    auto e = CFExpansion::init(P(kWorked));
    e.extend_to(10);
    for (int h = 0; h < 10; ++h)
        CHECK(e.line(h).Q * e.line(h + 1).Q == e.D() - e.line(h + 1).P * e.line(h + 1).P);
}

TEST_CASE("period symmetry on the worked quartic") {
    auto e = CFExpansion::init(P(kWorked));
    e.detect(Bounds{});
    auto rep = symmetry_report(e);
    CHECK(rep.period_closes);
    CHECK(rep.twisted_palindrome);
    CHECK(rep.parity_applicable);
    CHECK(rep.r_odd);
    CHECK(rep.holds());
    CHECK(rep.twist_ratios.size() == 4);
}

TEST_CASE("convergent norm tracks Q") {
    auto e = CFExpansion::init(P(kWorked));
    e.extend_to(6);
    for (int h = 0; h <= 5; ++h) {
        auto [p, q] = convergent(e, h);
        Rat sign = (h % 2 == 0) ? Rat(-1) : Rat(1);
        CHECK(p * p - e.D() * q * q == e.line(h + 1).Q * sign);
    }
    CHECK_THROWS_AS(convergent(e, 99), std::out_of_range);
}

TEST_CASE("bounds abort on a non-exceptional quartic") {
    auto e = CFExpansion::init(P("x^4+x+1"));
    const auto& st = e.detect(Bounds::for_genus(1));
    REQUIRE(std::holds_alternative<Aborted>(st));
    CHECK(std::get<Aborted>(st).reason == AbortReason::MaxSteps);
    CHECK(std::get<Aborted>(st).at_step == 11);

    auto d = CFExpansion::init(P("x^4+x+1"));
    const auto& sd = d.detect(Bounds{50, 20});
    REQUIRE(std::holds_alternative<Aborted>(sd));
    CHECK(std::get<Aborted>(sd).reason == AbortReason::MaxDigits);
    CHECK_THROWS_AS(d.detect(Bounds{0, 10}), std::invalid_argument);
}

TEST_CASE("degree bounds hold on random quartics") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Poly D = testutil::random_poly(rng, 4, 9);
        D = D.monic();
        if (!is_squarefree(D)) continue;
        auto e = CFExpansion::init(D);
        e.extend_to(8);
        for (int h = 1; h <= 8; ++h) {
            CHECK(e.line(h).P.degree() == 2);
            CHECK(e.line(h).Q.degree() <= 1);
        }
    }
}

TEST_CASE("heights csv") {
    auto s = measure_heights(P("x^4+x+1"), 4);
    REQUIRE(s.size() == 4);
    auto csv = heights_csv(s);
    CHECK(csv.rfind("h,digits\n1,", 0) == 0);
    auto ex = measure_heights(P(kWorked), 10);
    CHECK(ex[4].digits == 3);  // Q_5 = -108
    CHECK(ex[9].digits == 1);  // Q_10 = 1
}
