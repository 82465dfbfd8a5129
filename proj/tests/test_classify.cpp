#include "doctest.h"
#include "pellcf/classify.hpp"
#include "pellcf/families.hpp"
#include "pellcf/units.hpp"

using namespace pellcf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }
}  // namespace

TEST_CASE("resolvent cubic") {
    CHECK(resolvent_cubic(P("x^4+x+1")) == P("x^3-4*x-1"));
    // depressed quartic x^4 + p x^2 + q x + r
    CHECK(resolvent_cubic(P("x^4+2*x^2+3*x+5")) == P("x^3-2*x^2-20*x+31"));
    auto z = rational_roots(resolvent_cubic(family_poly(10, Rat(2)).D));
    REQUIRE(z.size() == 1);
    CHECK(z[0] == Rat(7, 2));
    CHECK_THROWS_AS(resolvent_cubic(P("x^3+1")), std::invalid_argument);
    CHECK_THROWS_AS(resolvent_cubic(P("2*x^4+1")), std::invalid_argument);
}

TEST_CASE("resolvent roots are pair sums of roots") {
    // roots 1, 2, 3, 5
    Poly q = P("(x-1)(x-2)(x-3)(x-5)");
    auto z = rational_roots(resolvent_cubic(q));
    CHECK(z == std::vector<Rat>{Rat(11), Rat(13), Rat(17)});
}

TEST_CASE("galois labels") {
    CHECK(galois_quartic(P("x^4+x+1")) == GaloisLabel::S4);
    CHECK(galois_quartic(P("x^4+8*x+12")) == GaloisLabel::A4);
    CHECK(galois_quartic(P("x^4+1")) == GaloisLabel::V4);
    CHECK(galois_quartic(P("x^4-10*x^2+1")) == GaloisLabel::V4);
    CHECK(galois_quartic(P("x^4-2")) == GaloisLabel::D4);
    CHECK(galois_quartic(P("x^4+5*x^2+5")) == GaloisLabel::C4);
    CHECK(galois_quartic(P("x^4-x^2-1")) == GaloisLabel::D4);
    CHECK(galois_quartic(P("x^4-1")) == GaloisLabel::Reducible);
    CHECK(galois_quartic(family_poly(12, Rat(2)).D) == GaloisLabel::D4);
    CHECK(galois_quartic(family_poly(4, Rat(1, 2)).D) == GaloisLabel::V4);
    CHECK(galois_quartic(family_poly(4, Rat(-1, 32)).D) == GaloisLabel::C4);
    CHECK_THROWS_AS(galois_quartic(P("(x^2+1)^2")), std::invalid_argument);
    CHECK_THROWS_AS(galois_quartic(P("x^6+1")), std::invalid_argument);
    for (auto g : {GaloisLabel::S4, GaloisLabel::A4, GaloisLabel::D4, GaloisLabel::C4, GaloisLabel::V4,
                   GaloisLabel::Reducible})
        CHECK(galois_label_from_string(to_string(g)) == g);
}

TEST_CASE("C4 witness re-expands") {
    auto r = galois_quartic_detail(P("x^4+5*x^2+5"));
    REQUIRE(r.factors_over_disc_field.size() == 2);
    QPoly prod = r.factors_over_disc_field[0] * r.factors_over_disc_field[1];
    CHECK(prod.is_rational());
    CHECK(prod.rational_part() == P("x^4+5*x^2+5"));
}

TEST_CASE("unit factor report on the worked quartic") {
    Poly D = P("x^4+4*x^3-6*x^2+4*x+1");
    auto c = *find_unit(D);
    auto rep = theorem1_report(D, c);
    CHECK(rep.all_hold());
    CHECK_FALSE(rep.k_square);
    REQUIRE(rep.factors_Qc);
    CHECK(rep.factors_Qc->first.degree() == 2);
    CHECK(rep.factors_Qc->first.ctx().k() == Rat(1728));
    CHECK_FALSE(rep.factors_k_square);
    CHECK(report_from_json(Json::parse(report_to_json(rep).dump())) == rep);
    CHECK_THROWS_AS(theorem1_report(P("x^4+x+1"), c), std::invalid_argument);
}

TEST_CASE("unit factor report with square norm") {
    auto D5 = family_poly(5, Rat(2)).D;
    auto rep = theorem1_report(D5, *find_unit(D5));
    CHECK(rep.all_hold());
    CHECK(rep.k_square);
    REQUIRE(rep.factors_k_square);
    CHECK(rep.factors_k_square->first * rep.factors_k_square->second == D5);
    CHECK(rep.factors_Q.factors.front().poly == P("x+3/2"));

    // genus 0: x^2 + 4x + 3, k = 1
    Poly q = P("x^2+4*x+3");
    auto rq = theorem1_report(q, *find_unit(q));
    CHECK(rq.all_hold());
    CHECK(rq.k_square);
    REQUIRE(rq.s);
    CHECK(*rq.s == 0);
    CHECK(rq.factors_k_square->first * rq.factors_k_square->second == q);
}

TEST_CASE("expansion report: parity and midpoints") {
    Poly D = P("x^4+4*x^3-6*x^2+4*x+1");
    auto e = CFExpansion::init(D);
    e.detect(Bounds{});
    auto c = *find_unit(D);
    auto rep = theorem2_report(c, e);
    CHECK(rep.all_hold());
    CHECK(rep.factors_Qc);

    // even quasi-period: kappa = 1 and k square
    auto D7 = family_poly(7, Rat(3)).D;
    auto e7 = CFExpansion::init(D7);
    e7.detect(Bounds::for_genus(1));
    auto c7 = *find_unit(D7);
    CHECK(c7.r == 6);
    auto r7 = theorem2_report(c7, e7);
    CHECK(r7.all_hold());
    CHECK(c7.kappa == Rat(1));
    REQUIRE_FALSE(r7.midpoint_factors.empty());
    for (const auto& f : r7.midpoint_factors) CHECK(divides(f, D7));

    auto e0 = CFExpansion::init(P("x^2+2*x"));
    e0.detect(Bounds{});
    auto r0 = theorem2_report(*find_unit(P("x^2+2*x")), e0);
    CHECK(r0.all_hold());
    CHECK(r0.midpoint_factors == std::vector<Poly>{Poly(1)});

    auto other = CFExpansion::init(D7);
    CHECK_THROWS_AS(theorem2_report(c, other), std::invalid_argument);
}

TEST_CASE("exceptionality screen") {
    auto s = exceptionality_screen(P("x^4+x+1"));
    CHECK(s.verdict == Verdict::NotExceptional);
    CHECK(s.rule == "S4");
    CHECK(exceptionality_screen(P("x^4+8*x+12")).rule == "A4");
    CHECK(exceptionality_screen(family_poly(12, Rat(2)).D).verdict == Verdict::Undecided);
    CHECK(exceptionality_screen(P("x^4-5/2*x^2-4*x-7/16")).verdict == Verdict::Undecided);
    CHECK(exceptionality_screen(P("x^6+x+1")).verdict == Verdict::Undecided);
    CHECK_THROWS_AS(exceptionality_screen(P("x^4+2*x^2+1")), std::invalid_argument);
}
