#include "doctest.h"
#include "pellcf/json_io.hpp"
#include "pellcf/quadext.hpp"
#include "pellcf/units.hpp"

using namespace pellcf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }
const char* kWorked = "x^4+4*x^3-6*x^2+4*x+1";
}  // namespace

TEST_CASE("worked integral") {
    Poly D = P(kWorked);
    auto c = find_unit(D);
    REQUIRE(c);
    CHECK(c->b == P("x^4+10*x^3+30*x^2+22*x-11"));
    CHECK(c->m == 6);
    CHECK(c->g == 1);
    CHECK(c->r == 5);
    CHECK(c->kappa == Rat(-108));
    CHECK(c->k == Rat(1728));
    CHECK(c->a.coeff(1) == Rat(0));
    CHECK(c->a.coeff(0) == Rat(43));
    CHECK(torsion_order(*c) == 6);

    // pointwise check at x = 0 and x = 2, separate from the identity check
    for (long x0 : {0L, 2L}) {
        Rat a = c->a.eval(Rat(x0)), b = c->b.eval(Rat(x0)), d = D.eval(Rat(x0));
        CHECK(a * a - d * b * b == Rat(1728));
    }

    auto id = integrand(*c);
    CHECK(id.f == P("6*x"));
    CHECK(id.f * id.b == id.a.derivative());
    CHECK(verify_identity(id));
}

TEST_CASE("closed form at degree 2") {
    auto c = find_unit(P("x^2+2*x"));
    REQUIRE(c);
    CHECK(c->a == P("x+1"));
    CHECK(c->b == Poly(1));
    CHECK(c->k == Rat(1));
    CHECK(c->m == 1);
    auto id = integrand(*c);
    CHECK(id.f == Poly(1));
    CHECK(emit_identity(id, IdentityFormat::Text) == "∫ 1/√(x^2+2*x) dx = log(x+1+√(x^2+2*x))");
    CHECK_THROWS_AS(closed_form_unit(P("x^2+2*x+1")), std::invalid_argument);
}

TEST_CASE("non-exceptional quartic has no unit within bounds") {
    CHECK_FALSE(find_unit(P("x^4+x+1")));
    CHECK_THROWS_AS(find_unit(P("x^3+1")), std::invalid_argument);
}

TEST_CASE("emitters") {
    auto id = integrand(*find_unit(P(kWorked)));
    auto latex = emit_identity(id, IdentityFormat::Latex);
    CHECK(latex.find("\\log") != std::string::npos);
    CHECK(latex.find("\\documentclass") != std::string::npos);
    CHECK(latex.find(id.a.to_latex()) != std::string::npos);
    CHECK(latex.find(id.b.to_latex()) != std::string::npos);

    auto js = Json::parse(emit_identity(id, IdentityFormat::Json));
    CHECK(js["k"] == "1728");
    CHECK(js["m"] == 6);
    CHECK(identity_from_json(js) == id);

    IntegralIdentity bad = id;
    bad.f = P("7*x");
    CHECK_FALSE(verify_identity(bad));
    CHECK_THROWS_AS(emit_identity(bad, IdentityFormat::Text), std::invalid_argument);
}

TEST_CASE("certificate json round trip and validation") {
    auto c = *find_unit(P(kWorked));
    auto j = cert_to_json(c);
    CHECK(j["kappa"] == "-108");
    CHECK(cert_from_json(Json::parse(j.dump())) == c);
    CHECK(cert_is_valid(c));

    UnitCert broken = c;
    broken.k = Rat(1727);
    CHECK_FALSE(cert_is_valid(broken));
    broken = c;
    broken.m = 5;
    CHECK_FALSE(cert_is_valid(broken));
    CHECK_THROWS_AS(cert_from_json(Json::parse("{\"D\":\"x\"}")), std::invalid_argument);
}

TEST_CASE("normalization is scale invariant") {
    auto e = CFExpansion::init(P(kWorked));
    e.detect(Bounds{});
    auto [p, q] = convergent(e, 4);
    auto c = *find_unit(P(kWorked));
    for (long s : {3L, -5L}) {
        Rat sc(s, 7);
        Poly ps = p * sc, qs = q * sc;
        CHECK(ps.monic() == c.a);
        CHECK(qs * ps.lc().inverse() == c.b);
        Rat raw = (ps * ps - c.D * qs * qs).lc();
        CHECK(raw == (p * p - c.D * q * q).lc() * sc * sc);
    }
}

TEST_CASE("unit factor split over Q(sqrt(1728))") {
    auto c = *find_unit(P(kWorked));
    auto sp = split_unit_factor(c);
    REQUIRE_FALSE(sp.k_square());
    const auto& cs = std::get<ConjugateSplit>(sp.parts);
    CHECK(cs.d.degree() == 2);
    CHECK(sp.s == 2);
    CHECK((cs.d * cs.d_conj).rational_part() == c.b);
    CHECK((cs.d * cs.d_conj).is_rational());
    CHECK((cs.cof * cs.cof_conj).rational_part() == c.D);
    CHECK(cs.cof.degree() == 2);
}

TEST_CASE("quadratic field arithmetic") {
    QuadCtx k3(Rat(3));
    QNum c = QNum::generator(k3);
    CHECK(c * c == QNum(k3, Rat(3)));
    QNum z(k3, Rat(2), Rat(1));
    CHECK(z.norm() == Rat(1));
    CHECK(z * z.inverse() == QNum(k3, Rat(1)));
    CHECK_THROWS_AS(QuadCtx(Rat(4)), std::invalid_argument);
    CHECK_THROWS_AS(QuadCtx(Rat(9, 4)), std::invalid_argument);
    CHECK_THROWS_AS(QNum(k3).inverse(), std::domain_error);

    // x^4 - 10x^2 + 1 splits over Q(sqrt 3) into two quadratics
    auto f = factor_over_quadratic(P("x^4-10*x^2+1"), k3);
    REQUIRE(f.size() == 2);
    CHECK((f[0] * f[1]).rational_part() == P("x^4-10*x^2+1"));
    // x^2 - 3 splits into linears, x^2 - 2 stays
    CHECK(factor_over_quadratic(P("x^2-3"), k3).size() == 2);
    CHECK(factor_over_quadratic(P("x^2-2"), k3).size() == 1);

    QPoly u(k3, P("x^2+1"), P("x"));
    CHECK(u.norm() == P("x^4-x^2+1"));
    CHECK(qpoly_from_json(qpoly_to_json(u)) == u);
    CHECK(u.shifted(c).shifted(-c) == u);
}

TEST_CASE("rational split at square k") {
    // x^4 - 1: a = x^2, b = 1, k = 1
    auto c = find_unit(P("x^4-1"));
    REQUIRE(c);
    CHECK(c->a == P("x^2"));
    CHECK(c->k == Rat(1));
    // m = 2 = 2 deg d_+ cannot happen here since deg b = 0
    auto d5 = find_unit(P("(x^2+7/4)^2+8*(x-1/2)"));
    REQUIRE(d5);
    CHECK(d5->m == 5);
    CHECK(d5->k.is_square());
    auto sp = split_unit_factor(*d5);
    REQUIRE(sp.k_square());
    const auto& rs = std::get<RationalSplit>(sp.parts);
    CHECK(rs.d_plus * rs.d_minus == d5->b);
    CHECK(rs.cof_plus * rs.cof_minus == d5->D);
    CHECK(rs.cof_plus.degree() + rs.cof_minus.degree() == 4);
}
