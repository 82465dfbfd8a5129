#include "doctest.h"
#include "pellcf/families.hpp"

using namespace pellcf;

namespace {
Poly P(const char* s) { return Poly::parse(s); }

bool ratio_is_square(const Rat& a, const Rat& b) { return (a / b).is_square(); }
}  // namespace

TEST_CASE("parameters") {
    auto p10 = family_params(10, Rat(2));
    CHECK(p10.v == Rat(24));
    CHECK(p10.w == Rat(-5, 2));
    auto p12 = family_params(12, Rat(2));
    CHECK(p12.v == Rat(105, 16));
    CHECK(p12.w == Rat(-13, 16));
    auto p5 = family_params(5, Rat(2));
    CHECK(p5.v == Rat(2));
    CHECK(p5.w == Rat(-1, 2));
    CHECK_THROWS_AS(family_params(8, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(family_params(12, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(family_params(11, Rat(2)), std::invalid_argument);
    CHECK_THROWS_AS(family_params(3, Rat(2)), std::invalid_argument);
}

TEST_CASE("family polynomials") {
    CHECK(family_poly(4, Rat(-1)).D == P("x^4-5/2*x^2-4*x-7/16"));
    CHECK(family_poly(10, Rat(2)).D == P("(x^2+71/4)^2+96*x-240"));
    CHECK(family_poly(4, Rat(2)).D == P("(x^2+7/4)^2+8*(x+1/2)"));
    CHECK(family_poly2(Rat(1), Rat(1)).D == P("(x^2+1)^2+4"));
    CHECK(family_poly3(Rat(1), Rat(1)).D == P("x^4-2*x^2+4*x+5"));
}

TEST_CASE("spec strings") {
    auto i = parse_family_spec("m=10,t=2");
    CHECK(i.m == 10);
    CHECK(i.t == Rat(2));
    CHECK(i.spec() == "m=10,t=2");
    CHECK(parse_family_spec("m=2,u=1,w=1").spec() == "m=2,u=1,w=1");
    CHECK(parse_family_spec("m=3,v=1,w=1") == family_poly3(Rat(1), Rat(1)));
    CHECK(parse_family_spec("m=4,t=-1/32").t == Rat(-1, 32));
    CHECK_THROWS_AS(parse_family_spec("m=11,t=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("m=2,t=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("m=4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("m=4,t=2,z=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("m=x,t=2"), std::invalid_argument);
}

TEST_CASE("regularity") {
    CHECK_FALSE(is_regular(12, Rat(1, 2)));
    CHECK(is_regular(12, Rat(2)));
    CHECK_FALSE(is_regular(10, Rat(0)));
    CHECK_FALSE(is_regular(10, Rat(1)));
    CHECK_FALSE(is_regular(8, Rat(0)));
    CHECK_FALSE(is_regular(4, Rat(0)));
    CHECK_FALSE(is_regular(6, Rat(1)));
    CHECK(is_regular(6, Rat(2)));
    CHECK_THROWS_AS(is_regular(2, Rat(1)), std::invalid_argument);
}

TEST_CASE("torsion and quasi-period across families") {
    for (int m : {4, 5, 6, 7, 8, 9, 10, 12}) {
        for (long t : {2L, 3L, -1L, 5L}) {
            CAPTURE(m);
            CAPTURE(t);
            auto inst = family_poly(m, Rat(t));
            REQUIRE(inst.regular);
            auto c = *find_unit(inst.D);
            CHECK(torsion_order(c) == m);
            CHECK(c.r == m - 1);
            CHECK(verify_identity(integrand(c)));
        }
    }
    for (auto inst : {family_poly2(Rat(1), Rat(1)), family_poly2(Rat(2), Rat(-3)), family_poly3(Rat(1), Rat(1)),
                      family_poly3(Rat(2), Rat(3))}) {
        CAPTURE(inst.spec());
        CHECK(inst.regular);
        CHECK(torsion_order(*find_unit(inst.D)) == inst.m);
    }
}

TEST_CASE("norms against the tabulated k_m") {
    CHECK(expected_norm(6, Rat(3)) == Rat(12));
    CHECK(expected_norm(4, Rat(2)) == Rat(8));
    CHECK(expected_norm(8, Rat(2)) == Rat(9, 2));
    CHECK_THROWS_AS(expected_norm(5, Rat(2)), std::invalid_argument);

    // The quotient constant kappa = Q_r equals k_4 and k_8 outright; the
    // norm of the monic unit is -kappa times a square. For m = 6, kappa is
    // 4(t-1), not 4t.
    for (long t : {2L, 3L, -1L, 5L}) {
        CAPTURE(t);
        auto c4 = *find_unit(family_poly(4, Rat(t)).D);
        CHECK(c4.kappa == expected_norm(4, Rat(t)));
        CHECK(ratio_is_square(-c4.k, expected_norm(4, Rat(t))));
        auto c8 = *find_unit(family_poly(8, Rat(t)).D);
        CHECK(c8.kappa == expected_norm(8, Rat(t)));
        CHECK(ratio_is_square(-c8.k, expected_norm(8, Rat(t))));
        auto c6 = *find_unit(family_poly(6, Rat(t)).D);
        CHECK(c6.kappa == Rat(4) * (Rat(t) - Rat(1)));
        CHECK_FALSE(ratio_is_square(c6.k, expected_norm(6, Rat(t))));
    }
}

TEST_CASE("galois label cells") {
    auto c = std::get<Table1Cell>(table1_expected(4, Table1Column::V4, Rat(3)));
    CHECK(c.t == Rat(1, 2));
    CHECK(c.label == GaloisLabel::V4);
    CHECK(std::get<Table1Cell>(table1_expected(4, Table1Column::C4, Rat(1))).t == Rat(-1, 32));
    CHECK(std::get<Table1Cell>(table1_expected(6, Table1Column::V4, Rat(2))).t == Rat(8, 5));
    CHECK(std::holds_alternative<std::monostate>(table1_expected(8, Table1Column::V4, Rat(2))));
    CHECK(std::holds_alternative<std::monostate>(table1_expected(8, Table1Column::C4, Rat(2))));
    CHECK(std::get<Unresolved>(table1_expected(10, Table1Column::C4, Rat(2))).mark == "*");
    CHECK_THROWS_AS(table1_expected(6, Table1Column::V4, Rat(3)), std::domain_error);
    CHECK_THROWS_AS(table1_expected(5, Table1Column::V4, Rat(3)), std::invalid_argument);

    for (long s : {2L, 3L, 5L}) {
        auto v4 = std::get<Table1Cell>(table1_expected(4, Table1Column::V4, Rat(s)));
        CHECK(galois_quartic(family_poly(4, v4.t).D) == GaloisLabel::V4);
        auto c4 = std::get<Table1Cell>(table1_expected(4, Table1Column::C4, Rat(s)));
        CHECK(galois_quartic(family_poly(4, c4.t).D) == GaloisLabel::C4);
    }
    for (Rat s : {Rat(2), Rat(4), Rat(5), Rat(1, 2)}) {
        auto v6 = std::get<Table1Cell>(table1_expected(6, Table1Column::V4, s));
        CHECK(galois_quartic(family_poly(6, v6.t).D) == GaloisLabel::V4);
    }
}

TEST_CASE("baseline labels away from the tables") {
    for (int m : {6, 10, 12})
        for (long t : {2L, 3L, -1L, 5L}) CHECK(galois_quartic(family_poly(m, Rat(t)).D) == GaloisLabel::D4);
    for (long t : {2L, -1L, 5L}) CHECK(galois_quartic(family_poly(8, Rat(t)).D) == GaloisLabel::D4);
    // no V4 cell is listed for m = 8, yet t = 3 has group V4
    CHECK(galois_quartic(family_poly(8, Rat(3)).D) == GaloisLabel::V4);
    for (int m : {5, 7, 9})
        for (long t : {2L, 3L, -1L, 5L}) CHECK(galois_quartic(family_poly(m, Rat(t)).D) == GaloisLabel::Reducible);
}

TEST_CASE("factor count cells") {
    CHECK(std::get<Table2Cell>(table2_expected(4, Table2Column::Two, Rat(1))) == Table2Cell{Rat(-1), 2});
    CHECK(std::get<Table2Cell>(table2_expected(8, Table2Column::Two, Rat(1))) == Table2Cell{Rat(1, 2), 2});
    CHECK(std::get<Table2Cell>(table2_expected(6, Table2Column::Two, Rat(2))) == Table2Cell{Rat(-3), 2});
    CHECK(std::get<Unresolved>(table2_expected(8, Table2Column::Three, Rat(2))).mark == "†");
    CHECK(std::holds_alternative<std::monostate>(table2_expected(6, Table2Column::Four, Rat(2))));
    CHECK_THROWS_AS(table2_expected(4, Table2Column::Two, Rat(1), 2), std::invalid_argument);

    auto f = factor_over_Q(family_poly(4, Rat(-1)).D);
    CHECK(f.count() == 2);
    CHECK(f.expand() == P("(x^2+2*x+7/4)(x^2-2*x-1/4)"));

    CHECK(factor_over_Q(family_poly(4, Rat(-9, 16)).D).count() == 3);
    CHECK(factor_over_Q(family_poly(4, Rat(-36, 625)).D).count() == 4);
    CHECK(factor_over_Q(family_poly(6, Rat(40, 49)).D).count() == 3);
    CHECK(factor_over_Q(family_poly(8, Rat(1, 5)).D).count() == 2);
    // t = -4 lies in both the two- and three-factor rows for m = 4
    CHECK(factor_over_Q(family_poly(4, Rat(-4)).D).count() == 3);
}

TEST_CASE("odd linear factors") {
    CHECK(odd_linear_factor(5, Rat(2)) == P("x+3/2"));
    CHECK(odd_linear_factor(7, Rat(2)) == P("x+1/2"));
    for (int m : {5, 7, 9}) {
        for (long t : {2L, 3L, -1L, 5L}) {
            auto r = odd_linear_resolution(m, Rat(t));
            CHECK(divides(r.divisor, family_poly(m, Rat(t)).D));
            CHECK(r.matches_print() == (m == 5 && t == -1));
        }
    }
    // rho = 0: the two candidates coincide
    CHECK(odd_linear_factor(5, Rat(-1)) == P("x"));
    CHECK_THROWS_AS(odd_linear_factor(6, Rat(2)), std::invalid_argument);
    auto ledger = typo_ledger();
    CHECK(ledger.size() == 7);
    CHECK(ledger[0].resolved.find("flipped") != std::string::npos);
}

TEST_CASE("m = 3 toolkit") {
    auto k = d3_toolkit(Rat(1), Rat(1));
    CHECK(k.D3() == P("(x^2-1)^2+4*(x+1)"));
    CHECK(k.F() == P("x^3-x^2-x+5"));
    CHECK(k.D3() == (Poly::x() + Poly(1)) * k.F());

    auto a3 = k.a3_condition(Rat(1));
    CHECK(a3.v_tab == Rat(2, 7));
    CHECK(a3.cubic.coeff(0) == Rat(-1, 7));
    CHECK(a3.discriminant == Rat(64, 49));
    CHECK(a3.square);
    // tabulated cubic at v is the cofactor of D3 at -v
    CHECK(d3_toolkit(-a3.v_tab, Rat(1)).F() == a3.cubic);

    for (Rat r : {Rat(0), Rat(2), Rat(-1, 3)}) {
        auto rs = k.root_split(r);
        CHECK(rs.expands);
        CHECK(rs.cubic.eval(r).is_zero());
    }
    for (Rat s : {Rat(2), Rat(1, 2), Rat(5)}) {
        auto fs = k.full_split(s);
        CHECK(fs.splits);
        CHECK(fs.roots.size() == 3);
    }
}

TEST_CASE("m = 2 alternate form") {
    CHECK(d2_alt(Rat(0), Rat(1)) == P("x^4-1"));
    auto c = *find_unit(d2_alt(Rat(0), Rat(1)));
    CHECK(c.a == P("x^2"));
    CHECK(c.b == Poly(1));
    CHECK(c.k == Rat(1));
    auto c2 = *find_unit(d2_alt(Rat(1), Rat(4)));
    CHECK(c2.a == P("x^2+1"));
    CHECK(c2.m == 2);
    CHECK(c2.k == Rat(4));
    CHECK_THROWS_AS(d2_alt(Rat(3), Rat(0)), std::invalid_argument);
}

TEST_CASE("open curves") {
    auto cs = unresolved_curves();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].typo_suspect);
    CHECK_FALSE(cs[1].typo_suspect);
    CHECK(cs[1].singular_at(Rat(1)));
    CHECK(cs[1].rhs.eval(Rat(2)) == Rat(105));
    CHECK_FALSE(cs[1].point_at(Rat(2)));
}

TEST_CASE("parallel scan is deterministic") {
    std::vector<std::pair<int, Rat>> grid;
    for (int m : {4, 6, 8, 10, 12})
        for (long t : {0L, 2L, -1L}) grid.emplace_back(m, Rat(t));
    auto a = scan_families(grid, 1);
    auto b = scan_families(grid, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(scan_row_to_json(a[i]).dump() == scan_row_to_json(b[i]).dump());
    CHECK_FALSE(a[0].instance.regular);
    CHECK(a[1].report.has_value());
    CHECK_FALSE(a[6].error.empty());  // m = 8, t = 0
}
