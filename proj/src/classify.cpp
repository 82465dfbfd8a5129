#include "pellcf/classify.hpp"

#include <array>

#include "pellcf/units.hpp"

namespace pellcf {

namespace {

constexpr std::array<std::pair<GaloisLabel, const char*>, 6> kLabels{{
    {GaloisLabel::S4, "S4"},
    {GaloisLabel::A4, "A4"},
    {GaloisLabel::D4, "D4"},
    {GaloisLabel::C4, "C4"},
    {GaloisLabel::V4, "V4"},
    {GaloisLabel::Reducible, "reducible"},
}};

void require_monic_quartic(const Poly& q, const char* who) {
    if (q.degree() != 4 || !q.is_monic())
        throw std::invalid_argument(std::string(who) + ": expected a monic quartic, got " + q.to_string());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_string(GaloisLabel g) {
    for (auto [l, s] : kLabels)
        if (l == g) return s;
    throw std::invalid_argument("unknown Galois label");
}

GaloisLabel galois_label_from_string(const std::string& s) {
    for (auto [l, name] : kLabels)
        if (s == name) return l;
    throw std::invalid_argument("unknown Galois label '" + s + "'");
}

Poly resolvent_cubic(const Poly& q) {
    require_monic_quartic(q, "resolvent_cubic");
    const Rat c3 = q.coeff(3), c2 = q.coeff(2), c1 = q.coeff(1), c0 = q.coeff(0);
    return Poly({-(c1 * c1 + c0 * c3 * c3 - Rat(4) * c0 * c2), c1 * c3 - Rat(4) * c0, -c2, Rat(1)});
}

GaloisResult galois_quartic_detail(const Poly& q) {
    require_monic_quartic(q, "galois_quartic");
    if (!is_squarefree(q)) throw std::invalid_argument("galois_quartic: not squarefree: " + q.to_string());
    GaloisResult out;
    out.factors_Q = factor_over_Q(q);
    out.discriminant = discriminant(q);
    out.discriminant_square = out.discriminant.is_square();
    out.resolvent = resolvent_cubic(q);
    out.resolvent_roots = rational_roots(out.resolvent);
    if (!out.factors_Q.is_irreducible()) {
        out.label = GaloisLabel::Reducible;
        return out;
    }
    switch (out.resolvent_roots.size()) {
        case 0:
            out.label = out.discriminant_square ? GaloisLabel::A4 : GaloisLabel::S4;
            break;
        case 1: {
            // disc is not a square here: the resolvent has one rational root
            // and an irreducible quadratic factor with the same discriminant
            // class.
            out.factors_over_disc_field = factor_over_quadratic(q, QuadCtx(out.discriminant));
            out.label = out.factors_over_disc_field.size() > 1 ? GaloisLabel::C4 : GaloisLabel::D4;
            break;
        }
        default:
            out.label = GaloisLabel::V4;
    }
    return out;
}

GaloisLabel galois_quartic(const Poly& q) { return galois_quartic_detail(q).label; }

bool ClassReport::all_hold() const {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return parity_ok;
}

namespace {

void fill_common(ClassReport& rep, const UnitCert& cert) {
    rep.D = cert.D;
    rep.cert = cert;
    rep.k_square = cert.k.is_square();
    rep.factors_Q = factor_over_Q(cert.D);
    if (cert.D.degree() == 4) {
        auto gr = galois_quartic_detail(cert.D);
        rep.galois = gr.label;
        rep.resolvent = gr.resolvent;
        if (!gr.resolvent_roots.empty()) rep.resolvent_rational_zero = gr.resolvent_roots.front();
    }
}

// Exhibits the factorization of D forced by the unit, in both k cases.
void add_split_checks(ClassReport& rep, const UnitCert& cert) {
    const int m = cert.m, g = cert.g;
    UnitSplit sp = split_unit_factor(cert);
    rep.s = sp.s;
    if (auto* r = std::get_if<RationalSplit>(&sp.parts)) {
        const int s = sp.s;
        rep.factors_k_square = std::make_pair(r->cof_plus, r->cof_minus);
        bool degrees = r->cof_plus.degree() == m - 2 * s && r->cof_minus.degree() == 2 * g + 2 + 2 * s - m;
        rep.checks.push_back({"square_norm_factor_degrees", degrees,
                              "deg " + std::to_string(r->cof_plus.degree()) + " and " +
                                  std::to_string(r->cof_minus.degree()) + " with s=" + std::to_string(s)});
        rep.checks.push_back({"square_norm_factors_expand", r->cof_plus * r->cof_minus == cert.D,
                              "(" + r->cof_plus.to_string() + ")*(" + r->cof_minus.to_string() + ")"});
        rep.checks.push_back({"square_norm_b_split", r->d_plus * r->d_minus == cert.b,
                              "(" + r->d_plus.to_string() + ")*(" + r->d_minus.to_string() + ")"});
        if (m % 2 == 1)
            rep.checks.push_back({"odd_m_reducible", !rep.factors_Q.is_irreducible(),
                                  std::to_string(rep.factors_Q.count()) + " factors over Q"});
    } else {
        const auto& c = std::get<ConjugateSplit>(sp.parts);
        rep.factors_Qc = std::make_pair(c.cof, c.cof_conj);
        QPoly prod = c.cof * c.cof_conj;
        rep.checks.push_back({"conjugate_factor_degrees", c.cof.degree() == g + 1 && c.cof_conj.degree() == g + 1,
                              "deg " + std::to_string(c.cof.degree()) + " over Q(sqrt(" + cert.k.to_string() + "))"});
        rep.checks.push_back({"conjugate_factors_expand", prod.is_rational() && prod.rational_part() == cert.D,
                              "(" + c.cof.to_string() + ")*(" + c.cof_conj.to_string() + ")"});
        QPoly bprod = c.d * c.d_conj;
        rep.checks.push_back({"conjugate_b_split", bprod.is_rational() && bprod.rational_part() == cert.b,
                              "(" + c.d.to_string() + ")*(" + c.d_conj.to_string() + ")"});
    }
}

void require_cert(const UnitCert& cert) {
    if (auto why = cert_violation(cert); !why.empty()) throw std::invalid_argument("invalid certificate: " + why);
}

}  // namespace

ClassReport theorem1_report(const Poly& D, const UnitCert& cert) {
    if (cert.D != D) throw std::invalid_argument("theorem1_report: certificate is for a different polynomial");
    require_cert(cert);
    ClassReport rep;
    fill_common(rep, cert);
    const bool same_parity = (cert.m - cert.g) % 2 == 0;
    rep.parity_ok = !same_parity || rep.k_square;
    rep.checks.push_back({"parity_implies_square", rep.parity_ok,
                          "m=" + std::to_string(cert.m) + " g=" + std::to_string(cert.g) + " k=" + cert.k.to_string() +
                              " square=" + yes_no(rep.k_square)});
    add_split_checks(rep, cert);
    if (cert.g == 1) {
        bool ok = rep.galois && *rep.galois != GaloisLabel::S4 && *rep.galois != GaloisLabel::A4;
        rep.checks.push_back({"galois_order_divides_8", ok, rep.galois ? to_string(*rep.galois) : "none"});
    }
    return rep;
}

ClassReport theorem2_report(const UnitCert& cert, const CFExpansion& e) {
    require_cert(cert);
    auto qp = e.quasi_period();
    if (!qp || e.D() != cert.D || qp->r != cert.r || qp->kappa != cert.kappa)
        throw std::invalid_argument("theorem2_report: certificate does not come from this expansion");
    ClassReport rep;
    fill_common(rep, cert);
    const int r = cert.r;
    rep.parity_ok = !(r % 2 == 0) || cert.kappa == Rat(1);
    // (-1)^r kappa is the norm of the convergent before normalization.
    rep.checks.push_back({"even_r_unit_norm", rep.parity_ok,
                          "r=" + std::to_string(r) + " kappa=" + cert.kappa.to_string()});
    if (r % 2 == 0)
        rep.checks.push_back({"even_r_square_norm", rep.k_square, "k=" + cert.k.to_string()});
    add_split_checks(rep, cert);

    CFExpansion full = e;
    full.extend_to(r + 1);
    for (int h = 1; h <= r; ++h) {
        const CFLine& l = full.line(h);
        if (full.line(h + 1).P != l.P) continue;
        Poly f = l.Q.monic();
        bool ok = divides(l.Q, l.P) && divides(l.Q, cert.D) && f.degree() <= cert.g;
        rep.midpoint_factors.push_back(f);
        rep.checks.push_back({"midpoint_factor_h" + std::to_string(h), ok, f.to_string()});
    }
    return rep;
}

ClassReport full_report(const Poly& D) {
    auto search = search_unit(D, Bounds::for_genus(D.degree() / 2 - 1));
    if (!search.cert) {
        ClassReport rep;
        rep.D = D;
        rep.factors_Q = factor_over_Q(D);
        if (D.degree() == 4) {
            auto gr = galois_quartic_detail(D);
            rep.galois = gr.label;
            rep.resolvent = gr.resolvent;
            if (!gr.resolvent_roots.empty()) rep.resolvent_rational_zero = gr.resolvent_roots.front();
        }
        return rep;
    }
    ClassReport rep = theorem1_report(D, *search.cert);
    ClassReport second = theorem2_report(*search.cert, search.expansion);
    rep.parity_ok = rep.parity_ok && second.parity_ok;
    rep.midpoint_factors = second.midpoint_factors;
    for (auto& c : second.checks)
        if (c.name.rfind("even_r", 0) == 0 || c.name.rfind("midpoint", 0) == 0) rep.checks.push_back(std::move(c));
    return rep;
}

ScreenResult exceptionality_screen(const Poly& D) {
    if (D.degree() < 2 || D.degree() % 2 != 0 || !D.is_monic() || !is_squarefree(D))
        throw std::invalid_argument("exceptionality_screen: expected monic squarefree even degree, got " + D.to_string());
    ScreenResult out;
    if (D.degree() != 4) return out;
    out.label = galois_quartic(D);
    if (*out.label == GaloisLabel::S4 || *out.label == GaloisLabel::A4) {
        out.verdict = Verdict::NotExceptional;
        out.rule = to_string(*out.label);
    }
    return out;
}

namespace {

Json opt_rat(const std::optional<Rat>& r) { return r ? rat_to_json(*r) : Json(nullptr); }

}  // namespace

Json report_to_json(const ClassReport& r) {
    Json j;
    j["D"] = poly_to_json(r.D);
    j["cert"] = r.cert ? cert_to_json(*r.cert) : Json(nullptr);
    j["parity_ok"] = r.parity_ok;
    j["k_square"] = r.k_square;
    j["s"] = r.s ? Json(*r.s) : Json(nullptr);
    j["factors_Q"] = factorization_to_json(r.factors_Q);
    j["factors_Qc"] = r.factors_Qc ? Json::array({qpoly_to_json(r.factors_Qc->first), qpoly_to_json(r.factors_Qc->second)})
                                   : Json(nullptr);
    j["factors_k_square"] = r.factors_k_square
                                ? Json::array({poly_to_json(r.factors_k_square->first), poly_to_json(r.factors_k_square->second)})
                                : Json(nullptr);
    j["galois"] = r.galois ? Json(to_string(*r.galois)) : Json(nullptr);
    j["resolvent"] = poly_to_json(r.resolvent);
    j["resolvent_rational_zero"] = opt_rat(r.resolvent_rational_zero);
    Json mids = Json::array();
    for (const auto& p : r.midpoint_factors) mids.push_back(poly_to_json(p));
    j["midpoint_factors"] = std::move(mids);
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}});
    j["checks"] = std::move(checks);
    return j;
}

ClassReport report_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: report must be an object");
    ClassReport r;
    try {
        r.D = poly_from_json(j.at("D"));
        if (!j.at("cert").is_null()) r.cert = cert_from_json(j.at("cert"));
        r.parity_ok = j.at("parity_ok").get<bool>();
        r.k_square = j.at("k_square").get<bool>();
        if (!j.at("s").is_null()) r.s = j.at("s").get<int>();
        r.factors_Q = factorization_from_json(j.at("factors_Q"));
        if (const auto& f = j.at("factors_Qc"); !f.is_null())
            r.factors_Qc = std::make_pair(qpoly_from_json(f.at(0)), qpoly_from_json(f.at(1)));
        if (const auto& f = j.at("factors_k_square"); !f.is_null())
            r.factors_k_square = std::make_pair(poly_from_json(f.at(0)), poly_from_json(f.at(1)));
        if (!j.at("galois").is_null()) r.galois = galois_label_from_string(j.at("galois").get<std::string>());
        r.resolvent = poly_from_json(j.at("resolvent"));
        if (!j.at("resolvent_rational_zero").is_null()) r.resolvent_rational_zero = rat_from_json(j.at("resolvent_rational_zero"));
        for (const auto& p : j.at("midpoint_factors")) r.midpoint_factors.push_back(poly_from_json(p));
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(), c.at("witness").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: malformed report: ") + e.what());
    }
    return r;
}

}  // namespace pellcf
