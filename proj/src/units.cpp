#include "pellcf/units.hpp"

#include "pellcf/json_io.hpp"

namespace pellcf {

UnitCert closed_form_unit(const Poly& D) {
    if (D.degree() != 2 || !D.is_monic()) throw std::invalid_argument("closed_form_unit: expected monic quadratic");
    if (!is_squarefree(D)) throw std::invalid_argument("closed_form_unit: polynomial is not squarefree");
    const Rat v = D.coeff(1) / Rat(2);
    const Rat w = D.coeff(0);
    UnitCert c;
    c.D = D;
    c.g = 0;
    c.a = Poly::x() + Poly(v);
    c.b = Poly(1);
    c.k = v * v - w;
    c.m = 1;
    c.r = 1;
    c.kappa = w - v * v;
    return c;
}

UnitSearch search_unit(const Poly& D, const Bounds& bounds) {
    UnitSearch out{std::nullopt, CFExpansion::init(D)};
    CFExpansion& e = out.expansion;
    e.detect(bounds);
    auto qp = e.quasi_period();
    if (!qp) return out;

    if (D.degree() == 2) {
        out.cert = closed_form_unit(D);
        return out;
    }

    auto [p, q] = convergent(e, qp->r - 1);
    const Rat scale = p.lc().inverse();
    UnitCert c;
    c.D = D;
    c.g = e.genus();
    c.a = p * scale;
    c.b = q * scale;
    if (!c.b.is_monic()) throw InvariantViolation("convergent numerator and denominator disagree in leading coefficient");
    Poly norm = c.a * c.a - D * c.b * c.b;
    if (norm.degree() != 0) throw InvariantViolation("convergent norm is not a nonzero constant: " + norm.to_string());
    c.k = norm.lc();
    c.m = c.a.degree();
    c.r = qp->r;
    c.kappa = qp->kappa;
    if (auto why = cert_violation(c); !why.empty()) throw InvariantViolation("unit certificate invalid: " + why);
    out.cert = std::move(c);
    return out;
}

std::optional<UnitCert> find_unit(const Poly& D, const Bounds& bounds) {
    return search_unit(D, bounds).cert;
}

std::optional<UnitCert> find_unit(const Poly& D) {
    if (D.degree() < 2 || D.degree() % 2 != 0)
        throw std::invalid_argument("find_unit: expected even degree >= 2, got " + D.to_string());
    return find_unit(D, Bounds::for_genus(D.degree() / 2 - 1));
}

int torsion_order(const UnitCert& cert) {
    if (cert.g == 1 && cert.m != cert.r + 1)
        throw InvariantViolation("genus 1 requires m = r + 1, got m=" + std::to_string(cert.m) +
                                 " r=" + std::to_string(cert.r));
    return cert.a.degree();
}

IntegralIdentity integrand(const UnitCert& cert) {
    return IntegralIdentity{cert.D, exact_div(cert.a.derivative(), cert.b), cert.a, cert.b};
}

bool verify_identity(const IntegralIdentity& id) {
    if (id.b.is_zero() || id.D.is_zero()) return false;
    if (id.f * id.b != id.a.derivative()) return false;
    return id.f * id.a * Rat(2) == id.b.derivative() * id.D * Rat(2) + id.b * id.D.derivative();
}

namespace {

bool is_single_term(const Poly& p) {
    int terms = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++terms;
    return terms <= 1;
}

std::string as_text(const IntegralIdentity& id) {
    const std::string d = id.D.to_string();
    const std::string f = is_single_term(id.f) ? id.f.to_string() : "(" + id.f.to_string() + ")";
    std::string b = id.b == Poly(1) ? "" : "(" + id.b.to_string() + ")·";
    return "∫ " + f + "/√(" + d + ") dx = log(" + id.a.to_string() + "+" + b + "√(" + d + "))";
}

std::string as_latex(const IntegralIdentity& id) {
    const std::string d = id.D.to_latex();
    std::string b = id.b == Poly(1) ? "" : "\\left(" + id.b.to_latex() + "\\right)";
    std::string out;
    out += "\\documentclass{article}\n";
    out += "\\usepackage{amsmath}\n";
    out += "\\begin{document}\n";
    out += "\\[\n";
    out += "\\int \\frac{\\left(" + id.f.to_latex() + "\\right)\\,dx}{\\sqrt{" + d + "}} = \\log\\left(" +
           id.a.to_latex() + " + " + b + "\\sqrt{" + d + "}\\right)\n";
    out += "\\]\n";
    out += "\\end{document}\n";
    return out;
}

}  // namespace

std::string emit_identity(const IntegralIdentity& id, IdentityFormat format) {
    if (!verify_identity(id)) throw std::invalid_argument("emit_identity: identity does not verify");
    switch (format) {
        case IdentityFormat::Text:
            return as_text(id);
        case IdentityFormat::Latex:
            return as_latex(id);
        case IdentityFormat::Json:
            return identity_to_json(id).dump();
    }
    throw std::invalid_argument("emit_identity: unknown format");
}

}  // namespace pellcf
