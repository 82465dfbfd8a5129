#include "pellcf/quadext.hpp"

#include <algorithm>

#include "pellcf/factor.hpp"

namespace pellcf {

namespace {

void require_same(const QuadCtx& a, const QuadCtx& b) {
    if (!(a == b))
        throw std::invalid_argument("mismatched quadratic contexts: sqrt(" + a.k().to_string() + ") vs sqrt(" +
                                    b.k().to_string() + ")");
}

}  // namespace

QuadCtx::QuadCtx(Rat k) : k_(std::move(k)) {
    if (k_.is_zero()) throw std::invalid_argument("QuadCtx: k must be nonzero");
    if (k_.is_square()) throw std::invalid_argument("QuadCtx: k = " + k_.to_string() + " is a square in Q");
}

// ---------------------------------------------------------------------------

QNum::QNum(QuadCtx ctx, Rat p, Rat q) : ctx_(std::move(ctx)), p_(std::move(p)), q_(std::move(q)) {}

QNum QNum::inverse() const {
    Rat n = norm();
    if (n.is_zero()) throw std::domain_error("QNum: inverse of zero");
    return QNum(ctx_, p_ / n, -q_ / n);
}

QNum operator+(const QNum& a, const QNum& b) {
    require_same(a.ctx_, b.ctx_);
    return QNum(a.ctx_, a.p_ + b.p_, a.q_ + b.q_);
}

QNum operator-(const QNum& a, const QNum& b) {
    require_same(a.ctx_, b.ctx_);
    return QNum(a.ctx_, a.p_ - b.p_, a.q_ - b.q_);
}

QNum operator*(const QNum& a, const QNum& b) {
    require_same(a.ctx_, b.ctx_);
    return QNum(a.ctx_, a.p_ * b.p_ + a.ctx_.k() * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_);
}

std::string QNum::to_string() const {
    if (q_.is_zero()) return p_.to_string();
    return p_.to_string() + " + " + q_.to_string() + "*sqrt(" + ctx_.k().to_string() + ")";
}

// ---------------------------------------------------------------------------

QPoly::QPoly(QuadCtx ctx, std::vector<QNum> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_) require_same(ctx_, c.ctx());
    trim();
}

QPoly::QPoly(QuadCtx ctx, const Poly& rational) : QPoly(std::move(ctx), rational, Poly()) {}

QPoly::QPoly(QuadCtx ctx, const Poly& rational, const Poly& irrational) : ctx_(std::move(ctx)) {
    const int n = std::max(rational.degree(), irrational.degree()) + 1;
    for (int i = 0; i < n; ++i) c_.emplace_back(ctx_, rational.coeff(i), irrational.coeff(i));
    trim();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QNum QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return QNum(ctx_);
    return c_[static_cast<std::size_t>(i)];
}

Poly QPoly::rational_part() const {
    std::vector<Rat> v;
    for (const auto& c : c_) v.push_back(c.p());
    return Poly(std::move(v));
}

Poly QPoly::irrational_part() const {
    std::vector<Rat> v;
    for (const auto& c : c_) v.push_back(c.q());
    return Poly(std::move(v));
}

QPoly QPoly::conj() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = c.conj();
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

QPoly QPoly::shifted(const QNum& shift) const {
    // Horner: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) + ...)
    QPoly lin(ctx_, {shift, QNum(ctx_, Rat(1))});
    QPoly acc(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly(ctx_, {*it});
    return acc;
}

Poly QPoly::norm() const {
    QPoly n = *this * conj();
    if (!n.is_rational()) throw std::logic_error("QPoly::norm: result not rational");
    return n.rational_part();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    require_same(a.ctx_, b.ctx_);
    return QPoly(a.ctx_, a.rational_part() + b.rational_part(), a.irrational_part() + b.irrational_part());
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    require_same(a.ctx_, b.ctx_);
    return QPoly(a.ctx_, a.rational_part() - b.rational_part(), a.irrational_part() - b.irrational_part());
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    require_same(a.ctx_, b.ctx_);
    // (U1 + cV1)(U2 + cV2) = U1U2 + k V1V2 + c(U1V2 + V1U2)
    Poly u1 = a.rational_part(), v1 = a.irrational_part();
    Poly u2 = b.rational_part(), v2 = b.irrational_part();
    return QPoly(a.ctx_, u1 * u2 + a.ctx_.k() * (v1 * v2), u1 * v2 + v1 * u2);
}

QPoly operator*(const QPoly& a, const QNum& s) {
    return a * QPoly(a.ctx_, {s});
}

std::string QPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const QNum& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (k > 0 && c == QNum(ctx_, Rat(1)))
            out += mono;
        else if (k == 0)
            out += "(" + c.to_string() + ")";
        else
            out += "(" + c.to_string() + ")*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------

QDivRem qdivrem(const QPoly& n, const QPoly& d) {
    require_same(n.ctx(), d.ctx());
    if (d.is_zero()) throw std::domain_error("QPoly division by zero");
    const QuadCtx& ctx = n.ctx();
    if (n.degree() < d.degree()) return {QPoly(ctx), n};
    std::vector<QNum> r = n.coeffs();
    std::vector<QNum> q(static_cast<std::size_t>(n.degree() - d.degree()) + 1, QNum(ctx));
    const QNum inv = d.lc().inverse();
    const int dd = d.degree();
    for (int k = n.degree(); k >= dd; --k) {
        QNum c = r[static_cast<std::size_t>(k)] * inv;
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] = r[static_cast<std::size_t>(k - dd + j)] - c * d.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd), QNum(ctx));
    return {QPoly(ctx, std::move(q)), QPoly(ctx, std::move(r))};
}

QPoly qexact_div(const QPoly& n, const QPoly& d) {
    auto [q, r] = qdivrem(n, d);
    if (!r.is_zero()) throw InexactDivision("inexact division over Q(c) of " + n.to_string() + " by " + d.to_string());
    return q;
}

QPoly qpoly_gcd(const QPoly& p, const QPoly& q) {
    require_same(p.ctx(), q.ctx());
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    QPoly a = p, b = q;
    while (!b.is_zero()) {
        QPoly r = qdivrem(a, b).rem;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<QPoly> factor_over_quadratic(const Poly& p, const QuadCtx& ctx) {
    if (p.degree() < 1) throw std::invalid_argument("factor_over_quadratic: need a nonconstant polynomial");
    if (!is_squarefree(p)) throw std::invalid_argument("factor_over_quadratic: polynomial must be squarefree");
    const QPoly base(ctx, p.monic());
    for (long s = 1;; ++s) {
        const QNum shift(ctx, Rat(0), Rat(s));
        QPoly g = base.shifted(shift);
        Poly n = g.norm();
        if (!is_squarefree(n)) continue;
        std::vector<QPoly> out;
        for (const auto& f : factor_over_Q(n).factors) {
            QPoly h = qpoly_gcd(g, QPoly(ctx, f.poly));
            if (h.degree() > 0) out.push_back(h.shifted(-shift).monic());
        }
        std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a.to_string() < b.to_string();
        });
        return out;
    }
}

UnitSplit split_unit_factor(const UnitCert& cert) {
    if (auto why = cert_violation(cert); !why.empty())
        throw std::invalid_argument("split_unit_factor: invalid certificate: " + why);
    const auto check = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("split_unit_factor: identity failed: ") + what);
    };

    if (auto c = cert.k.sqrt()) {
        RationalSplit rs;
        rs.c = c->abs();
        Poly ap = cert.a + Poly(rs.c);
        Poly am = cert.a - Poly(rs.c);
        rs.d_plus = gcd(cert.b, ap);
        rs.d_minus = gcd(cert.b, am);
        if (2 * rs.d_plus.degree() == cert.m || 2 * rs.d_minus.degree() == cert.m)
            throw NonFundamentalUnit("2 deg d = m: the unit of degree " + std::to_string(cert.m) +
                                     " is not fundamental");
        check(rs.d_plus * rs.d_minus == cert.b, "b = d_+ d_-");
        rs.cof_plus = exact_div(ap, rs.d_plus * rs.d_plus);
        rs.cof_minus = exact_div(am, rs.d_minus * rs.d_minus);
        check(rs.cof_plus * rs.cof_minus == cert.D, "D = cof_+ cof_-");
        UnitSplit out{rs, rs.d_plus.degree()};
        return out;
    }

    QuadCtx ctx(cert.k);
    const QPoly b(ctx, cert.b);
    const QPoly a_plus_c(ctx, cert.a, Poly(1));
    ConjugateSplit cs{ctx, qpoly_gcd(b, a_plus_c), QPoly(ctx), QPoly(ctx), QPoly(ctx)};
    cs.d_conj = cs.d.conj();
    check(cs.d * cs.d_conj == b, "b = d conj(d)");
    cs.cof = qexact_div(a_plus_c, cs.d * cs.d);
    cs.cof_conj = cs.cof.conj();
    check(cs.cof * cs.cof_conj == QPoly(ctx, cert.D), "D = cof conj(cof)");
    const int s = cs.d.degree();
    return UnitSplit{std::move(cs), s};
}

}  // namespace pellcf
