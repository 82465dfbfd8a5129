#pragma once

// Arithmetic in Q(c), c^2 = k for a nonsquare rational k, and in Q(c)[x].

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pellcf/cert.hpp"
#include "pellcf/poly.hpp"

namespace pellcf {

class QuadCtx {
public:
    /// Throws std::invalid_argument when k is zero or a square in Q.
    explicit QuadCtx(Rat k);

    const Rat& k() const { return k_; }

    friend bool operator==(const QuadCtx&, const QuadCtx&) = default;

private:
    Rat k_;
};

/// p + q*c.
class QNum {
public:
    QNum(QuadCtx ctx, Rat p = Rat(0), Rat q = Rat(0));
    static QNum generator(const QuadCtx& ctx) { return QNum(ctx, Rat(0), Rat(1)); }

    const QuadCtx& ctx() const { return ctx_; }
    const Rat& p() const { return p_; }
    const Rat& q() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_rational() const { return q_.is_zero(); }

    QNum conj() const { return QNum(ctx_, p_, -q_); }
    Rat norm() const { return p_ * p_ - ctx_.k() * q_ * q_; }
    Rat trace() const { return p_ + p_; }
    /// Throws std::domain_error on zero.
    QNum inverse() const;

    QNum operator-() const { return QNum(ctx_, -p_, -q_); }
    friend QNum operator+(const QNum& a, const QNum& b);
    friend QNum operator-(const QNum& a, const QNum& b);
    friend QNum operator*(const QNum& a, const QNum& b);
    friend QNum operator/(const QNum& a, const QNum& b) { return a * b.inverse(); }
    friend bool operator==(const QNum&, const QNum&) = default;

    /// "p + q*sqrt(k)"; just "p" when q is zero.
    std::string to_string() const;

private:
    QuadCtx ctx_;
    Rat p_;
    Rat q_;
};

/// Polynomial over Q(c). Same normal form rules as Poly.
class QPoly {
public:
    explicit QPoly(QuadCtx ctx) : ctx_(std::move(ctx)) {}
    QPoly(QuadCtx ctx, std::vector<QNum> coeffs);
    QPoly(QuadCtx ctx, const Poly& rational);
    /// rational + c * irrational
    QPoly(QuadCtx ctx, const Poly& rational, const Poly& irrational);

    const QuadCtx& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<QNum>& coeffs() const { return c_; }
    QNum coeff(int i) const;
    QNum lc() const { return c_.empty() ? QNum(ctx_) : c_.back(); }

    /// Components U, V with this = U + c*V.
    Poly rational_part() const;
    Poly irrational_part() const;
    bool is_rational() const { return irrational_part().is_zero(); }

    QPoly conj() const;
    QPoly monic() const;
    /// x -> x + shift
    QPoly shifted(const QNum& shift) const;
    /// this * conj(this), which lies in Q[x].
    Poly norm() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QNum& s);
    friend bool operator==(const QPoly&, const QPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    QuadCtx ctx_;
    std::vector<QNum> c_;
};

struct QDivRem {
    QPoly quot;
    QPoly rem;
};

QDivRem qdivrem(const QPoly& n, const QPoly& d);
QPoly qexact_div(const QPoly& n, const QPoly& d);

/// Monic gcd over Q(c). Throws std::invalid_argument on mismatched contexts,
/// std::domain_error when both are zero.
QPoly qpoly_gcd(const QPoly& p, const QPoly& q);

/// Monic irreducible factors over Q(c) of a squarefree p in Q[x], by
/// shifting until the norm is squarefree, factoring the norm over Q and
/// taking gcds.
std::vector<QPoly> factor_over_quadratic(const Poly& p, const QuadCtx& ctx);

/// The fundamental unit was not fundamental: 2 deg d = m would make
/// d_+ + y*d_- a smaller unit.
class NonFundamentalUnit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// k = c^2 with c in Q (c > 0): b = d_+ d_-, D = ((a+c)/d_+^2)((a-c)/d_-^2).
struct RationalSplit {
    Rat c;
    Poly d_plus;
    Poly d_minus;
    Poly cof_plus;
    Poly cof_minus;
};

/// k nonsquare: b = d conj(d), D = ((a+c)/d^2) * conj((a+c)/d^2).
struct ConjugateSplit {
    QuadCtx ctx;
    QPoly d;
    QPoly d_conj;
    QPoly cof;
    QPoly cof_conj;
};

struct UnitSplit {
    std::variant<RationalSplit, ConjugateSplit> parts;
    /// deg d_+ (rational case) or deg d (conjugate case).
    int s = 0;

    bool k_square() const { return std::holds_alternative<RationalSplit>(parts); }
};

/// Splits b and D using gcds with a +/- c. Every product identity is
/// re-checked exactly. Throws std::invalid_argument for an invalid
/// certificate and NonFundamentalUnit when 2 deg d_+ = m or 2 deg d_- = m.
UnitSplit split_unit_factor(const UnitCert& cert);

}  // namespace pellcf
