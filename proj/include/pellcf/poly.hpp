#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pellcf/rational.hpp"

namespace pellcf {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Thrown when a polynomial string does not follow the accepted syntax.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that must divide exactly leaves a remainder.
/// Inside the engines this signals a broken invariant, not bad input.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
/// The top coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly x() { return monomial(Rat(1), 1); }
    static Poly monomial(const Rat& c, int deg);

    /// Parses an expression in x over Q: + - * ^, parentheses, division by
    /// nonzero constants, and juxtaposition ("2x", "3(x+1)"). Examples:
    /// "x^4+4*x^3-6*x^2+4*x+1", "(x^2+7/4)^2+8*(x-1/2)". Throws ParseError.
    static Poly parse(std::string_view text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }

    std::span<const Rat> coeffs() const { return c_; }
    /// Coefficient of x^i; zero outside the stored range.
    Rat coeff(int i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly monic() const;
    Poly derivative() const;
    Rat eval(const Rat& at) const;
    /// p(x) -> p(-x)
    Poly reflect() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(unsigned e) const;

    /// Largest decimal digit count over all coefficients (0 for zero).
    std::size_t max_digits() const;

    /// Descending powers in the same syntax parse() accepts.
    std::string to_string() const;
    std::string to_latex() const;

private:
    void trim();
    std::vector<Rat> c_;
};

struct DivRem {
    Poly quot;
    Poly rem;
};

/// n = q*d + r with deg r < deg d. Throws std::domain_error if d is zero.
DivRem divrem(const Poly& n, const Poly& d);

/// n / d, throwing InexactDivision if the remainder is nonzero.
Poly exact_div(const Poly& n, const Poly& d);

bool divides(const Poly& d, const Poly& n);

/// Monic gcd; gcd(p, 0) = monic(p). Throws std::domain_error if both are zero.
Poly gcd(const Poly& p, const Poly& q);

/// True iff gcd(D, D') is constant. Throws std::domain_error on zero input.
bool is_squarefree(const Poly& D);

/// D = A^2 + R with A the polynomial part of sqrt(D) at infinity.
struct SqrtSplit {
    Poly A;
    Poly R;
};

/// Requires D monic of even degree; the result has A monic of degree
/// deg D / 2 and deg R <= deg D / 2 - 1.
SqrtSplit polypart_sqrt(const Poly& D);

Rat resultant(const Poly& p, const Poly& q);

/// (-1)^(n(n-1)/2) res(p, p') / lc(p); requires deg p >= 2.
Rat discriminant(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace pellcf
