#pragma once

// Exact rationals backed by GMP. Always in lowest terms with positive
// denominator; zero is 0/1.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pellcf {

class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long n, long d);
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rat parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const { return Rat(::abs(v_)); }
    /// Throws std::domain_error when zero.
    Rat inverse() const;
    Rat pow(long e) const;

    /// Square root when this is the square of a rational.
    std::optional<Rat> sqrt() const;
    bool is_square() const { return sqrt().has_value(); }

    /// max(decimal digits of |num|, decimal digits of den).
    std::size_t digits() const;

    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_{0};
};

/// Exact integer square root, or nothing when n is not a perfect square.
std::optional<mpz_class> exact_isqrt(const mpz_class& n);

}  // namespace pellcf
