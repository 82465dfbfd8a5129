#include "pellcf/rational.hpp"

#include <stdexcept>

namespace pellcf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view n = s.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class nn(std::string(n), 10), dd(std::string(d), 10);
    if (dd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (neg) nn = -nn;
    return Rat(nn, dd);
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::optional<mpz_class> exact_isqrt(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> Rat::sqrt() const {
    auto n = exact_isqrt(num());
    if (!n) return std::nullopt;
    auto d = exact_isqrt(den());
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

std::size_t Rat::digits() const {
    auto count = [](mpz_class z) {
        z = ::abs(z);
        return z.get_str(10).size();
    };
    return std::max(count(num()), count(den()));
}

std::string Rat::to_string() const {
    return v_.get_str(10);
}

}  // namespace pellcf
