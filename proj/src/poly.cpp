#include "pellcf/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pellcf {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Rat& c, int deg) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    if (c.is_zero()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Rat inv = lc().inverse();
    return *this * inv;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& at) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::reflect() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::size_t Poly::max_digits() const {
    std::size_t d = 0;
    for (const auto& c : c_) d = std::max(d, c.digits());
    return d;
}

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() != '-') out += '+';
        out += terms[i];
    }
    return out;
}

}  // namespace

std::string Poly::to_string() const {
    std::vector<std::string> terms;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (k == 0) {
            terms.push_back(c.to_string());
            continue;
        }
        std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
        if (c == Rat(1))
            terms.push_back(mono);
        else if (c == Rat(-1))
            terms.push_back("-" + mono);
        else
            terms.push_back(c.to_string() + "*" + mono);
    }
    return join_terms(terms);
}

std::string Poly::to_latex() const {
    auto frac = [](const Rat& a) {
        if (a.is_integer()) return a.num().get_str();
        return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
    };
    std::vector<std::string> terms;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string sign = c.sign() < 0 ? "-" : "";
        Rat a = c.abs();
        if (k == 0) {
            terms.push_back(sign + frac(a));
            continue;
        }
        std::string mono = k == 1 ? "x" : "x^{" + std::to_string(k) + "}";
        terms.push_back(sign + (a == Rat(1) ? "" : frac(a)) + mono);
    }
    return join_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Poly parse() {
        if (s_.empty()) fail("empty polynomial");
        Poly p = expr();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    static bool is_var(char c) { return c == 'x' || c == 'X'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse polynomial '" + std::string(text_) + "': " + why +
                         " at offset " + std::to_string(pos_));
    }

    // expr := ['+'|'-'] term {('+'|'-') term}
    Poly expr() {
        Poly acc;
        bool first = true;
        while (true) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = s_[pos_++] == '-';
            } else if (!first) {
                break;
            }
            first = false;
            Poly t = term();
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    // term := power {['*'|'/'] power}; juxtaposition before 'x' or '(' multiplies
    Poly term() {
        Poly acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '/') {
                ++pos_;
                Poly d = power();
                if (d.is_zero()) fail("division by zero");
                if (d.degree() != 0) fail("division by a non-constant");
                acc = acc * d.lc().inverse();
            } else if (is_var(c) || c == '(') {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    Poly power() {
        Poly b = base();
        if (peek() != '^') return b;
        ++pos_;
        std::string d = digits();
        if (d.size() > 4) fail("exponent too large");
        return b.pow(std::stoi(d));
    }

    Poly base() {
        char c = peek();
        if (is_var(c)) {
            ++pos_;
            return Poly::x();
        }
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Rat(mpz_class(digits(), 10)));
        fail("expected a number, 'x' or '('");
    }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
        if (d.empty()) fail("expected digits");
        return d;
    }

    std::string_view text_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) {
    return PolyParser(text).parse();
}

DivRem divrem(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (n.degree() < d.degree()) return {Poly(), n};
    const int dd = d.degree();
    const Rat inv = d.lc().inverse();
    std::vector<Rat> r(n.coeffs().begin(), n.coeffs().end());
    std::vector<Rat> q(static_cast<std::size_t>(n.degree() - dd) + 1);
    for (int k = n.degree(); k >= dd; --k) {
        Rat c = r[static_cast<std::size_t>(k)] * inv;
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= c * d.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& n, const Poly& d) {
    auto [q, r] = divrem(n, d);
    if (!r.is_zero())
        throw InexactDivision("inexact division of " + n.to_string() + " by " + d.to_string());
    return q;
}

bool divides(const Poly& d, const Poly& n) {
    return divrem(n, d).rem.is_zero();
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = divrem(a, b).rem;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

bool is_squarefree(const Poly& D) {
    if (D.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
    if (D.degree() <= 1) return true;
    return gcd(D, D.derivative()).degree() == 0;
}

SqrtSplit polypart_sqrt(const Poly& D) {
    if (D.degree() < 2 || D.degree() % 2 != 0)
        throw std::invalid_argument("polypart_sqrt: degree must be even and positive, got " + D.to_string());
    if (!D.is_monic()) throw std::invalid_argument("polypart_sqrt: polynomial must be monic");
    const int n = D.degree() / 2;
    Poly A = Poly::monomial(Rat(1), n);
    for (int j = n - 1; j >= 0; --j) {
        Rat c = (D - A * A).coeff(n + j) / Rat(2);
        A += Poly::monomial(c, j);
    }
    return {A, D - A * A};
}

Rat resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Rat(0);
    Poly a = p, b = q;
    Rat acc(1);
    while (true) {
        if (b.degree() == 0) return acc * b.lc().pow(a.degree());
        if (a.degree() == 0) return acc * a.lc().pow(b.degree());
        Poly r = divrem(a, b).rem;
        if (r.is_zero()) return Rat(0);
        if ((a.degree() * b.degree()) % 2 != 0) acc = -acc;
        acc *= b.lc().pow(a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

Rat discriminant(const Poly& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
    Rat r = resultant(p, p.derivative()) / p.lc();
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace pellcf
