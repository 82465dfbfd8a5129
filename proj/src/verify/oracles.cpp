#include "pellcf/oracles.hpp"

namespace pellcf::oracle {

Rat cubic_discriminant(const Poly& cubic) {
    if (cubic.degree() != 3) throw std::invalid_argument("cubic_discriminant: expected a cubic");
    const Rat a = cubic.coeff(3), b = cubic.coeff(2), c = cubic.coeff(1), d = cubic.coeff(0);
    return Rat(18) * a * b * c * d - Rat(4) * b.pow(3) * d + b * b * c * c - Rat(4) * a * c.pow(3) -
           Rat(27) * a * a * d * d;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rat horner(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

std::optional<QNum> sqrt_in_field(const Rat& r, const QuadCtx& ctx) {
    if (auto s = r.sqrt()) return QNum(ctx, *s, Rat(0));
    if (auto s = (r * ctx.k()).sqrt()) return QNum(ctx, Rat(0), *s / ctx.k());
    return std::nullopt;
}

}  // namespace

std::vector<Rat> rational_roots_by_divisors(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots_by_divisors: zero polynomial");
    std::vector<Rat> roots;
    int low = 0;
    while (p.coeff(low).is_zero()) ++low;
    if (low > 0) roots.push_back(Rat(0));
    mpz_class l = 1;
    for (int i = low; i <= p.degree(); ++i) l = lcm(l, p.coeff(i).den());
    const mpz_class a0 = (p.coeff(low) * Rat(l)).num();
    const mpz_class an = (p.lc() * Rat(l)).num();
    if (p.degree() > low) {
        for (const auto& num : divisors(a0))
            for (const auto& den : divisors(an))
                for (int sgn : {1, -1}) {
                    Rat cand(mpz_class(num * sgn), den);
                    if (horner(p, cand).is_zero()) roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool square_in_quadratic_field(const Rat& r, const Rat& delta) {
    return r.is_square() || (r * delta).is_square();
}

QuarticSplit split_quartic(const Poly& q, const Rat& y, const Rat& delta) {
    QuadCtx ctx(delta);
    const Rat c3 = q.coeff(3), c2 = q.coeff(2), c0 = q.coeff(0);
    auto s1 = sqrt_in_field(y * y - Rat(4) * c0, ctx);
    auto s2 = sqrt_in_field(c3 * c3 - Rat(4) * (c2 - y), ctx);
    QuarticSplit out;
    if (!s1 || !s2) return out;
    const QNum half(ctx, Rat(1, 2));
    const QNum yq(ctx, y), c3q(ctx, c3);
    const QNum P1 = (yq + *s1) * half, P2 = (yq - *s1) * half;
    const QNum S1 = (-c3q + *s2) * half, S2 = (-c3q - *s2) * half;
    const QPoly target(ctx, q);
    auto quad = [&](const QNum& S, const QNum& P) {
        return QPoly(ctx, std::vector<QNum>{P, -S, QNum(ctx, Rat(1))});
    };
    for (auto [a, b] : {std::pair{P1, P2}, std::pair{P2, P1}}) {
        QPoly f = quad(S1, a), g = quad(S2, b);
        if (f * g == target) {
            out.factors = std::make_pair(f, g);
            return out;
        }
    }
    return out;
}

GaloisLabel galois_irreducible_quartic(const Poly& q) {
    if (q.degree() != 4 || !q.is_monic()) throw std::invalid_argument("oracle: expected a monic quartic");
    const Rat c3 = q.coeff(3), c2 = q.coeff(2), c1 = q.coeff(1), c0 = q.coeff(0);
    // z^3 - c2 z^2 + (c1 c3 - 4 c0) z - (c1^2 + c0 c3^2 - 4 c0 c2)
    Poly res({Rat(4) * c0 * c2 - c1 * c1 - c0 * c3 * c3, c1 * c3 - Rat(4) * c0, -c2, Rat(1)});
    const Rat delta = cubic_discriminant(res);
    auto roots = rational_roots_by_divisors(res);
    if (roots.empty()) return delta.is_square() ? GaloisLabel::A4 : GaloisLabel::S4;
    if (roots.size() >= 2) return GaloisLabel::V4;
    return split_quartic(q, roots.front(), delta).factors ? GaloisLabel::C4 : GaloisLabel::D4;
}

Poly random_quartic(std::mt19937_64& rng, int bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    std::vector<Rat> c(5);
    for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = Rat(static_cast<long>(rng() % span) - bound);
    c[4] = Rat(1);
    return Poly(std::move(c));
}

}  // namespace pellcf::oracle
