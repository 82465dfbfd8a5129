#include "pellcf/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace pellcf {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<mpz_class>;
using FpPoly = std::vector<u64>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd prime below 2^31.

class Fp {
public:
    explicit Fp(u64 p) : p_(p) {}
    u64 p() const { return p_; }

    u64 add(u64 a, u64 b) const { return (a + b) % p_; }
    u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p_ - 2); }
    u64 reduce(const mpz_class& z) const {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        return r.get_ui();
    }

    static void trim(FpPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
        trim(r);
        return r;
    }
    FpPoly scale(const FpPoly& a, u64 s) const {
        FpPoly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s);
        trim(r);
        return r;
    }
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& n, const FpPoly& d) const {
        if (deg(n) < deg(d)) return {{}, n};
        FpPoly r = n;
        FpPoly q(n.size() - d.size() + 1, 0);
        u64 inv_lc = inv(d.back());
        for (int k = deg(n); k >= deg(d); --k) {
            u64 c = mul(r[static_cast<std::size_t>(k)], inv_lc);
            if (c == 0) continue;
            auto off = static_cast<std::size_t>(k - deg(d));
            q[off] = c;
            for (std::size_t j = 0; j < d.size(); ++j) r[off + j] = sub(r[off + j], mul(c, d[j]));
        }
        r.resize(d.size() - 1);
        trim(r);
        trim(q);
        return {q, r};
    }
    FpPoly rem(const FpPoly& n, const FpPoly& d) const { return divrem(n, d).second; }
    FpPoly monic(const FpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s*a + t*b = 1 for coprime a, b.
    std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divrem(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 c = inv(r0.front());
        return {scale(s0, c), scale(t0, c)};
    }
    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
        trim(r);
        return r;
    }
    FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& m) const {
        FpPoly r{1};
        base = rem(base, m);
        for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
            r = rem(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = rem(mul(r, base), m);
        }
        return r;
    }
    FpPoly from(const ZPoly& z) const {
        FpPoly r(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) r[i] = reduce(z[i]);
        trim(r);
        return r;
    }

private:
    u64 p_;
};

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<FpPoly, int>> distinct_degree(const Fp& F, FpPoly f) {
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x{0, 1};
    FpPoly h = F.rem(x, f);
    int d = 1;
    while (Fp::deg(f) >= 2 * d) {
        h = F.powmod(h, mpz_class(static_cast<unsigned long>(F.p())), f);
        FpPoly g = F.gcd(f, F.sub(h, x));
        if (Fp::deg(g) > 0) {
            out.emplace_back(g, d);
            f = F.divrem(f, g).first;
            h = F.rem(h, f);
        }
        ++d;
    }
    if (Fp::deg(f) > 0) out.emplace_back(f, Fp::deg(f));
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (Fp::deg(g) == d) {
        out.push_back(F.monic(g));
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
    const mpz_class e = (pd - 1) / 2;
    while (true) {
        FpPoly a(static_cast<std::size_t>(Fp::deg(g)));
        for (auto& c : a) c = rng() % F.p();
        Fp::trim(a);
        if (Fp::deg(a) < 1) continue;
        FpPoly u = F.gcd(g, a);
        if (Fp::deg(u) == 0) u = F.gcd(g, F.sub(F.powmod(a, e, g), FpPoly{1}));
        if (Fp::deg(u) > 0 && Fp::deg(u) < Fp::deg(g)) {
            equal_degree(F, u, d, rng, out);
            equal_degree(F, F.divrem(g, u).first, d, rng, out);
            return;
        }
    }
}

std::vector<u64> small_primes() {
    std::vector<u64> ps;
    const u64 limit = 5000;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        if (i > 2) ps.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return ps;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers.

ZPoly to_primitive_z(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(p.coeffs().size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        mpq_class v = p.coeffs()[i].raw() * mpq_class(l);
        z[i] = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

Poly from_z(const ZPoly& z) {
    std::vector<Rat> v;
    v.reserve(z.size());
    for (const auto& c : z) v.emplace_back(c);
    return Poly(std::move(v));
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZPoly lift(const FpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

// Given cur = g*h (mod p) with g monic and gcd(g, h) = 1 mod p, lift to
// cur = G*H (mod p^e).
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& F, const ZPoly& cur, const FpPoly& g, const FpPoly& h, int e) {
    auto [s, t] = F.bezout(g, h);
    ZPoly G = lift(g), H = lift(h);
    mpz_class q = static_cast<unsigned long>(F.p());
    for (int j = 1; j < e; ++j) {
        ZPoly E(std::max(cur.size(), G.size() + H.size() - 1), 0);
        for (std::size_t i = 0; i < cur.size(); ++i) E[i] = cur[i];
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t k = 0; k < H.size(); ++k) E[i + k] -= G[i] * H[k];
        for (auto& c : E) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
        FpPoly err = F.from(E);
        auto [quo, rem] = F.divrem(F.mul(t, err), g);
        FpPoly dg = rem;
        FpPoly dh = F.add(F.mul(s, err), F.mul(h, quo));
        if (G.size() < dg.size()) G.resize(dg.size(), 0);
        if (H.size() < dh.size()) H.resize(dh.size(), 0);
        for (std::size_t i = 0; i < dg.size(); ++i) G[i] += q * static_cast<unsigned long>(dg[i]);
        for (std::size_t i = 0; i < dh.size(); ++i) H[i] += q * static_cast<unsigned long>(dh[i]);
        q *= static_cast<unsigned long>(F.p());
    }
    for (auto& c : G) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    for (auto& c : H) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
    return {G, H};
}

std::vector<FpPoly> factor_mod_p(const Fp& F, const FpPoly& f, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    for (auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
    return out;
}

int count_mod_p(const Fp& F, const FpPoly& f) {
    int n = 0;
    for (auto& [g, d] : distinct_degree(F, F.monic(f))) n += Fp::deg(g) / d;
    return n;
}

// Irreducible factors over Z of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Pick the good prime with the fewest modular factors among a handful.
    std::vector<u64> candidates;
    u64 best_p = 0;
    int best_count = n + 1;
    for (u64 p : small_primes()) {
        Fp F(p);
        if (F.reduce(f.back()) == 0) continue;
        FpPoly fp = F.from(f);
        if (Fp::deg(F.gcd(fp, F.derivative(fp))) != 0) continue;
        int c = count_mod_p(F, fp);
        if (c < best_count) {
            best_count = c;
            best_p = p;
        }
        candidates.push_back(p);
        if (best_count == 1 || candidates.size() >= 6) break;
    }
    if (best_p == 0) throw std::logic_error("zassenhaus: no prime of good reduction found");
    if (best_count == 1) return {f};

    const Fp F(best_p);
    std::mt19937_64 rng(0x5eed5eedULL ^ best_p);
    std::vector<FpPoly> modular = factor_mod_p(F, F.from(f), rng);
    std::sort(modular.begin(), modular.end());

    // Coefficient bound for lc(f) * (any factor) / lc(factor).
    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, mpz_class(::abs(c)));
    mpz_class bound = maxc * (n + 1) * ::abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    int e = 1;
    mpz_class M = static_cast<unsigned long>(best_p);
    while (M <= 2 * bound) {
        M *= static_cast<unsigned long>(best_p);
        ++e;
    }

    // Multifactor lift by peeling one factor at a time.
    std::vector<ZPoly> lifted;
    ZPoly cur = f;
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        FpPoly rest{F.reduce(f.back())};
        for (std::size_t j = i + 1; j < modular.size(); ++j) rest = F.mul(rest, modular[j]);
        auto [G, H] = hensel_pair(F, cur, modular[i], rest, e);
        lifted.push_back(std::move(G));
        cur = std::move(H);
    }
    {
        // cur = lc * last factor (mod M); normalize to monic.
        mpz_class inv;
        mpz_class lcm = cur.back();
        mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), M.get_mpz_t());
        for (auto& c : cur) {
            c *= inv;
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        }
        lifted.push_back(std::move(cur));
    }

    // Recombination by trial division over Z.
    std::vector<ZPoly> found;
    Poly remaining = from_z(f);
    ZPoly rem_z = f;
    const mpz_class half = M / 2;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly g{mpz_class(rem_z.back())};
            for (auto i : idx) g = zmul_mod(g, lifted[i], M);
            for (auto& c : g)
                if (c > half) c -= M;
            Poly cand = from_z(to_primitive_z(from_z(g)));
            auto [q, r] = divrem(remaining, cand);
            if (r.is_zero()) {
                found.push_back(to_primitive_z(cand));
                remaining = q;
                rem_z = to_primitive_z(q);
                if (rem_z.back() < 0)
                    for (auto& c : rem_z) c = -c;
                for (auto it = idx.rbegin(); it != idx.rend(); ++it)
                    lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
                hit = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (remaining.degree() > 0) found.push_back(to_primitive_z(remaining));
    return found;
}

}  // namespace

bool factor_order_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        auto c = a.coeff(k) <=> b.coeff(k);
        if (c != 0) return c < 0;
    }
    return false;
}

Poly Factorization::expand() const {
    Poly r(unit);
    for (const auto& f : factors) r *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return r;
}

int Factorization::count() const {
    int n = 0;
    for (const auto& f : factors) n += f.multiplicity;
    return n;
}

std::vector<Factor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<Factor> out;
    if (p.degree() == 0) return out;
    Poly f = p.monic();
    Poly a = gcd(f, f.derivative());
    Poly b = exact_div(f, a);
    Poly c = exact_div(f.derivative(), a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Factorization factor_over_Q(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    Factorization out{p.lc(), {}};
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& z : zassenhaus(to_primitive_z(part))) out.factors.push_back({from_z(z).monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return factor_order_less(a.poly, b.poly); });
    return out;
}

std::vector<Rat> rational_roots(const Poly& p) {
    std::vector<Rat> roots;
    for (const auto& f : factor_over_Q(p).factors)
        if (f.poly.degree() == 1) roots.push_back(-f.poly.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace pellcf
