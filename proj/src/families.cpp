#include "pellcf/families.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace pellcf {

namespace {

Rat half(const Rat& a) { return a / Rat(2); }

void require_nonzero(const Rat& d, int m, const Rat& t) {
    if (d.is_zero())
        throw std::domain_error("family m=" + std::to_string(m) + " undefined at t=" + t.to_string());
}

Poly shape_poly(const Rat& v, const Rat& w) {
    Poly inner = Poly::x() * Poly::x() + Poly(v - w * w);
    return inner * inner + (Poly::x() + Poly(w)) * (v * Rat(4));
}

}  // namespace

bool is_family_order(int m) { return (m >= 2 && m <= 10) || m == 12; }

FamilyParams family_params(int m, const Rat& t) {
    const Rat one(1), two(2);
    switch (m) {
        case 4:
            return {t, Rat(1, 2)};
        case 5:
            return {t, -half(t - one)};
        case 6:
            return {t * (t - one), one - half(t)};
        case 7:
            return {t * t * (t - one), -half(t * t - t - one)};
        case 8:
            require_nonzero(t, m, t);
            return {(t - one) * (two * t - one), -(two * t * t - Rat(4) * t + one) / (two * t)};
        case 9:
            return {t * t * (t - one) * (t * t - t + one), -half(t.pow(3) - t * t - one)};
        case 10: {
            Rat q = t * t - Rat(3) * t + one;
            require_nonzero(q, m, t);
            return {t.pow(3) * (two * t - one) * (t - one) / (q * q),
                    (two * t.pow(3) - two * t * t - two * t + one) / (two * q)};
        }
        case 12:
            require_nonzero(t, m, t);
            return {(t - one) * (two * t - one) * (Rat(3) * t * t - Rat(3) * t + one) * (two * t * t - two * t + one) /
                        t.pow(4),
                    -(Rat(6) * t.pow(4) - Rat(16) * t.pow(3) + Rat(14) * t * t - Rat(6) * t + one) / (two * t.pow(3))};
        default:
            throw std::invalid_argument("family_params: m must be in {4,...,10,12}, got " + std::to_string(m));
    }
}

std::string FamilyInstance::spec() const {
    if (m == 2) return "m=2,u=" + v.to_string() + ",w=" + w.to_string();
    if (m == 3) return "m=3,v=" + v.to_string() + ",w=" + w.to_string();
    return "m=" + std::to_string(m) + ",t=" + t.to_string();
}

FamilyInstance family_poly(int m, const Rat& t) {
    auto [v, w] = family_params(m, t);
    FamilyInstance inst{m, t, v, w, shape_poly(v, w), false};
    inst.regular = is_regular(inst);
    return inst;
}

FamilyInstance family_poly2(const Rat& u, const Rat& w) {
    Poly s = Poly::x() * Poly::x() + Poly(u);
    FamilyInstance inst{2, u, u, w, s * s + Poly(w * Rat(4)), false};
    inst.regular = is_regular(inst);
    return inst;
}

FamilyInstance family_poly3(const Rat& v, const Rat& w) {
    FamilyInstance inst{3, v, v, w, d3_toolkit(v, w).D3(), false};
    inst.regular = is_regular(inst);
    return inst;
}

FamilyInstance parse_family_spec(const std::string& spec) {
    std::optional<int> m;
    std::optional<Rat> t, u, v, w;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("family spec: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "m") {
            try {
                std::size_t used = 0;
                m = std::stoi(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw std::invalid_argument("family spec: bad m '" + val + "'");
            }
        } else if (key == "t") {
            t = Rat::parse(val);
        } else if (key == "u") {
            u = Rat::parse(val);
        } else if (key == "v") {
            v = Rat::parse(val);
        } else if (key == "w") {
            w = Rat::parse(val);
        } else {
            throw std::invalid_argument("family spec: unknown key '" + key + "'");
        }
    }
    if (!m || !is_family_order(*m)) throw std::invalid_argument("family spec: m must be in {2,...,10,12}");
    if (*m == 2) {
        if (!u || !w) throw std::invalid_argument("family spec: m=2 needs u and w");
        return family_poly2(*u, *w);
    }
    if (*m == 3) {
        if (!v || !w) throw std::invalid_argument("family spec: m=3 needs v and w");
        return family_poly3(*v, *w);
    }
    if (!t) throw std::invalid_argument("family spec: missing t");
    return family_poly(*m, *t);
}

bool is_regular(const FamilyInstance& inst) {
    if ((inst.m == 10 || inst.m == 12) &&
        (inst.t.is_zero() || inst.t == Rat(1) || inst.t == Rat(1, 2)))
        return false;
    if (!is_squarefree(inst.D)) return false;
    auto cert = find_unit(inst.D);
    return cert && torsion_order(*cert) == inst.m;
}

bool is_regular(int m, const Rat& t) {
    if (m == 2 || m == 3) throw std::invalid_argument("is_regular: m=2 and m=3 take two parameters");
    try {
        return family_poly(m, t).regular;
    } catch (const std::domain_error&) {
        return false;
    }
}

Rat expected_norm(int m, const Rat& t) {
    switch (m) {
        case 4:
        case 6:
            return Rat(4) * t;
        case 8:
            if (t.is_zero()) throw std::domain_error("expected_norm: m=8 undefined at t=0");
            return Rat(4) * (t - Rat(1)) * (Rat(2) * t - Rat(1)).pow(2) / t.pow(3);
        default:
            throw std::invalid_argument("expected_norm: m must be 4, 6 or 8");
    }
}

Table1Entry table1_expected(int m, Table1Column column, const Rat& s) {
    const Rat s2 = s * s;
    switch (m) {
        case 4:
            if (column == Table1Column::V4) return Table1Cell{(s2 - Rat(1)) / Rat(16), GaloisLabel::V4};
            return Table1Cell{-Rat(1, 16) / (s2 + Rat(1)), GaloisLabel::C4};
        case 6:
            if (column == Table1Column::C4) return std::monostate{};
            if (s2 == Rat(9)) throw std::domain_error("table1_expected: m=6 undefined at s^2=9");
            return Table1Cell{Rat(8) / (Rat(9) - s2), GaloisLabel::V4};
        case 8:
        case 12:
            return std::monostate{};
        case 10:
            if (column == Table1Column::C4) return Unresolved{"*"};
            return std::monostate{};
        default:
            throw std::invalid_argument("table1_expected: m must be in {4,6,8,10,12}");
    }
}

Table2Entry table2_expected(int m, Table2Column column, const Rat& s, int branch) {
    if (branch != 0 && branch != 1) throw std::invalid_argument("table2_expected: branch must be 0 or 1");
    const Rat s2 = s * s, one(1);
    const int n = static_cast<int>(column);
    switch (m) {
        case 4:
            if (column == Table2Column::Two)
                return Table2Cell{branch == 0 ? -s2 : Rat(4) * s2 * s2 - s2, n};
            if (column == Table2Column::Three) return Table2Cell{-((s2 - one) / Rat(4)).pow(2), n};
            return Table2Cell{-((s2 * s - s) / (s2 + one).pow(2)).pow(2), n};
        case 6:
            if (column == Table2Column::Two) {
                if (branch == 0) return Table2Cell{one - s2, n};
                return Table2Cell{(one + s2).pow(2) / (Rat(3) * s2 + one), n};
            }
            if (column == Table2Column::Three) return Table2Cell{one - ((s2 - one) / (s2 + Rat(3))).pow(2), n};
            return std::monostate{};
        case 8:
            if (column == Table2Column::Two) return Table2Cell{one / (s2 + one), n};
            if (column == Table2Column::Three) return Unresolved{"†"};
            return std::monostate{};
        default:
            throw std::invalid_argument("table2_expected: m must be 4, 6 or 8");
    }
}

namespace {

// rho and the sign the tabulated divisor x + sign*rho carries.
std::pair<Rat, int> tabulated_rho(int m, const Rat& t) {
    switch (m) {
        case 5:
            return {half(t + Rat(1)), -1};
        case 7:
            return {half(t * t - Rat(3) * t + Rat(1)), +1};
        case 9:
            return {half(t.pow(3) - Rat(3) * t * t + Rat(4) * t - Rat(1)), -1};
        default:
            throw std::invalid_argument("odd_linear_factor: m must be 5, 7 or 9");
    }
}

}  // namespace

SignResolution odd_linear_resolution(int m, const Rat& t) {
    auto [rho, sign] = tabulated_rho(m, t);
    const Poly D = family_poly(m, t).D;
    const Poly minus = Poly::x() - Poly(rho), plus = Poly::x() + Poly(rho);
    const bool dm = divides(minus, D), dp = divides(plus, D);
    if (rho.is_zero()) {
        if (!dm) throw InvariantViolation("odd_linear_factor: x does not divide D_" + std::to_string(m));
        return {m, t, minus, minus};
    }
    if (dm == dp)
        throw InvariantViolation("odd_linear_factor: " + std::string(dm ? "both" : "neither") +
                                 " of x -/+ " + rho.to_string() + " divide D_" + std::to_string(m) + " at t=" +
                                 t.to_string());
    return {m, t, sign < 0 ? minus : plus, dm ? minus : plus};
}

Poly odd_linear_factor(int m, const Rat& t) { return odd_linear_resolution(m, t).divisor; }

D3Toolkit::D3Toolkit(Rat v, Rat w) : v_(std::move(v)), w_(std::move(w)) {
    Poly s = Poly::x() * Poly::x() - Poly(w_ * w_);
    D3_ = s * s + (Poly::x() + Poly(w_)) * (v_ * Rat(4));
    F_ = exact_div(D3_, Poly::x() + Poly(w_));
}

Poly D3Toolkit::tabulated_cubic(const Rat& v) const {
    return Poly({w_.pow(3) - Rat(4) * v, -w_ * w_, -w_, Rat(1)});
}

D3Toolkit::A3Condition D3Toolkit::a3_condition(const Rat& t) const {
    A3Condition out;
    out.v_tab = Rat(8) * t * t * w_.pow(3) / (Rat(27) * t * t + Rat(1));
    out.cubic = tabulated_cubic(out.v_tab);
    out.discriminant = discriminant(out.cubic);
    out.square = out.discriminant.is_square();
    return out;
}

D3Toolkit::RootSplit D3Toolkit::root_split(const Rat& r) const {
    RootSplit out;
    out.v_tab = (w_ + r) * (w_ - r).pow(2) / Rat(4);
    out.cubic = tabulated_cubic(out.v_tab);
    out.linear = Poly::x() - Poly(r);
    out.quadratic = Poly({-w_ * w_ - r * w_ + r * r, r - w_, Rat(1)});
    out.expands = out.linear * out.quadratic == out.cubic;
    return out;
}

D3Toolkit::FullSplit D3Toolkit::full_split(const Rat& s) const {
    FullSplit out;
    const Rat s2 = s * s;
    out.v_tab = Rat(8) * w_.pow(3) * (s2 - Rat(1)).pow(2) / (s2 + Rat(3)).pow(3);
    out.cubic = tabulated_cubic(out.v_tab);
    out.roots = rational_roots(out.cubic);
    auto f = factor_over_Q(out.cubic);
    out.splits = true;
    for (const auto& fac : f.factors)
        if (fac.poly.degree() != 1) out.splits = false;
    return out;
}

D3Toolkit d3_toolkit(const Rat& v, const Rat& w) { return D3Toolkit(v, w); }

Poly d2_alt(const Rat& u, const Rat& k) {
    if (k.is_zero()) throw std::invalid_argument("d2_alt: k = 0 gives a square");
    Poly s = Poly::x() * Poly::x() + Poly(u);
    return s * s - Poly(k);
}

std::optional<Rat> PlaneCurve::point_at(const Rat& t) const { return rhs.eval(t).sqrt(); }

std::vector<PlaneCurve> unresolved_curves() {
    const Poly t = Poly::x();
    const Poly one(1);
    PlaneCurve c10{"u^2 = (t-1)(4t^2-2t-1)(2t-1)(t^2-3t+1)t",
                   (t - one) * (t * t * Rat(4) - t * Rat(2) - one) * (t * Rat(2) - one) * (t * t - t * Rat(3) + one) * t,
                   true, "tabulated with -2x- in the quadratic factor; read as -2t-; m=10, D4 cases"};
    PlaneCurve c8{"u^2 = (t^4-1)(t^2+2t-1)", (t.pow(4) - one) * (t * t + t * Rat(2) - one), false,
                  "m=8, three factors over Q"};
    return {c10, c8};
}

std::vector<TypoEntry> typo_ledger() {
    std::vector<TypoEntry> out;
    for (int m : {5, 7, 9}) {
        auto r = odd_linear_resolution(m, Rat(2));
        out.push_back({"m=" + std::to_string(m) + " linear factor at t=2", r.printed.to_string(),
                       r.divisor.to_string() + (r.matches_print() ? " (sign as tabulated)" : " (sign flipped)")});
    }
    out.push_back({"m=3 cubic cofactor", "x^3-w*x^2-w^2*x+w^3-4v",
                   "x^3-w*x^2-w^2*x+w^3+4v; conditions applied through v -> -v"});
    out.push_back({"m=5 reducible residual cubic", "t=s^2(s+1)/(s+1)", "t=s^2"});
    out.push_back({"m=10 open curve", "(4t^2-2x-1)", "(4t^2-2t-1)"});
    out.push_back({"residual cubic discriminants", "F_5 listed equal to F_7", "recorded only"});
    return out;
}

std::vector<ScanRow> scan_families(const std::vector<std::pair<int, Rat>>& grid, unsigned threads) {
    std::vector<ScanRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            ScanRow& row = rows[i];
            try {
                row.instance = family_poly(grid[i].first, grid[i].second);
                if (row.instance.regular) {
                    auto cert = find_unit(row.instance.D);
                    row.report = theorem1_report(row.instance.D, *cert);
                }
            } catch (const std::exception& e) {
                row.instance.m = grid[i].first;
                row.instance.t = grid[i].second;
                row.error = e.what();
            }
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return rows;
}

Json scan_row_to_json(const ScanRow& row) {
    Json j;
    j["instance"] = {{"spec", row.instance.spec()},
                     {"m", row.instance.m},
                     {"t", rat_to_json(row.instance.t)},
                     {"v", rat_to_json(row.instance.v)},
                     {"w", rat_to_json(row.instance.w)},
                     {"D", poly_to_json(row.instance.D)},
                     {"regular", row.instance.regular}};
    j["report"] = row.report ? report_to_json(*row.report) : Json(nullptr);
    if (!row.error.empty()) j["error"] = row.error;
    return j;
}

}  // namespace pellcf
