#include "pellcf/cfrac.hpp"

#include <sstream>

namespace pellcf {

std::string to_string(const CFStatus& s) {
    if (std::holds_alternative<Running>(s)) return "running";
    if (auto* q = std::get_if<QuasiPeriodic>(&s))
        return "quasi_periodic(r=" + std::to_string(q->r) + ", kappa=" + q->kappa.to_string() + ")";
    const auto& a = std::get<Aborted>(s);
    return std::string("aborted(") + (a.reason == AbortReason::MaxSteps ? "max_steps" : "max_digits") +
           " at h=" + std::to_string(a.at_step) + ")";
}

Bounds Bounds::for_genus(int g) {
    if (g == 1) return Bounds{11, 10000};
    return Bounds{50, 10000};
}

void Bounds::validate() const {
    if (max_steps <= 0 || max_digits == 0) throw std::invalid_argument("Bounds: both limits must be positive");
}

CFExpansion CFExpansion::init(const Poly& D) {
    if (D.degree() < 2 || D.degree() % 2 != 0)
        throw std::invalid_argument("expected even degree >= 2, got " + D.to_string());
    if (!D.is_monic()) throw std::invalid_argument("expected a monic polynomial, got " + D.to_string());
    if (!is_squarefree(D)) throw std::invalid_argument("polynomial is not squarefree: " + D.to_string());
    CFExpansion e;
    e.D_ = D;
    e.g_ = D.degree() / 2 - 1;
    e.A_ = polypart_sqrt(D).A;
    e.lines_.push_back(CFLine{0, e.A_, Poly(1), e.A_ * Rat(2)});
    return e;
}

const CFLine& CFExpansion::line(int h) const {
    if (h < 0 || h > last_index()) throw std::out_of_range("line " + std::to_string(h) + " not computed");
    return lines_[static_cast<std::size_t>(h)];
}

std::optional<QuasiPeriodic> CFExpansion::quasi_period() const {
    if (auto* q = std::get_if<QuasiPeriodic>(&status_)) return *q;
    return std::nullopt;
}

const CFLine& CFExpansion::step() {
    const CFLine& cur = lines_.back();
    CFLine next;
    next.h = cur.h + 1;
    next.P = cur.a * cur.Q - cur.P;
    Poly norm = D_ - next.P * next.P;
    auto [q, rem] = divrem(norm, cur.Q);
    if (!rem.is_zero())
        throw InvariantViolation("Q_" + std::to_string(cur.h) + " does not divide D - P_" + std::to_string(next.h) + "^2");
    next.Q = std::move(q);
    if (next.Q.is_zero()) throw InvariantViolation("Q_" + std::to_string(next.h) + " vanished");
    if (next.P.degree() != g_ + 1 || next.Q.degree() > g_)
        throw InvariantViolation("degree bounds fail at line " + std::to_string(next.h));
    next.a = divrem(A_ + next.P, next.Q).quot;
    lines_.push_back(std::move(next));
    return lines_.back();
}

void CFExpansion::extend_to(int h) {
    while (last_index() < h) step();
}

const CFStatus& CFExpansion::detect(const Bounds& bounds) {
    bounds.validate();
    if (!std::holds_alternative<Running>(status_)) return status_;
    for (int h = 1;; ++h) {
        if (h > bounds.max_steps) {
            status_ = Aborted{AbortReason::MaxSteps, h - 1};
            return status_;
        }
        if (h > last_index()) step();
        const CFLine& l = line(h);
        if (l.Q.degree() == 0) {
            status_ = QuasiPeriodic{h, l.Q.lc()};
            return status_;
        }
        if (l.Q.max_digits() > bounds.max_digits) {
            status_ = Aborted{AbortReason::MaxDigits, h};
            return status_;
        }
    }
}

Convergent convergent(const CFExpansion& e, int upto) {
    if (upto < 0 || upto > e.last_index())
        throw std::out_of_range("convergent: line " + std::to_string(upto) + " not computed");
    Poly p_prev(1), q_prev;
    Poly p = e.A(), q(1);
    for (int h = 1; h <= upto; ++h) {
        const Poly& a = e.line(h).a;
        Poly p_next = a * p + p_prev;
        Poly q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, q};
}

std::optional<Rat> proportionality(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
    Rat ratio = b.lc() / a.lc();
    if (a * ratio != b) return std::nullopt;
    return ratio;
}

SymmetryReport symmetry_report(const CFExpansion& e) {
    auto qp = e.quasi_period();
    if (!qp) throw std::invalid_argument("symmetry_report: expansion is not quasi-periodic");
    CFExpansion full = e;
    const int r = qp->r;
    full.extend_to(2 * r);

    SymmetryReport rep;
    rep.r = r;
    rep.kappa = qp->kappa;
    rep.period_closes = full.line(2 * r).Q == Poly(1) && full.line(2 * r).P == full.A();

    rep.twisted_palindrome = true;
    rep.half_period_proportional = true;
    rep.palindrome = true;
    for (int h = 1; h <= r - 1; ++h) {
        const Poly& ah = full.line(h).a;
        auto t = proportionality(ah, full.line(2 * r - h).a);
        if (t) rep.twist_ratios.push_back(*t);
        else rep.twisted_palindrome = false;
        auto hr = proportionality(ah, full.line(r - h).a);
        if (hr) rep.half_period_ratios.push_back(*hr);
        else rep.half_period_proportional = false;
        if (ah != full.line(r - h).a) rep.palindrome = false;
    }
    rep.palindrome_applicable = rep.kappa == Rat(1);
    rep.parity_applicable = rep.kappa != Rat(1) && rep.kappa != Rat(-1);
    rep.r_odd = r % 2 == 1;
    return rep;
}

std::vector<HeightSample> measure_heights(const Poly& D, int n) {
    if (n < 0) throw std::invalid_argument("measure_heights: negative step count");
    auto e = CFExpansion::init(D);
    std::vector<HeightSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h) {
        const CFLine& l = e.step();
        out.push_back({h, l.Q.max_digits()});
    }
    return out;
}

std::string heights_csv(const std::vector<HeightSample>& samples) {
    std::ostringstream os;
    os << "h,digits\n";
    for (const auto& s : samples) os << s.h << ',' << s.digits << '\n';
    return os.str();
}

}  // namespace pellcf
