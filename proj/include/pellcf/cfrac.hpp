#pragma once

// Continued fraction expansion of y + A, y = sqrt(D), in Q((1/x)).
//
// Line h holds the complete quotient (y + P_h)/Q_h and its polynomial part
// a_h. Line 0 is (A, 1, 2A); afterwards
//
//     P_{h+1} = a_h Q_h - P_h,   Q_{h+1} = (D - P_{h+1}^2) / Q_h,
//     a_{h+1} = polynomial part of (A + P_{h+1}) / Q_{h+1}.
//
// The first h >= 1 with Q_h a nonzero constant is the quasi-period r and
// that constant is kappa. The full period is then 2r.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pellcf/poly.hpp"

namespace pellcf {

/// A recurrence invariant failed. Cannot happen for valid input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct CFLine {
    int h = 0;
    Poly P;
    Poly Q;
    Poly a;

    friend bool operator==(const CFLine&, const CFLine&) = default;
};

struct Running {
    friend bool operator==(const Running&, const Running&) = default;
};

struct QuasiPeriodic {
    int r = 0;
    Rat kappa;
    friend bool operator==(const QuasiPeriodic&, const QuasiPeriodic&) = default;
};

enum class AbortReason { MaxSteps, MaxDigits };

struct Aborted {
    AbortReason reason = AbortReason::MaxSteps;
    int at_step = 0;
    friend bool operator==(const Aborted&, const Aborted&) = default;
};

using CFStatus = std::variant<Running, QuasiPeriodic, Aborted>;

std::string to_string(const CFStatus& s);

/// Halting bounds for detection. max_digits caps the decimal digits of any
/// coefficient of Q_h.
struct Bounds {
    int max_steps = 50;
    std::size_t max_digits = 10000;

    /// Genus 1 stops at 11 steps: torsion orders over Q are at most 12 and
    /// m = r + 1. Other genera use 50 steps.
    static Bounds for_genus(int g);
    void validate() const;
};

class CFExpansion {
public:
    /// Requires D monic, squarefree, of even degree >= 2; throws
    /// std::invalid_argument otherwise.
    static CFExpansion init(const Poly& D);

    const Poly& D() const { return D_; }
    int genus() const { return g_; }
    const Poly& A() const { return A_; }
    const std::vector<CFLine>& lines() const { return lines_; }
    const CFLine& line(int h) const;
    int last_index() const { return static_cast<int>(lines_.size()) - 1; }
    const CFStatus& status() const { return status_; }
    std::optional<QuasiPeriodic> quasi_period() const;

    /// Appends the next line. Allowed after detection too, so the period
    /// can be inspected.
    const CFLine& step();
    void extend_to(int h);

    /// Steps until a constant Q_r (r >= 1) appears or a bound trips.
    const CFStatus& detect(const Bounds& bounds);

private:
    CFExpansion() = default;

    Poly D_;
    int g_ = 0;
    Poly A_;
    std::vector<CFLine> lines_;
    CFStatus status_ = Running{};
};

struct Convergent {
    Poly p;
    Poly q;
};

/// p/q = [A; a_1, ..., a_upto]. Term zero is A, not a_0 = 2A.
/// Throws std::out_of_range when line upto has not been computed.
Convergent convergent(const CFExpansion& e, int upto);

struct SymmetryReport {
    int r = 0;
    Rat kappa;
    /// Q_{2r} = 1 and P_{2r} = A.
    bool period_closes = false;
    /// a_{2r-h} = ratio * a_h for 1 <= h <= r-1.
    bool twisted_palindrome = false;
    std::vector<Rat> twist_ratios;
    /// a_{r-h} = ratio * a_h for 1 <= h <= r-1, the twist inside one quasi-period.
    bool half_period_proportional = false;
    std::vector<Rat> half_period_ratios;
    /// kappa = 1: a_1..a_{r-1} is an exact palindrome.
    bool palindrome_applicable = false;
    bool palindrome = false;
    /// kappa not +-1: r must be odd.
    bool parity_applicable = false;
    bool r_odd = false;

    bool holds() const {
        return period_closes && twisted_palindrome && (!palindrome_applicable || palindrome) &&
               (!parity_applicable || r_odd);
    }
};

/// Requires a quasi-periodic expansion; works on a copy extended to 2r lines.
/// Throws std::invalid_argument otherwise.
SymmetryReport symmetry_report(const CFExpansion& e);

/// If b = scale * a for some rational scale, returns it.
std::optional<Rat> proportionality(const Poly& a, const Poly& b);

struct HeightSample {
    int h = 0;
    std::size_t digits = 0;
};

/// Runs n steps without detection and records the largest decimal digit
/// count among the coefficients of each Q_h, h = 1..n.
std::vector<HeightSample> measure_heights(const Poly& D, int n);

/// "h,digits" header and one row per sample.
std::string heights_csv(const std::vector<HeightSample>& samples);

}  // namespace pellcf
