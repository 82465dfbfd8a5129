#pragma once

// Structural checks on units and Galois groups of quartics.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellcf/cfrac.hpp"
#include "pellcf/factor.hpp"
#include "pellcf/json_io.hpp"
#include "pellcf/quadext.hpp"

namespace pellcf {

enum class GaloisLabel { S4, A4, D4, C4, V4, Reducible };

std::string to_string(GaloisLabel g);
/// Inverse of to_string; throws std::invalid_argument.
GaloisLabel galois_label_from_string(const std::string& s);

/// For q = x^4 + c3 x^3 + c2 x^2 + c1 x + c0:
///   z^3 - c2 z^2 + (c1 c3 - 4 c0) z - (c1^2 + c0 c3^2 - 4 c0 c2),
/// with roots a1a2+a3a4, a1a3+a2a4, a1a4+a2a3. No translation is applied.
/// Throws std::invalid_argument unless q is a monic quartic.
Poly resolvent_cubic(const Poly& q);

struct GaloisResult {
    GaloisLabel label = GaloisLabel::Reducible;
    Factorization factors_Q;
    Rat discriminant;
    bool discriminant_square = false;
    Poly resolvent;
    std::vector<Rat> resolvent_roots;
    /// Factors over Q(sqrt(disc)), only computed in the D4/C4 branch.
    std::vector<QPoly> factors_over_disc_field;
};

/// Throws std::invalid_argument unless q is a monic squarefree quartic.
GaloisResult galois_quartic_detail(const Poly& q);
GaloisLabel galois_quartic(const Poly& q);

/// One named claim with the data that lets it be rechecked.
struct Check {
    std::string name;
    bool holds = false;
    std::string witness;

    friend bool operator==(const Check&, const Check&) = default;
};

struct ClassReport {
    Poly D;
    std::optional<UnitCert> cert;
    /// m and g of equal parity imply k is a square.
    bool parity_ok = true;
    bool k_square = false;
    std::optional<int> s;
    Factorization factors_Q;
    /// Conjugate factors of D over Q(sqrt k) when k is not a square.
    std::optional<std::pair<QPoly, QPoly>> factors_Qc;
    /// (a + c)/d_+^2 and (a - c)/d_-^2 when k = c^2.
    std::optional<std::pair<Poly, Poly>> factors_k_square;
    std::optional<GaloisLabel> galois;
    Poly resolvent;
    std::optional<Rat> resolvent_rational_zero;
    /// Monic Q_h with P_{h+1} = P_h, each dividing D.
    std::vector<Poly> midpoint_factors;
    std::vector<Check> checks;

    bool all_hold() const;
    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

/// Parity, factorization shape and Galois bound for a unit of D.
/// Throws std::invalid_argument when cert is not a valid unit for D.
ClassReport theorem1_report(const Poly& D, const UnitCert& cert);

/// Norm at even quasi-period, unit factor splitting and midpoint factors of
/// D, read off the expansion e (extended to its full period on a copy).
/// Throws std::invalid_argument when cert and e disagree.
ClassReport theorem2_report(const UnitCert& cert, const CFExpansion& e);

/// Galois data for any valid D; when a unit exists within default bounds,
/// also the checks of theorem1_report and theorem2_report combined.
ClassReport full_report(const Poly& D);

enum class Verdict { NotExceptional, Undecided };

struct ScreenResult {
    Verdict verdict = Verdict::Undecided;
    /// "S4", "A4", or empty when undecided.
    std::string rule;
    std::optional<GaloisLabel> label;
};

/// One-sided: a quartic with group S4 or A4 cannot be exceptional since
/// the group of an exceptional quartic has order dividing 8.
/// Throws std::invalid_argument unless D is monic squarefree of even degree.
ScreenResult exceptionality_screen(const Poly& D);

Json report_to_json(const ClassReport& r);
ClassReport report_from_json(const Json& j);

}  // namespace pellcf
