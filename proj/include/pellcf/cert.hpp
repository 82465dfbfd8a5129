#pragma once

#include <string>

#include "pellcf/poly.hpp"

namespace pellcf {

/// A fundamental unit a + b*sqrt(D) of Q[x, sqrt(D)] together with the data
/// of the expansion that produced it.
///
/// a and b are monic, a^2 - D*b^2 = k is a nonzero constant, m = deg a and
/// deg b = m - g - 1. r is the quasi-period and kappa = Q_r, the constant
/// that ended it.
struct UnitCert {
    Poly D;
    int g = 0;
    Poly a;
    Poly b;
    Rat k;
    int m = 0;
    int r = 0;
    Rat kappa;

    friend bool operator==(const UnitCert&, const UnitCert&) = default;
};

/// Empty when every invariant of the certificate holds identically;
/// otherwise a description of the first violation.
std::string cert_violation(const UnitCert& cert);

inline bool cert_is_valid(const UnitCert& cert) { return cert_violation(cert).empty(); }

}  // namespace pellcf
