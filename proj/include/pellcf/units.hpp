#pragma once

#include <optional>
#include <string>

#include "pellcf/cert.hpp"
#include "pellcf/cfrac.hpp"

namespace pellcf {

/// Result of a unit search: the certificate when the expansion of sqrt(D)
/// turned out quasi-periodic within bounds, plus the expansion itself.
struct UnitSearch {
    std::optional<UnitCert> cert;
    CFExpansion expansion;
};

/// Runs the expansion with the given bounds and, on quasi-periodicity,
/// returns the monic-normalized convergent [A; a_1..a_{r-1}] as a
/// certificate. Degree-2 input takes the closed form (x + v) + sqrt(D).
/// Throws std::invalid_argument for D that is not monic squarefree of even
/// degree.
UnitSearch search_unit(const Poly& D, const Bounds& bounds);
std::optional<UnitCert> find_unit(const Poly& D, const Bounds& bounds);
std::optional<UnitCert> find_unit(const Poly& D);

/// For D = x^2 + 2vx + w: a = x + v, b = 1, k = v^2 - w.
UnitCert closed_form_unit(const Poly& D);

/// m = deg a. For genus 1 also checks m = r + 1 and throws
/// InvariantViolation if not.
int torsion_order(const UnitCert& cert);

/// f/sqrt(D) dx = d log(a + b sqrt(D)).
struct IntegralIdentity {
    Poly D;
    Poly f;
    Poly a;
    Poly b;

    friend bool operator==(const IntegralIdentity&, const IntegralIdentity&) = default;
};

/// f = a'/b. Throws InexactDivision if b does not divide a'.
IntegralIdentity integrand(const UnitCert& cert);

/// f*b = a' and 2*f*a = 2*b'*D + b*D', checked exactly.
bool verify_identity(const IntegralIdentity& id);

enum class IdentityFormat { Latex, Json, Text };

/// Refuses (std::invalid_argument) an identity that does not verify.
std::string emit_identity(const IntegralIdentity& id, IdentityFormat format);

}  // namespace pellcf
