#include "pellcf/cert.hpp"

namespace pellcf {

std::string cert_violation(const UnitCert& c) {
    if (c.D.degree() < 2 || c.D.degree() % 2 != 0 || !c.D.is_monic()) return "D must be monic of even degree";
    if (c.g != c.D.degree() / 2 - 1) return "g does not match deg D = 2g+2";
    if (!c.a.is_monic() || !c.b.is_monic()) return "a and b must be monic";
    if (c.m != c.a.degree()) return "m must equal deg a";
    if (c.m < c.g + 1) return "m must be at least g+1";
    if (c.b.degree() != c.m - c.g - 1) return "deg b must equal m-g-1";
    if (c.k.is_zero()) return "norm k must be nonzero";
    if (c.a * c.a - c.D * c.b * c.b != Poly(c.k)) return "a^2 - D*b^2 is not the constant k";
    if (gcd(c.a, c.b).degree() != 0) return "a and b are not coprime";
    return {};
}

}  // namespace pellcf
