#pragma once

// Cross-checks that avoid the code paths they check: no resultants, no
// factorization, no gcds over extensions.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pellcf/classify.hpp"

namespace pellcf::oracle {

/// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 for a x^3 + b x^2 + c x + d.
Rat cubic_discriminant(const Poly& cubic);

/// Rational zeros by the rational root theorem over the integer-scaled
/// polynomial. Ascending, distinct. Meant for small coefficients.
std::vector<Rat> rational_roots_by_divisors(const Poly& p);

/// True when r is a square in Q(sqrt(delta)), i.e. r or r*delta is a
/// square in Q.
bool square_in_quadratic_field(const Rat& r, const Rat& delta);

struct QuarticSplit {
    std::optional<std::pair<QPoly, QPoly>> factors;
};

/// Looks for q = (x^2 - S1 x + P1)(x^2 - S2 x + P2) over Q(sqrt(delta))
/// with P1 + P2 = y: P1, P2 solve Z^2 - yZ + c0 and S1, S2 solve
/// S^2 + c3 S + (c2 - y). Every sign choice is re-expanded exactly.
QuarticSplit split_quartic(const Poly& q, const Rat& y, const Rat& delta);

/// Galois label of an irreducible monic quartic from resolvent roots,
/// discriminant squareness and split_quartic.
GaloisLabel galois_irreducible_quartic(const Poly& q);

/// Monic quartic with integer coefficients in [-bound, bound].
Poly random_quartic(std::mt19937_64& rng, int bound);

}  // namespace pellcf::oracle
