#pragma once

#include <utility>
#include <vector>

#include "pellcf/poly.hpp"

namespace pellcf {

struct Factor {
    Poly poly;  // monic, irreducible over Q
    int multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// unit * prod(poly^multiplicity). Factors are ordered by degree, then
/// lexicographically on coefficients from the top down, so output is stable.
struct Factorization {
    Rat unit;
    std::vector<Factor> factors;

    Poly expand() const;
    /// Number of irreducible factors counted with multiplicity.
    int count() const;
    bool is_irreducible() const { return count() == 1; }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete factorization over Q. Throws std::domain_error on zero.
Factorization factor_over_Q(const Poly& p);

/// Monic squarefree parts (g_i, i) with p = lc * prod g_i^i.
std::vector<Factor> squarefree_decomposition(const Poly& p);

/// Rational zeros of p, ascending, without multiplicity.
std::vector<Rat> rational_roots(const Poly& p);

/// Total order used to sort factors.
bool factor_order_less(const Poly& a, const Poly& b);

}  // namespace pellcf
