#pragma once

#include <random>

#include "pellcf/poly.hpp"

namespace testutil {

// Uniform integer in [-bound, bound] using only the fully specified engine
// output, so sequences are identical across standard libraries.
inline long uniform(std::mt19937_64& rng, long bound) {
    return static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
}

// Polynomial of exact degree deg with small integer or half-integer coefficients.
inline pellcf::Poly random_poly(std::mt19937_64& rng, int deg, long bound) {
    std::vector<pellcf::Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = pellcf::Rat(uniform(rng, bound), (rng() % 4 == 0) ? 2 : 1);
    while (c.back().is_zero()) c.back() = pellcf::Rat(uniform(rng, bound), 1);
    return pellcf::Poly(std::move(c));
}

}  // namespace testutil
