#pragma once

#include "locus/polynomial.hpp"

namespace locus {

/// Coefficient of var^k, a polynomial in the remaining variables.
Polynomial coeff_of_power(const Polynomial& f, std::size_t var, std::uint32_t k);

/// Determinant of the Sylvester matrix of (f, g) with respect to `var`.
/// Convention: for monic m, the value equals the product of g over the roots
/// of m, so it matches the determinant of the multiplication operator on
/// ring[x]/(m) without sign adjustments.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var);

} // namespace locus
