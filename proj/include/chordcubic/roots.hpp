#pragma once

#include <utility>
#include <vector>

#include "chordcubic/scalars.hpp"

namespace chordcubic {

/// Roots lying in the field, with multiplicity, of the univariate polynomial
/// whose coefficients are given highest degree first. The polynomial must not
/// be identically zero. Roots come back in ascending order.
std::vector<std::pair<Fp, unsigned>> roots_in_field(const std::vector<Fp>& coeffs);
/// Rational roots via the rational root theorem. Throws out_of_range if a
/// coefficient is too large to factor by trial division.
std::vector<std::pair<Rational, unsigned>> roots_in_field(const std::vector<Rational>& coeffs);

}  // namespace chordcubic
