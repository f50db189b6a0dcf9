#pragma once

// Wide-precision helpers shared by the finite-basis coefficient routes.
// The high-degree coefficients are the subdominant solution of their
// recursions and are ~1e12 times more sensitive than their inputs, so both
// routes derive their parameters and run their recursions in 113-bit
// floating point from the same double inputs.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <vector>

namespace multipole::detail {

using Wide = boost::multiprecision::cpp_bin_float_quad;

/// B_0..B_{n_max} of the recursion with B_0 = 1, B_{-1} = 0; no range checks
/// beyond nonvanishing denominators.
std::vector<Wide> b_poly_wide(const Wide& mu, const Wide& z, const Wide& sigma, int n_max);

}  // namespace multipole::detail
