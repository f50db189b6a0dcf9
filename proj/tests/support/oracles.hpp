#pragma once

// Independent reference computations for the unit and acceptance tests.
// None of these call into the library's recursions or eigensolvers.

#include <cstdint>
#include <vector>

namespace oracle {

/// Real roots of a monic cubic x^3 + a x^2 + b x + c with three real roots,
/// ascending (trigonometric formula).
std::vector<double> cubic_roots(double a, double b, double c);

/// Eigenvalues of a 3x3 symmetric tridiagonal matrix through its
/// characteristic polynomial.
std::vector<double> tridiag3_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off);

/// Y_n^mu(x) from the terminating 2F0 series, in long double.
double bessel_series(double mu, int n, double x);

/// Monomial coefficients of the derivative of a polynomial.
std::vector<double> derivative(const std::vector<double>& coeffs);

double poly_value(const std::vector<double>& coeffs, double x);

/// Right-hand side of the generating function for the Bessel family.
double bessel_generating_function(double mu, double x, double t);

/// L_n^a(x) from its explicit finite sum.
double laguerre_series(double a, int n, double x);

/// A_n A_m int_0^inf y^{2g-1} e^{-y} L_n^{2g+1} L_m^{2g+1} dy by expanding the
/// polynomials term by term and integrating each power with Gamma; g > 0.
double inverse_square_exact(double g, int n, int m);

/// Symmetric tridiagonal (diag, off) with the given spectrum, built by
/// Lanczos on diag(spectrum) from a seeded random start vector.
struct Tridiag {
  std::vector<double> diag;
  std::vector<double> off;
};
Tridiag tridiag_with_spectrum(const std::vector<double>& spectrum, std::uint32_t seed);

/// Random symmetric matrix and a random SPD tridiagonal matrix (row-major).
std::vector<double> random_symmetric(int n, std::uint32_t seed);
Tridiag random_spd_tridiag(int n, std::uint32_t seed);

}  // namespace oracle
