#pragma once

// Polynomial families used by the finite-basis solution and the Laguerre
// basis: Bessel polynomials on the real line Y_n^mu(x), generalized Laguerre
// polynomials L_n^nu(x), and the recursion-defined family B_n^mu(z; sigma).
// All evaluators use forward three-term recursion.

#include <vector>

namespace multipole {

/// log|Gamma(x)| for real x that is not a non-positive integer.
double log_gamma(double x);

/// Gamma(x). Overflows to +-inf beyond ~171.
double gamma_fn(double x);

struct SignedLog {
  double log_magnitude = 0.0;
  int sign = 1;

  double value() const;
};

/// (a)_n = a(a+1)...(a+n-1) as sign * exp(log_magnitude).
/// Throws DomainError when some factor a+k vanishes.
SignedLog log_pochhammer(double a, int n);

/// Largest integer strictly less than -mu - 1/2; negative when no degree is
/// admissible (mu >= -1/2).
int bessel_max_degree(double mu);

/// Bessel polynomial family Y_0^mu..Y_{n_max}^mu with mu < -1/2 and
/// n_max <= bessel_max_degree(mu).
class BesselFamily {
 public:
  BesselFamily(double mu, int n_max);

  double mu() const noexcept { return mu_; }
  int n_max() const noexcept { return n_max_; }

 private:
  double mu_;
  int n_max_;
};

struct PolySequence {
  double argument = 0.0;
  std::vector<double> values;  // index = degree

  double operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
  int max_degree() const { return static_cast<int>(values.size()) - 1; }
};

PolySequence bessel_eval(const BesselFamily& fam, double x);

/// Same recursion as bessel_eval without the orthogonality range check; only
/// requires the recursion denominators to be nonzero. Used to extend the
/// family formally past N (generating-function checks).
PolySequence bessel_eval_formal(double mu, int n_max, double x);

/// Monomial coefficients of Y_0^mu..Y_{n_max}^mu, built by running the
/// recursion on coefficient vectors. coeffs[n][j] multiplies x^j.
std::vector<std::vector<double>> bessel_monomials(double mu, int n_max);

/// Squared norm of Y_n^mu under the weight x^{2mu} e^{-1/x} on (0, inf):
/// -n! Gamma(-n-2mu) / (2n+2mu+1).
double bessel_norm(double mu, int n);

/// L_0^nu(x)..L_{n_max}^nu(x), nu > -1.
PolySequence laguerre_eval(double nu, double x, int n_max);

/// Orthonormal Laguerre values A_n L_n^nu(x) with A_n = sqrt(n!/Gamma(n+nu+1)).
PolySequence laguerre_normalized_eval(double nu, double x, int n_max);

struct BPolyParams {
  double mu = 0.0;
  double z = 0.0;
  double sigma = 0.0;
};

/// B_0..B_{n_max} from the three-term recursion with B_0 = 1, B_{-1} = 0.
PolySequence b_poly_eval(const BPolyParams& params, int n_max);

}  // namespace multipole
