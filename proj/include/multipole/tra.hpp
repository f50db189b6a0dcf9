#pragma once

// Finite Bessel-polynomial (tridiagonal representation) solution for a given
// bound energy, and evaluation of both wavefunction routes on a radial grid.
//
// For energy E < 0 the basis x^mu e^{-1/2x} Y_n^mu(x), x = 1/(lambda r), is
// fixed by lambda = 2 sqrt(-2E) and mu = -Q/sqrt(-2E); it holds N+1 functions
// with N the largest integer strictly below -mu - 1/2.

#include <string_view>
#include <vector>

#include "multipole/hmd.hpp"

namespace multipole {

struct TraState {
  double energy = 0.0;
  double Q = 0.0;
  double p = 0.0;
  double gamma_eff = 0.0;
  double mu = 0.0;
  double lambda = 0.0;
  int n_max = 0;  // N; the basis has N+1 elements
  double sigma = 0.0;
  double z = 0.0;
  std::vector<double> coefficients;  // F_0..F_N, F_0 = 1 (empty until computed)

  int basis_size() const noexcept { return n_max + 1; }
};

enum class WavefunctionSource { Tra, Hmd };

std::string_view to_string(WavefunctionSource source);

struct WavefunctionTable {
  std::vector<double> r_grid;
  std::vector<double> values;
  WavefunctionSource source = WavefunctionSource::Tra;
  int state_index = 0;
};

/// Throws DomainError for E >= 0, Q <= 0, p <= 0, or when mu >= -1/2.
TraState tra_parameters(double energy, const PhysicalParams& params);

/// F_0..F_N from the three-term recursion of the expansion coefficients.
std::vector<double> expansion_coefficients(const TraState& state);

/// F_n = G_n B_n^mu(z; sigma): the same coefficients through the B polynomials.
std::vector<double> coefficients_from_b_polys(const TraState& state);

/// G_n = (2n+2mu+1)(2mu+1)_n / ((-1)^n n! (2mu+1)), evaluated in log space.
double tra_weight(double mu, int n);

/// tra_parameters + expansion_coefficients.
TraState tra_solve(double energy, const PhysicalParams& params);

WavefunctionTable tra_wavefunction(const TraState& state, const std::vector<double>& r_grid, int state_index = 0);

/// sum_n c_n A_n (rho r)^{gamma+1} e^{-rho r/2} L_n^{2gamma+1}(rho r)
WavefunctionTable hmd_wavefunction(const std::vector<double>& coefficients, double gamma_eff, double rho,
                                   const std::vector<double>& r_grid, int state_index = 0);

struct OverlayResult {
  double scale = 0.0;
  double residual = 0.0;  // ||a s - b|| / ||b||, in [0, 1]
};

/// Optimal scale s minimizing ||a s - b|| under the trapezoid inner product
/// on the shared grid.
OverlayResult overlay_compare(const WavefunctionTable& a, const WavefunctionTable& b);

/// Samples with lo < r < hi.
WavefunctionTable restrict_to(const WavefunctionTable& table, double lo, double hi);

inline constexpr double kNodeAmplitudeFloor = 0.05;

/// Sign changes between consecutive samples with |psi| >= floor * max|psi|.
int count_sign_changes(const WavefunctionTable& table, double relative_floor = kNodeAmplitudeFloor);

/// `points` logarithmically spaced radii on [r_min, r_max].
std::vector<double> log_grid(double r_min, double r_max, int points);

inline std::vector<double> default_radial_grid() { return log_grid(0.01, 80.0, 600); }

}  // namespace multipole
