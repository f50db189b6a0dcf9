#pragma once

// Bound-state spectrum of the radial equation with Coulomb, centrifugal
// (gamma) and effective quadrupole p/r^3 terms, by diagonalizing the
// Hamiltonian in the Laguerre basis
//   chi_n(y) = A_n y^{gamma+1} e^{-y/2} L_n^{2gamma+1}(y),  y = rho r.

#include <optional>
#include <vector>

#include "multipole/linalg.hpp"

namespace multipole {

/// Charge-distribution model in atomic units.
struct PhysicalParams {
  double Q = 1.0;          // net positive charge
  double d = 0.0;          // dipole moment
  double q = 0.0;          // quadrupole moment
  double eta = 1.0;        // angular parameter in [-1/2, 1]
  double p = 0.0;          // effective quadrupole moment
  double gamma_eff = 0.0;  // equals l when d = 0
  int m = 0;

  /// p = eta * q.
  static PhysicalParams with_quadrupole(double Q, double q, double eta, double gamma_eff);

  /// Throws DomainError on Q <= 0, p < 0, eta outside [-1/2, 1] or
  /// gamma_eff <= -1/2.
  void validate() const;
};

inline constexpr int kDefaultBasisSize = 150;
inline constexpr double kDefaultRho = 2.0;
inline constexpr double kBoundThreshold = -1e-10;

struct HmdConfig {
  int basis_size = kDefaultBasisSize;
  double rho = kDefaultRho;
  int quad_points = 0;  // 0 selects default_quad_points(basis_size)

  int effective_quad_points() const;
  void validate() const;
};

struct EnergySpectrum {
  std::vector<double> energies;                  // ascending, all < kBoundThreshold
  std::vector<std::vector<double>> coefficients;  // Omega-orthonormal, one per energy
  PhysicalParams params;
  HmdConfig config;
  bool regularized = false;  // singular <n|y^-2|m> (gamma = 0 with p > 0)

  bool empty() const noexcept { return energies.empty(); }
};

struct PlateauReport {
  std::vector<double> rho_grid;
  std::vector<std::vector<double>> traces;  // per rho; NaN where a state is missing
  std::optional<std::pair<std::size_t, std::size_t>> plateau;  // inclusive grid indices
  std::optional<double> chosen_rho;

  std::optional<std::pair<double, double>> interval() const;
};

struct PpsDiagnostic {
  SymTridiag matrix;
  double gap = 0.0;
};

SymTridiag overlap_matrix(double gamma_eff, int basis_size);

SymDense hamiltonian_matrix(const PhysicalParams& params, const HmdConfig& config);

EnergySpectrum solve_spectrum(const PhysicalParams& params, const HmdConfig& config);

/// -Q^2 / (2 (k + gamma + 1)^2)
double coulomb_baseline(double Q, double gamma_eff, int k);

/// Solves on every rho of the grid (concurrently) and finds the longest
/// contiguous run of at least three grid points over which each of the
/// lowest n_track energies varies by at most tol. Ties go to the lowest rho.
PlateauReport plateau_scan(const PhysicalParams& params, const HmdConfig& base_config,
                           const std::vector<double>& rho_grid, int n_track, double tol);

/// Energy-dependent tridiagonal matrix of the finite Bessel basis whose
/// eigenvalue must equal (gamma + 1/2)^2 at an allowed energy; gap is the
/// distance of its spectrum to that value. Diagnostic only.
PpsDiagnostic pps_diagnostic(double energy, const PhysicalParams& params);

}  // namespace multipole
