#pragma once

// Angular dipole problem: (gamma + 1/2)^2 are the eigenvalues of an infinite
// symmetric tridiagonal matrix in the azimuthal number m and dipole moment d.

#include <vector>

#include "multipole/linalg.hpp"

namespace multipole {

inline constexpr int kDefaultDipoleSize = 400;

struct DipoleSpec {
  double d = 0.0;  // dipole moment, atomic units
  int m = 0;       // azimuthal number; negative m is folded to |m|
  int size = kDefaultDipoleSize;
};

struct GammaSpectrum {
  std::vector<double> t_values;  // lowest eigenvalues, ascending, including t <= 0
  std::vector<double> gammas;    // -1/2 + sqrt(t) for the positive t, ascending
  int excluded_count = 0;        // number of t <= 0 among t_values
};

SymTridiag build_dipole_matrix(const DipoleSpec& spec);

/// Lowest `count` positive channels plus every excluded (t <= 0) channel
/// below them. Convergence is checked by doubling the truncation size;
/// throws TruncationError when the positive eigenvalues move by more than
/// 1e-10.
GammaSpectrum gamma_spectrum(const DipoleSpec& spec, int count);

/// Gamma of channel `index` into t_values; throws SupercriticalChannelError
/// when that channel has t <= 0 (complex gamma).
double channel_gamma(const GammaSpectrum& spectrum, std::size_t index);

}  // namespace multipole
