#include "multipole/dipole.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "multipole/errors.hpp"

namespace multipole {

namespace {

constexpr double kDoublingTolerance = 1e-10;

std::vector<double> lowest_positive(const std::vector<double>& values, int count) {
  std::vector<double> out;
  for (double t : values) {
    if (t > 0.0) out.push_back(t);
    if (static_cast<int>(out.size()) == count) break;
  }
  return out;
}

}  // namespace

SymTridiag build_dipole_matrix(const DipoleSpec& spec) {
  if (spec.size < 1) throw DomainError("dipole matrix: size must be >= 1");
  if (!(spec.d >= 0.0)) throw DomainError("dipole matrix: d must be >= 0");
  const double m = std::abs(spec.m);
  const auto n = static_cast<std::size_t>(spec.size);
  std::vector<double> diag(n), off(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = i + m + 0.5;
    diag[i] = h * h;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double c = i + m + 1.0;
    off[i] = -spec.d * std::sqrt((i + 1.0) * (i + 2.0 * m + 1.0) / (c * c - 0.25));
  }
  return SymTridiag(std::move(diag), std::move(off));
}

GammaSpectrum gamma_spectrum(const DipoleSpec& spec, int count) {
  if (count < 1) throw DomainError("gamma_spectrum: count must be >= 1");
  if (spec.size < count + 20) {
    throw DomainError("gamma_spectrum: truncation size " + std::to_string(spec.size) +
                      " must be at least count + 20");
  }
  const std::vector<double> t = symtri_eigen(build_dipole_matrix(spec), false).values;
  DipoleSpec doubled = spec;
  doubled.size = 2 * spec.size;
  const std::vector<double> t2 = symtri_eigen(build_dipole_matrix(doubled), false).values;

  const std::vector<double> pos = lowest_positive(t, count);
  const std::vector<double> pos2 = lowest_positive(t2, count);
  if (static_cast<int>(pos.size()) < count || pos2.size() != pos.size()) {
    throw TruncationError("gamma_spectrum: fewer than " + std::to_string(count) + " positive eigenvalues", 0);
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (std::abs(pos[i] - pos2[i]) > kDoublingTolerance) {
      throw TruncationError("gamma_spectrum: eigenvalue " + std::to_string(i) + " changed by " +
                                std::to_string(std::abs(pos[i] - pos2[i])) + " under size doubling",
                            i);
    }
  }

  GammaSpectrum out;
  for (double v : t) {
    if (v > pos.back()) break;
    out.t_values.push_back(v);
    if (v > 0.0) {
      out.gammas.push_back(-0.5 + std::sqrt(v));
    } else {
      ++out.excluded_count;
    }
  }
  return out;
}

double channel_gamma(const GammaSpectrum& spectrum, std::size_t index) {
  if (index >= spectrum.t_values.size()) throw DomainError("channel index out of range");
  const double t = spectrum.t_values[index];
  if (!(t > 0.0)) {
    throw SupercriticalChannelError("channel " + std::to_string(index) + " has (gamma+1/2)^2 = " +
                                    std::to_string(t) +
                                    " <= 0: gamma = -1/2 + i*omega, bound-state scheme does not apply");
  }
  return -0.5 + std::sqrt(t);
}

}  // namespace multipole
