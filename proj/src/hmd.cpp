#include "multipole/hmd.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "multipole/errors.hpp"
#include "multipole/polys.hpp"
#include "multipole/quadrature.hpp"

namespace multipole {

PhysicalParams PhysicalParams::with_quadrupole(double Q, double q, double eta, double gamma_eff) {
  PhysicalParams p;
  p.Q = Q;
  p.q = q;
  p.eta = eta;
  p.p = eta * q;
  p.gamma_eff = gamma_eff;
  return p;
}

void PhysicalParams::validate() const {
  if (!(Q > 0.0)) throw DomainError("net charge Q must be positive");
  if (!(p >= 0.0)) throw DomainError("effective quadrupole p = eta*q must be >= 0");
  if (!(eta >= -0.5 && eta <= 1.0)) throw DomainError("angular parameter eta must lie in [-1/2, 1]");
  if (!(gamma_eff > -0.5)) throw DomainError("gamma must be > -1/2");
  if (!(d >= 0.0)) throw DomainError("dipole moment d must be >= 0");
}

int HmdConfig::effective_quad_points() const {
  return quad_points > 0 ? quad_points : default_quad_points(basis_size);
}

void HmdConfig::validate() const {
  if (basis_size < 2) throw DomainError("basis_size must be >= 2");
  if (!(rho > 0.0)) throw DomainError("rho must be > 0");
  if (quad_points != 0 && quad_points < basis_size) throw DomainError("quad_points must be >= basis_size");
}

SymTridiag overlap_matrix(double gamma_eff, int basis_size) {
  if (!(gamma_eff > -0.5)) throw DomainError("overlap_matrix: gamma must be > -1/2");
  const auto n = static_cast<std::size_t>(basis_size);
  std::vector<double> diag(n), off(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * (i + gamma_eff + 1.0);
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = -std::sqrt(i * (i + 2.0 * gamma_eff + 1.0));
  return SymTridiag(std::move(diag), std::move(off));
}

SymDense hamiltonian_matrix(const PhysicalParams& params, const HmdConfig& config) {
  params.validate();
  config.validate();
  const int nb = config.basis_size;
  const double rho = config.rho;
  const double g = params.gamma_eff;
  const auto n = static_cast<std::size_t>(nb);

  Matrix h(n, n);
  if (params.p != 0.0) {
    const SymDense inv_sq = inverse_square_elements(g, nb, config.effective_quad_points());
    const double scale = rho * rho * rho * params.p;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = scale * inv_sq(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) += 0.25 * rho * rho * ((i + g + 1.0) - 4.0 * params.Q / rho);
    if (i + 1 < n) {
      const double c = 0.125 * rho * rho * std::sqrt((i + 1.0) * (i + 2.0 * g + 2.0));
      h(i, i + 1) += c;
      h(i + 1, i) += c;
    }
  }
  return SymDense(std::move(h));
}

EnergySpectrum solve_spectrum(const PhysicalParams& params, const HmdConfig& config) {
  const SymDense h = hamiltonian_matrix(params, config);
  const SymTridiag omega = overlap_matrix(params.gamma_eff, config.basis_size);
  const EigenResult eig = generalized_sym_eigen(h, omega, true);

  EnergySpectrum out;
  out.params = params;
  out.config = config;
  out.regularized = params.p != 0.0 && inverse_square_is_regularized(params.gamma_eff);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (!(eig.values[k] < kBoundThreshold)) break;
    out.energies.push_back(eig.values[k]);
    out.coefficients.push_back(eig.vectors->column(k));
  }
  return out;
}

double coulomb_baseline(double Q, double gamma_eff, int k) {
  if (k < 0) throw DomainError("coulomb_baseline: k must be >= 0");
  const double n = k + gamma_eff + 1.0;
  return -Q * Q / (2.0 * n * n);
}

std::optional<std::pair<double, double>> PlateauReport::interval() const {
  if (!plateau) return std::nullopt;
  return std::make_pair(rho_grid[plateau->first], rho_grid[plateau->second]);
}

PlateauReport plateau_scan(const PhysicalParams& params, const HmdConfig& base_config,
                           const std::vector<double>& rho_grid, int n_track, double tol) {
  if (rho_grid.size() < 3) throw DomainError("plateau_scan: grid needs at least 3 points");
  if (!std::is_sorted(rho_grid.begin(), rho_grid.end())) throw DomainError("plateau_scan: grid must be ascending");
  if (!(rho_grid.front() > 0.0)) throw DomainError("plateau_scan: rho must be > 0");
  if (n_track < 1) throw DomainError("plateau_scan: n_track must be >= 1");
  if (!(tol >= 0.0)) throw DomainError("plateau_scan: tol must be >= 0");
  params.validate();

  const auto track = static_cast<std::size_t>(n_track);
  std::vector<std::future<std::vector<double>>> jobs;
  jobs.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    HmdConfig cfg = base_config;
    cfg.rho = rho;
    jobs.push_back(std::async(std::launch::async, [params, cfg, track] {
      const EnergySpectrum s = solve_spectrum(params, cfg);
      std::vector<double> row(track, std::numeric_limits<double>::quiet_NaN());
      for (std::size_t k = 0; k < track && k < s.energies.size(); ++k) row[k] = s.energies[k];
      return row;
    }));
  }

  PlateauReport report;
  report.rho_grid = rho_grid;
  for (auto& job : jobs) report.traces.push_back(job.get());

  auto complete = [&](std::size_t i) {
    return std::none_of(report.traces[i].begin(), report.traces[i].end(), [](double v) { return std::isnan(v); });
  };

  const std::size_t n = rho_grid.size();
  std::size_t best_len = 0, best_lo = 0;
  for (std::size_t lo = 0; lo < n; ++lo) {
    if (!complete(lo)) continue;
    std::vector<double> lo_v = report.traces[lo], hi_v = report.traces[lo];
    std::size_t hi = lo;
    while (hi + 1 < n && complete(hi + 1)) {
      bool ok = true;
      for (std::size_t k = 0; k < track; ++k) {
        const double v = report.traces[hi + 1][k];
        if (std::max(hi_v[k], v) - std::min(lo_v[k], v) > tol) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      ++hi;
      for (std::size_t k = 0; k < track; ++k) {
        lo_v[k] = std::min(lo_v[k], report.traces[hi][k]);
        hi_v[k] = std::max(hi_v[k], report.traces[hi][k]);
      }
    }
    const std::size_t len = hi - lo + 1;
    if (len >= 3 && len > best_len) {
      best_len = len;
      best_lo = lo;
    }
  }
  if (best_len > 0) {
    const std::size_t best_hi = best_lo + best_len - 1;
    report.plateau = std::make_pair(best_lo, best_hi);
    report.chosen_rho = rho_grid[(best_lo + best_hi) / 2];
  }
  return report;
}

PpsDiagnostic pps_diagnostic(double energy, const PhysicalParams& params) {
  if (!(energy < 0.0)) throw DomainError("pps_diagnostic: energy must be negative");
  params.validate();
  const double k = std::sqrt(-2.0 * energy);
  const double mu = -params.Q / k;
  const double lambda = 2.0 * k;
  const double lp = lambda * params.p;
  const int n_max = bessel_max_degree(mu);
  if (n_max < 0) throw DomainError("pps_diagnostic: no finite basis (N < 0) at this energy");

  const auto size = static_cast<std::size_t>(n_max) + 1;
  std::vector<double> diag(size), off(size - 1);
  for (std::size_t i = 0; i < size; ++i) {
    const double n = static_cast<double>(i);
    const double h = n + mu + 0.5;
    diag[i] = h * h;
    if (lp != 0.0) diag[i] += mu * lp / ((n + mu) * (n + mu + 1.0));
  }
  for (std::size_t i = 0; i + 1 < size; ++i) {
    const double n = static_cast<double>(i);
    if (lp == 0.0) continue;
    const double radicand =
        -(n + 1.0) * (n + 2.0 * mu + 1.0) / ((2.0 * n + 2.0 * mu + 1.0) * (2.0 * n + 2.0 * mu + 3.0));
    off[i] = lp / (n + mu + 1.0) * std::sqrt(radicand);
  }
  PpsDiagnostic out{SymTridiag(std::move(diag), std::move(off)), 0.0};
  const double target = (params.gamma_eff + 0.5) * (params.gamma_eff + 0.5);
  const std::vector<double> t = symtri_eigen(out.matrix, false).values;
  out.gap = std::numeric_limits<double>::infinity();
  for (double v : t) out.gap = std::min(out.gap, std::abs(v - target));
  return out;
}

}  // namespace multipole
