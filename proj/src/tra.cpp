#include "multipole/tra.hpp"

#include "wide.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "multipole/errors.hpp"
#include "multipole/polys.hpp"

namespace multipole {

std::string_view to_string(WavefunctionSource source) {
  return source == WavefunctionSource::Tra ? "TRA" : "HMD";
}

TraState tra_parameters(double energy, const PhysicalParams& params) {
  if (!(energy < 0.0)) throw DomainError("tra_parameters: energy must be negative");
  if (!(params.Q > 0.0)) throw DomainError("tra_parameters: Q must be positive");
  if (!(params.p > 0.0)) throw DomainError("tra_parameters: effective quadrupole p must be positive");
  TraState s;
  s.energy = energy;
  s.Q = params.Q;
  s.p = params.p;
  s.gamma_eff = params.gamma_eff;
  const double k = std::sqrt(-2.0 * energy);
  s.mu = -params.Q / k;
  s.lambda = 2.0 * k;
  s.n_max = bessel_max_degree(s.mu);
  if (s.n_max < 0) {
    throw DomainError("no TRA basis: mu = " + std::to_string(s.mu) + " is not below -1/2");
  }
  const double h = params.gamma_eff + 0.5;
  s.sigma = -1.0 / (params.p * k);
  s.z = -h * h / (params.p * k);
  return s;
}

std::vector<double> expansion_coefficients(const TraState& state) {
  // Same precision argument as b_poly_eval: the tail is subdominant.
  using Real = detail::Wide;
  const Real mu = state.mu;
  const Real lp = Real(state.lambda) * Real(state.p);
  const Real h = Real(state.gamma_eff) + Real(0.5);
  const Real t = h * h;
  std::vector<double> f{1.0};
  Real prev = 0, cur = 1;
  for (int n = 0; n < state.n_max; ++n) {
    const Real a = n + mu;
    const Real b = n + mu + 1;
    if (a * b == 0 || 2 * n + 2 * mu - 1 == 0 || 2 * n + 2 * mu + 3 == 0) {
      throw DomainError("expansion_coefficients: vanishing denominator at n = " + std::to_string(n));
    }
    const Real shifted = a + Real(0.5);
    const Real diag = shifted * shifted + mu * lp / (a * b);
    const Real lower = -lp * (n + 2 * mu) / (a * (2 * n + 2 * mu - 1));
    const Real upper = lp * (n + 1) / (b * (2 * n + 2 * mu + 3));
    if (upper == 0) {
      throw DomainError("expansion_coefficients: vanishing leading coefficient at n = " + std::to_string(n));
    }
    const Real next = ((t - diag) * cur - lower * prev) / upper;
    prev = cur;
    cur = next;
    f.push_back(static_cast<double>(next));
  }
  return f;
}

double tra_weight(double mu, int n) {
  const SignedLog poch = log_pochhammer(2.0 * mu + 1.0, n);
  const double lead = 2.0 * n + 2.0 * mu + 1.0;
  const double base = 2.0 * mu + 1.0;
  if (lead == 0.0 || base == 0.0) throw DomainError("tra_weight: vanishing factor");
  const double log_mag = poch.log_magnitude + std::log(std::abs(lead)) - log_gamma(n + 1.0) - std::log(std::abs(base));
  int sign = poch.sign;
  if (lead < 0.0) sign = -sign;
  if (base < 0.0) sign = -sign;
  if (n % 2 != 0) sign = -sign;
  return sign * std::exp(log_mag);
}

std::vector<double> coefficients_from_b_polys(const TraState& state) {
  using detail::Wide;
  if (!(state.mu < -0.5) || state.n_max != bessel_max_degree(state.mu)) {
    throw DomainError("coefficients_from_b_polys: inconsistent state");
  }
  // sigma and z rebuilt from lambda, p, gamma exactly as the direct route sees them
  const Wide mu = state.mu;
  const Wide lp = Wide(state.lambda) * Wide(state.p);
  const Wide h = Wide(state.gamma_eff) + Wide(0.5);
  const Wide sigma = -2 / lp;
  const Wide z = sigma * h * h;
  const std::vector<Wide> b = detail::b_poly_wide(mu, z, sigma, state.n_max);

  const Wide base = 2 * mu + 1;
  if (base == 0) throw DomainError("coefficients_from_b_polys: vanishing factor");
  std::vector<double> f(b.size());
  Wide ratio = 1;  // (2mu+1)_n / ((-1)^n n!)
  for (int n = 0; n <= state.n_max; ++n) {
    if (n > 0) ratio *= -(base + (n - 1)) / n;
    const Wide g = (2 * n + 2 * mu + 1) * ratio / base;
    f[static_cast<std::size_t>(n)] = static_cast<double>(g * b[static_cast<std::size_t>(n)]);
  }
  return f;
}

TraState tra_solve(double energy, const PhysicalParams& params) {
  TraState s = tra_parameters(energy, params);
  s.coefficients = expansion_coefficients(s);
  return s;
}

namespace {

// sum_n f_n x^mu e^{-1/2x} Y_n^mu(x) without forming x^n for large x.
double bessel_series(double mu, const std::vector<double>& f, double x) {
  const int n_max = static_cast<int>(f.size()) - 1;
  if (x <= 1.0) {
    const PolySequence y = bessel_eval(BesselFamily(mu, n_max), x);
    double acc = 0.0;
    for (int n = 0; n <= n_max; ++n) acc += f[static_cast<std::size_t>(n)] * y[n];
    return acc * std::exp(mu * std::log(x) - 0.5 / x);
  }
  // y_n = Y_n(x) / x^n obeys a recursion with bounded coefficients in 1/x.
  const double inv = 1.0 / x;
  const double log_x = std::log(x);
  double prev = 0.0, cur = 1.0;
  double acc = f[0] * std::exp(mu * log_x - 0.5 * inv);
  for (int n = 0; n < n_max; ++n) {
    const double a = n + mu;
    const double b = n + mu + 1.0;
    const double c = 2.0 * n + 2.0 * mu + 1.0;
    const double diag = -mu / (a * b);
    const double lower = n / (a * c);
    const double upper = (n + 2.0 * mu + 1.0) / (b * c);
    const double next = ((2.0 - diag * inv) * cur + lower * inv * inv * prev) / upper;
    prev = cur;
    cur = next;
    acc += f[static_cast<std::size_t>(n) + 1] * cur * std::exp((n + 1 + mu) * log_x - 0.5 * inv);
  }
  return acc;
}

}  // namespace

WavefunctionTable tra_wavefunction(const TraState& state, const std::vector<double>& r_grid, int state_index) {
  const std::vector<double> f = coefficients_from_b_polys(state);
  WavefunctionTable out{r_grid, std::vector<double>(r_grid.size()), WavefunctionSource::Tra, state_index};
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (!(r > 0.0)) throw DomainError("tra_wavefunction: radii must be positive");
    out.values[i] = bessel_series(state.mu, f, 1.0 / (state.lambda * r));
  }
  return out;
}

WavefunctionTable hmd_wavefunction(const std::vector<double>& coefficients, double gamma_eff, double rho,
                                   const std::vector<double>& r_grid, int state_index) {
  if (coefficients.empty()) throw DomainError("hmd_wavefunction: no coefficients");
  if (!(rho > 0.0)) throw DomainError("hmd_wavefunction: rho must be > 0");
  const int n_max = static_cast<int>(coefficients.size()) - 1;
  WavefunctionTable out{r_grid, std::vector<double>(r_grid.size()), WavefunctionSource::Hmd, state_index};
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double y = rho * r_grid[i];
    if (y < 0.0) throw DomainError("hmd_wavefunction: radii must be >= 0");
    if (y == 0.0) {
      out.values[i] = 0.0;
      continue;
    }
    const PolySequence l = laguerre_normalized_eval(2.0 * gamma_eff + 1.0, y, n_max);
    double acc = 0.0;
    for (int n = 0; n <= n_max; ++n) acc += coefficients[static_cast<std::size_t>(n)] * l[n];
    out.values[i] = acc * std::exp((gamma_eff + 1.0) * std::log(y) - 0.5 * y);
  }
  return out;
}

namespace {

double trapezoid(const std::vector<double>& r, const std::vector<double>& f, const std::vector<double>& g) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) acc += 0.5 * (r[i + 1] - r[i]) * (f[i] * g[i] + f[i + 1] * g[i + 1]);
  return acc;
}

}  // namespace

OverlayResult overlay_compare(const WavefunctionTable& a, const WavefunctionTable& b) {
  if (a.r_grid != b.r_grid) throw DomainError("overlay_compare: tables must share the radial grid");
  const double aa = trapezoid(a.r_grid, a.values, a.values);
  const double bb = trapezoid(b.r_grid, b.values, b.values);
  if (!(aa > 0.0) || !(bb > 0.0)) throw DomainError("overlay_compare: zero-norm wavefunction");
  const double ab = trapezoid(a.r_grid, a.values, b.values);
  OverlayResult out;
  out.scale = ab / aa;
  std::vector<double> diff(a.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = out.scale * a.values[i] - b.values[i];
  out.residual = std::clamp(std::sqrt(std::max(0.0, trapezoid(a.r_grid, diff, diff)) / bb), 0.0, 1.0);
  return out;
}

WavefunctionTable restrict_to(const WavefunctionTable& table, double lo, double hi) {
  WavefunctionTable out{{}, {}, table.source, table.state_index};
  for (std::size_t i = 0; i < table.r_grid.size(); ++i) {
    if (table.r_grid[i] > lo && table.r_grid[i] < hi) {
      out.r_grid.push_back(table.r_grid[i]);
      out.values.push_back(table.values[i]);
    }
  }
  return out;
}

int count_sign_changes(const WavefunctionTable& table, double relative_floor) {
  double peak = 0.0;
  for (double v : table.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0;
  const double floor = relative_floor * peak;
  int changes = 0;
  int last_sign = 0;
  for (double v : table.values) {
    if (std::abs(v) < floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

std::vector<double> log_grid(double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) throw DomainError("log_grid: need 0 < r_min < r_max, points >= 2");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = std::log(r_max / r_min) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = r_min * std::exp(step * i);
  out.back() = r_max;
  return out;
}

}  // namespace multipole
