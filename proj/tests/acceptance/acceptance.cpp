// Acceptance criteria AC1..AC9. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "multipole/dipole.hpp"
#include "multipole/errors.hpp"
#include "multipole/hmd.hpp"
#include "multipole/polys.hpp"
#include "multipole/quadrature.hpp"
#include "multipole/tra.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace multipole;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

PhysicalParams table1_params(double l) { return PhysicalParams::with_quadrupole(2.0, 5.0, 1.0, l); }

PhysicalParams valence_params(int m, double gamma) {
  PhysicalParams p;
  p.Q = 1.0;
  p.d = 5.0;
  p.q = 3.0;
  p.p = 3.0;
  p.m = m;
  p.gamma_eff = gamma;
  return p;
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  double worst_l0 = 0.0, worst_rest = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const EnergySpectrum s = solve_spectrum(table1_params(l), HmdConfig{});
    for (int k = 0; k <= 7; ++k) {
      const double dev = s.energies.at(k) - coulomb_baseline(2.0, l, k);
      const double err = std::abs(dev - reference::kDeviation[k][l]);
      (l == 0 ? worst_l0 : worst_rest) = std::max(l == 0 ? worst_l0 : worst_rest, err);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = worst_rest <= 1e-6 && worst_l0 <= 1e-4 && seconds <= 60.0;
  o.detail = "max|d| l=1..3 " + fmt(worst_rest) + " (tol 1e-6), l=0 " + fmt(worst_l0) + " (tol 1e-4), " +
             fmt(seconds) + " s";
  return o;
}

Outcome ac2() {
  double worst_gamma = 0.0, worst_e = 0.0;
  int excluded[3] = {0, 0, 0};
  int refused = 0;
  for (int m = 0; m <= 2; ++m) {
    const GammaSpectrum g = gamma_spectrum({5.0, m, kDefaultDipoleSize}, 4);
    excluded[m] = g.excluded_count;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < g.t_values.size(); ++i) {
      double gamma = 0.0;
      try {
        gamma = channel_gamma(g, i);
      } catch (const SupercriticalChannelError&) {
        ++refused;
        continue;
      }
      const auto& row = reference::kValence[static_cast<std::size_t>(4 * m) + positive++];
      worst_gamma = std::max(worst_gamma, std::abs(gamma - row.gamma));
      const EnergySpectrum s = solve_spectrum(valence_params(m, gamma), HmdConfig{});
      for (std::size_t k = 0; k < 4; ++k) worst_e = std::max(worst_e, std::abs(-s.energies.at(k) - row.minus_energy[k]));
    }
  }
  Outcome o;
  o.pass = worst_gamma <= 1e-7 && worst_e <= 1e-6 && excluded[0] == 1 && excluded[1] == 1 && excluded[2] == 0 &&
           refused == 2;
  o.detail = "max|dgamma| " + fmt(worst_gamma) + " (tol 1e-7), max|dE| " + fmt(worst_e) +
             " (tol 1e-6), excluded m=0/1/2: " + std::to_string(excluded[0]) + "/" + std::to_string(excluded[1]) +
             "/" + std::to_string(excluded[2]);
  return o;
}

Outcome ac3() {
  double worst = 0.0;
  for (double Q : {1.0, 2.0})
    for (double g : {0.0, 1.0}) {
      PhysicalParams p;
      p.Q = Q;
      p.gamma_eff = g;
      const EnergySpectrum s = solve_spectrum(p, HmdConfig{});
      for (int k = 0; k <= 5; ++k) {
        const double e = k < static_cast<int>(s.energies.size()) ? s.energies[k] : 0.0;
        worst = std::max(worst, std::abs(e - coulomb_baseline(Q, g, k)));
      }
    }
  return {worst <= 1e-8, "max|E - E_exact| " + fmt(worst) + " (tol 1e-8)"};
}

Outcome ac4() {
  const EnergySpectrum s = solve_spectrum(table1_params(1.0), HmdConfig{});
  bool ok = true;
  std::string sizes;
  for (int k = 0; k <= 10; ++k) {
    const TraState st = tra_parameters(s.energies.at(k), table1_params(1.0));
    if (k <= 7 && st.n_max != k + 2) ok = false;
    if (k == 0 || k == 1 || k == 2 || k == 4 || k == 7 || k == 10) {
      sizes += (sizes.empty() ? "" : ",") + std::to_string(st.basis_size());
      const int expect[] = {3, 4, 5, 0, 7, 0, 0, 10, 0, 0, 13};
      if (st.basis_size() != expect[k]) ok = false;
    }
  }
  return {ok, "basis sizes for k=0,1,2,4,7,10: {" + sizes + "}"};
}

Outcome ac5() {
  std::vector<double> grid;
  for (int i = 0; i <= 30; ++i) grid.push_back(0.5 + 0.25 * i);
  const PlateauReport r = plateau_scan(table1_params(1.0), HmdConfig{}, grid, 4, 1e-8);
  const auto iv = r.interval();
  const bool ok = iv && iv->first <= 2.0 && iv->second >= 2.0;
  return {ok, iv ? "plateau [" + fmt(iv->first) + ", " + fmt(iv->second) + "], chosen rho " + fmt(*r.chosen_rho)
                 : std::string("empty plateau")};
}

Outcome ac6() {
  std::vector<std::pair<std::string, bool>> checks;
  const std::vector<double> mus = {-3.0, -4.2, -7.3, -10.6};
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(0.05 * std::pow(1.35, i));

  bool rec = true, ode = true, fwd = true, a7 = true, a8 = true, orth = true, bridge = true;
  for (double mu : mus) {
    const int N = bessel_max_degree(mu);
    const auto mono = bessel_monomials(mu, N);
    for (double x : xs) {
      const PolySequence y = bessel_eval(BesselFamily(mu, N), x);
      const PolySequence ylow = bessel_eval(BesselFamily(mu - 1.0, N + 1), x);
      for (int n = 0; n <= N; ++n) {
        const double ym = n > 0 ? y[n - 1] : 0.0;
        const auto d1 = oracle::derivative(mono[n]);
        const auto d2 = oracle::derivative(d1);
        const double t1 = x * x * oracle::poly_value(d2, x), t2 = (1 + 2 * x * (mu + 1)) * oracle::poly_value(d1, x);
        const double t3 = n * (n + 2 * mu + 1) * y[n];
        if (std::abs(t1 + t2 - t3) > 1e-10 * std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)})) ode = false;
        if (n == N) continue;
        const double dn = (n + mu) * (n + mu + 1), en = (n + mu) * (2 * n + 2 * mu + 1),
                     fn = (n + mu + 1) * (2 * n + 2 * mu + 1);
        const double rhs2 = -mu / dn * y[n] - n / en * ym + (n + 2 * mu + 1) / fn * y[n + 1];
        if (std::abs(2 * x * y[n] - rhs2) >
            1e-12 * std::max(1.0, std::abs(y[n]) * x) * std::max(1.0, std::abs(y[n + 1])))
          rec = false;
        const double r7 = (n + 1) * (n + 2 * mu) / dn * y[n] + n * (n + 1) / en * ym +
                          (n + 2 * mu) * (n + 2 * mu + 1) / fn * y[n + 1];
        if (std::abs(2 * ylow[n + 1] - r7) > 1e-10 * std::max(std::abs(r7), std::abs(2 * ylow[n + 1]))) a7 = false;
        const double g = n * (n + 2 * mu + 1);
        const double l8 = 2 * x * x * oracle::poly_value(d1, x);
        const double p8[] = {-g * y[n] / dn, g * ym / en, g * y[n + 1] / fn};
        const double s8 = std::max({std::abs(l8), std::abs(p8[0]), std::abs(p8[1]), std::abs(p8[2]), 1e-300});
        if (std::abs(l8 - (p8[0] + p8[1] + p8[2])) > 1e-10 * s8) a8 = false;
      }
    }
    // forward shift as a coefficient identity
    if (N >= 1) {
      const auto shifted = bessel_monomials(mu + 1.0, N - 1);
      for (int n = 1; n <= N; ++n) {
        const auto lhs = oracle::derivative(mono[n]);
        for (std::size_t j = 0; j < lhs.size(); ++j) {
          const double rhs = n * (n + 2 * mu + 1) * shifted[n - 1][j];
          if (std::abs(lhs[j] - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) fwd = false;
        }
      }
    }
    // orthogonality with u = 1/x
    for (int n = 0; n <= N; ++n)
      for (int m = 0; m <= N; ++m) {
        const QuadratureRule rule = gauss_laguerre(-2.0 * mu - 2.0 - n - m, N + 2);
        const double val = rule.integrate([&](double u) {
          double pn = 0.0, pm = 0.0;
          for (int j = 0; j <= n; ++j) pn += mono[n][j] * std::pow(u, n - j);
          for (int j = 0; j <= m; ++j) pm += mono[m][j] * std::pow(u, m - j);
          return pn * pm;
        });
        const double norm = bessel_norm(mu, std::max(n, m));
        if (n == m ? std::abs(val / norm - 1.0) > 1e-8 : std::abs(val) / norm > 1e-8) orth = false;
      }
    // Laguerre bridge on [0.1, 10]
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
      const PolySequence y = bessel_eval(BesselFamily(mu, N), x);
      double fact = 1.0;
      for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        const double b = fact * std::pow(-x, n) * laguerre_eval(-(2.0 * n + 2.0 * mu + 1.0), 1.0 / x, n)[n];
        if (std::abs(b - y[n]) > 1e-10 * std::max(1.0, std::abs(y[n]))) bridge = false;
      }
    }
  }
  bool genf = true;
  for (double x : {0.005, 0.02})
    for (double t : {0.25, 0.5, 1.0}) {
      const PolySequence y = bessel_eval_formal(-7.3, 12, x);
      double sum = 0.0, fact = 1.0;
      for (int n = 0; n <= 12; ++n) {
        if (n > 0) fact *= n;
        sum += y[n] * std::pow(t, n) / fact;
      }
      const double ref = oracle::bessel_generating_function(-7.3, x, t);
      if (std::abs(sum - ref) > 1e-8 * std::abs(ref)) genf = false;
    }
  checks = {{"recursion", rec}, {"ode", ode},         {"forward-shift", fwd}, {"lowering", a7},
            {"backward-shift", a8}, {"orthogonality", orth}, {"generating", genf}, {"laguerre-bridge", bridge}};
  Outcome o;
  for (const auto& [name, pass] : checks) {
    o.pass = o.pass && pass;
    o.detail += (o.detail.empty() ? "" : " ") + name + "=" + (pass ? "ok" : "FAIL");
  }
  return o;
}

Outcome ac7() {
  double worst = 0.0;
  int states = 0;
  auto check = [&](double energy, const PhysicalParams& p) {
    const TraState st = tra_solve(energy, p);
    if (st.n_max < 1) return;
    const auto alt = coefficients_from_b_polys(st);
    for (std::size_t n = 0; n < alt.size(); ++n)
      worst = std::max(worst, std::abs(alt[n] - st.coefficients[n]) / std::abs(st.coefficients[n]));
    ++states;
  };
  for (int l = 0; l <= 3; ++l) {
    const EnergySpectrum s = solve_spectrum(table1_params(l), HmdConfig{});
    for (int k = 0; k <= 7; ++k) check(s.energies.at(k), table1_params(l));
  }
  for (const auto& row : reference::kValence) {
    const EnergySpectrum s = solve_spectrum(valence_params(row.m, row.gamma), HmdConfig{});
    for (int k = 0; k <= 3; ++k) check(s.energies.at(k), valence_params(row.m, row.gamma));
  }
  return {worst <= 1e-12, std::to_string(states) + " states, max relative gap " + fmt(worst) + " (tol 1e-12)"};
}

Outcome ac8() {
  const EnergySpectrum s = solve_spectrum(table1_params(1.0), HmdConfig{});
  const auto grid = default_radial_grid();
  std::vector<double> res;
  Outcome o;
  for (int k = 0; k <= 7; ++k) {
    const TraState st = tra_solve(s.energies.at(k), table1_params(1.0));
    const WavefunctionTable a = restrict_to(tra_wavefunction(st, grid, k), 0.05, 60.0);
    const WavefunctionTable b = restrict_to(hmd_wavefunction(s.coefficients[k], 1.0, kDefaultRho, grid, k), 0.05, 60.0);
    const double r = overlay_compare(a, b).residual;
    res.push_back(r);
    if (r > (k <= 2 ? 0.10 : 0.05)) o.pass = false;
    o.detail += (o.detail.empty() ? "residuals " : ",") + fmt(r);
  }
  if (res[7] > res[0]) o.pass = false;
  o.detail += " (tol 0.10 for k<=2, 0.05 for k>=3, r7<=r0)";
  return o;
}

Outcome ac9() {
  const SymDense m = inverse_square_elements(1.0, 2, default_quad_points(2));
  const double e = std::max(std::abs(m(0, 0) - 1.0 / 6.0), std::abs(m(0, 1) - 1.0 / 6.0));
  const double o = std::max(std::abs(oracle::inverse_square_exact(1.0, 0, 0) - 1.0 / 6.0),
                            std::abs(oracle::inverse_square_exact(1.0, 0, 1) - 1.0 / 6.0));
  return {e <= 1e-11 && o <= 1e-11, "max|err| " + fmt(e) + " (tol 1e-11), oracle " + fmt(o)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 deviation table", ac1},  {"AC2 valence table", ac2}, {"AC3 hydrogenic oracle", ac3},
      {"AC4 basis growth", ac4},     {"AC5 plateau", ac5},       {"AC6 polynomial identities", ac6},
      {"AC7 dual-route coefficients", ac7}, {"AC8 wavefunction overlay", ac8}, {"AC9 inverse-square closed forms", ac9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
