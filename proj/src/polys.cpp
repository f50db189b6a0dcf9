#include "multipole/polys.hpp"

#include "wide.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "multipole/errors.hpp"

namespace multipole {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double log_gamma_positive(double x) {
  // valid for x >= 1/2
  const double xm = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (xm + static_cast<double>(i));
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(series);
}

void require_nonzero(double denom, const char* what, int n) {
  if (denom == 0.0) {
    throw DomainError(std::string("vanishing recursion denominator (") + what + ") at n = " +
                      std::to_string(n));
  }
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || is_nonpositive_integer(x)) {
    throw DomainError("log_gamma: pole or non-finite argument " + std::to_string(x));
  }
  if (x >= 0.5) return log_gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  const double s = std::sin(std::numbers::pi * x);
  return std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma_positive(1.0 - x);
}

double gamma_fn(double x) {
  const double lg = log_gamma(x);
  if (x > 0.0) return std::exp(lg);
  const double s = std::sin(std::numbers::pi * x);
  return (s > 0.0 ? 1.0 : -1.0) * std::exp(lg);
}

double SignedLog::value() const { return sign * std::exp(log_magnitude); }

SignedLog log_pochhammer(double a, int n) {
  if (n < 0) throw DomainError("log_pochhammer: negative n");
  SignedLog out;
  for (int k = 0; k < n; ++k) {
    const double factor = a + k;
    if (factor == 0.0) {
      throw DomainError("log_pochhammer: factor a + k vanishes at k = " + std::to_string(k));
    }
    out.log_magnitude += std::log(std::abs(factor));
    if (factor < 0.0) out.sign = -out.sign;
  }
  return out;
}

int bessel_max_degree(double mu) {
  const double bound = -mu - 0.5;
  if (bound <= 0.0) return -1;
  return static_cast<int>(std::ceil(bound)) - 1;
}

BesselFamily::BesselFamily(double mu, int n_max) : mu_(mu), n_max_(n_max) {
  if (!(mu < -0.5)) throw DomainError("BesselFamily: mu must be < -1/2, got " + std::to_string(mu));
  if (n_max < 0 || n_max > bessel_max_degree(mu)) {
    throw DomainError("BesselFamily: n_max = " + std::to_string(n_max) + " outside 0.." +
                      std::to_string(bessel_max_degree(mu)));
  }
}

namespace {

struct BesselCoeffs {
  double diag, lower, upper;  // 2x Y_n = diag Y_n - lower Y_{n-1} + upper Y_{n+1}
};

BesselCoeffs bessel_coeffs(double mu, int n) {
  const double a = n + mu;
  const double b = n + mu + 1.0;
  const double c = 2.0 * n + 2.0 * mu + 1.0;
  require_nonzero(a * b, "(n+mu)(n+mu+1)", n);
  require_nonzero(c, "2n+2mu+1", n);
  const double upper = (n + 2.0 * mu + 1.0) / (b * c);
  require_nonzero(upper, "n+2mu+1", n);
  return {-mu / (a * b), n / (a * c), upper};
}

}  // namespace

PolySequence bessel_eval_formal(double mu, int n_max, double x) {
  PolySequence seq{x, {}};
  seq.values.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.values.push_back(1.0);
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto c = bessel_coeffs(mu, n);
    const double cur = seq.values.back();
    const double next = ((2.0 * x - c.diag) * cur + c.lower * prev) / c.upper;
    prev = cur;
    seq.values.push_back(next);
  }
  return seq;
}

PolySequence bessel_eval(const BesselFamily& fam, double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_eval: non-finite argument");
  return bessel_eval_formal(fam.mu(), fam.n_max(), x);
}

std::vector<std::vector<double>> bessel_monomials(double mu, int n_max) {
  std::vector<std::vector<double>> coeffs;
  coeffs.push_back({1.0});
  for (int n = 0; n < n_max; ++n) {
    const auto c = bessel_coeffs(mu, n);
    const auto& cur = coeffs.back();
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] += 2.0 * cur[j];
      next[j] -= c.diag * cur[j];
    }
    if (n > 0) {
      const auto& prev = coeffs[coeffs.size() - 2];
      for (std::size_t j = 0; j < prev.size(); ++j) next[j] += c.lower * prev[j];
    }
    for (double& v : next) v /= c.upper;
    coeffs.push_back(std::move(next));
  }
  return coeffs;
}

double bessel_norm(double mu, int n) {
  if (n < 0 || n > bessel_max_degree(mu)) {
    throw DomainError("bessel_norm: degree " + std::to_string(n) + " outside the orthogonal range 0.." +
                      std::to_string(bessel_max_degree(mu)));
  }
  const double log_num = log_gamma(n + 1.0) + log_gamma(-n - 2.0 * mu);
  return std::exp(log_num) / -(2.0 * n + 2.0 * mu + 1.0);
}

PolySequence laguerre_eval(double nu, double x, int n_max) {
  if (!(nu > -1.0)) throw DomainError("laguerre_eval: nu must be > -1");
  PolySequence seq{x, {1.0}};
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double cur = seq.values.back();
    const double next = ((2.0 * n + nu + 1.0 - x) * cur - (n + nu) * prev) / (n + 1.0);
    prev = cur;
    seq.values.push_back(next);
  }
  return seq;
}

PolySequence laguerre_normalized_eval(double nu, double x, int n_max) {
  if (!(nu > -1.0)) throw DomainError("laguerre_normalized_eval: nu must be > -1");
  PolySequence seq{x, {std::exp(-0.5 * log_gamma(nu + 1.0))}};
  double prev = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double cur = seq.values.back();
    const double next = ((2.0 * n + nu + 1.0 - x) * cur - std::sqrt(n * (n + nu)) * prev) /
                        std::sqrt((n + 1.0) * (n + nu + 1.0));
    prev = cur;
    seq.values.push_back(next);
  }
  return seq;
}

namespace detail {

std::vector<Wide> b_poly_wide(const Wide& mu, const Wide& z, const Wide& sigma, int n_max) {
  std::vector<Wide> out{Wide(1)};
  Wide prev = 0;
  for (int n = 0; n < n_max; ++n) {
    const Wide a = n + mu;
    const Wide b = n + mu + 1;
    const Wide h = n + mu + Wide(0.5);
    require_nonzero(static_cast<double>(a * b), "(n+mu)(n+mu+1)", n);
    require_nonzero(static_cast<double>(h), "n+mu+1/2", n);
    const Wide lead = n + 2 * mu + 1;
    if (lead == 0) {
      throw DomainError("b_poly_eval: leading coefficient n+2mu+1 vanishes at n = " + std::to_string(n));
    }
    const Wide diag = -2 * mu / (a * b) + sigma * h * h;
    const Wide lower = n / (a * h);
    const Wide upper = lead / (b * h);
    const Wide cur = out.back();
    out.push_back(((z - diag) * cur + lower * prev) / upper);
    prev = cur;
  }
  return out;
}

}  // namespace detail

PolySequence b_poly_eval(const BPolyParams& params, int n_max) {
  const double mu = params.mu;
  if (!(mu < -0.5)) throw DomainError("b_poly_eval: mu must be < -1/2");
  if (n_max < 0 || n_max > bessel_max_degree(mu)) {
    throw DomainError("b_poly_eval: n_max = " + std::to_string(n_max) + " exceeds N = " +
                      std::to_string(bessel_max_degree(mu)));
  }
  const auto wide = detail::b_poly_wide(mu, params.z, params.sigma, n_max);
  PolySequence seq{params.z, {}};
  for (const auto& v : wide) seq.values.push_back(static_cast<double>(v));
  return seq;
}

}  // namespace multipole
