#include "multipole/quadrature.hpp"

#include <cmath>
#include <string>

#include "multipole/errors.hpp"
#include "multipole/polys.hpp"

namespace multipole {

JacobiEigensystem laguerre_jacobi_eigensystem(double alpha, int k) {
  if (!(alpha > -1.0)) throw DomainError("Gauss-Laguerre: alpha must be > -1, got " + std::to_string(alpha));
  if (k < 1) throw DomainError("Gauss-Laguerre: need at least one node");
  std::vector<double> diag(static_cast<std::size_t>(k));
  std::vector<double> off(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 0; i + 1 < k; ++i) off[i] = std::sqrt((i + 1.0) * (i + alpha + 1.0));
  EigenResult eig = symtri_eigen(SymTridiag(std::move(diag), std::move(off)), true);
  return {alpha, std::move(eig.values), std::move(*eig.vectors)};
}

QuadratureRule gauss_laguerre(double alpha, int k) {
  const JacobiEigensystem sys = laguerre_jacobi_eigensystem(alpha, k);
  const double mass = gamma_fn(alpha + 1.0);
  QuadratureRule rule{alpha, sys.nodes, std::vector<double>(sys.nodes.size())};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v0 = sys.values(0, i);
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

SymDense inverse_square_elements(double gamma, int n_basis, int k) {
  if (!(gamma >= 0.0)) throw DomainError("inverse_square_elements: gamma must be >= 0");
  if (n_basis < 1) throw DomainError("inverse_square_elements: empty basis");
  if (k < n_basis) {
    throw DomainError("inverse_square_elements: need K >= n_basis (" + std::to_string(k) + " < " +
                      std::to_string(n_basis) + ")");
  }
  const auto nb = static_cast<std::size_t>(n_basis);

  // rows(n, i) = sqrt(w_i) A_n L_n^{2gamma+1}(x_i) [/ x_i in the regularized case]
  Matrix rows(nb, static_cast<std::size_t>(k));
  if (inverse_square_is_regularized(gamma)) {
    // The rule's own orthonormal family is the basis: A_n L_n^1 = (-1)^n q_n.
    const JacobiEigensystem sys = laguerre_jacobi_eigensystem(1.0, k);
    for (std::size_t n = 0; n < nb; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      for (std::size_t i = 0; i < sys.nodes.size(); ++i) rows(n, i) = sign * sys.values(n, i) / sys.nodes[i];
    }
  } else {
    // Weight y^{a} e^{-y} with a = 2gamma-1, and L_n^{a+2} = sum_j (n-j+1) L_j^{a}.
    // sqrt(w_i) L_j^{a}(x_i) = (-1)^j sqrt(Gamma(j+a+1)/j!) values(j, i).
    const double a = 2.0 * gamma - 1.0;
    const JacobiEigensystem sys = laguerre_jacobi_eigensystem(a, k);
    std::vector<double> half_log_in(nb), half_log_out(nb);
    for (std::size_t j = 0; j < nb; ++j) {
      const double dj = static_cast<double>(j);
      half_log_in[j] = 0.5 * (log_gamma(dj + a + 1.0) - log_gamma(dj + 1.0));
      half_log_out[j] = 0.5 * (log_gamma(dj + 1.0) - log_gamma(dj + 2.0 * gamma + 2.0));
    }
    Matrix conv(nb, nb);
    for (std::size_t n = 0; n < nb; ++n)
      for (std::size_t j = 0; j <= n; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        conv(n, j) = sign * static_cast<double>(n - j + 1) * std::exp(half_log_out[n] + half_log_in[j]);
      }
    for (std::size_t n = 0; n < nb; ++n)
      for (std::size_t i = 0; i < sys.nodes.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= n; ++j) acc += conv(n, j) * sys.values(j, i);
        rows(n, i) = acc;
      }
  }

  Matrix out(nb, nb);
  const std::size_t kk = rows.cols();
  for (std::size_t n = 0; n < nb; ++n)
    for (std::size_t m = 0; m <= n; ++m) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kk; ++i) acc += rows(n, i) * rows(m, i);
      out(n, m) = out(m, n) = acc;
    }
  return SymDense(std::move(out));
}

}  // namespace multipole
