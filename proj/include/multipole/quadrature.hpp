#pragma once

// Generalized Gauss-Laguerre rules (weight y^alpha e^{-y}) from the Jacobi
// matrix, and the inverse-square matrix elements of the Laguerre basis.

#include <vector>

#include "multipole/linalg.hpp"

namespace multipole {

struct QuadratureRule {
  double alpha = 0.0;
  std::vector<double> nodes;    // ascending, positive
  std::vector<double> weights;  // positive; sum = Gamma(alpha + 1)

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Nodes and eigenvector rows of the K x K Jacobi matrix of the weight
/// y^alpha e^{-y}. values(n, i) = sqrt(w_i) q_n(x_i), q_n the orthonormal
/// polynomial with positive leading coefficient, up to a sign per column i.
/// Unlike w_i alone, these rows stay representable at the largest nodes.
struct JacobiEigensystem {
  double alpha = 0.0;
  std::vector<double> nodes;
  Matrix values;
};

JacobiEigensystem laguerre_jacobi_eigensystem(double alpha, int k);

QuadratureRule gauss_laguerre(double alpha, int k);

inline int default_quad_points(int n_basis) { return n_basis + 50; }

/// True when gamma = 0: the integral diverges and the value depends on the
/// quadrature order.
inline bool inverse_square_is_regularized(double gamma) { return gamma == 0.0; }

/// <n|y^-2|m> = A_n A_m int y^{2gamma-1} e^{-y} L_n^{2gamma+1} L_m^{2gamma+1} dy
/// for n, m < n_basis, with A_n = sqrt(n!/Gamma(n+2gamma+2)).
///
/// gamma > 0: K-point rule for weight y^{2gamma-1} e^{-y}; the integrand is a
/// polynomial of degree n+m and the rule is exact for K >= n_basis.
/// gamma = 0: K-point rule for weight y e^{-y} applied to y^{-2} times the
/// basis product (regularized value).
SymDense inverse_square_elements(double gamma, int n_basis, int k);

}  // namespace multipole
