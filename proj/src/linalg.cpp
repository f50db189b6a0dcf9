#include "multipole/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "multipole/errors.hpp"

namespace multipole {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

SymTridiag::SymTridiag(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty() ? !offdiag_.empty() : offdiag_.size() + 1 != diag_.size()) {
    throw DomainError("SymTridiag: offdiag must have size n-1");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(diag_.begin(), diag_.end(), finite) ||
      !std::all_of(offdiag_.begin(), offdiag_.end(), finite)) {
    throw DomainError("SymTridiag: non-finite entry");
  }
}

Matrix SymTridiag::to_dense() const {
  const std::size_t n = size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag_[i];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = offdiag_[i];
  }
  return m;
}

SymDense::SymDense(Matrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.rows();
  if (entries_.cols() != n) throw DomainError("SymDense: matrix is not square");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(entries_(i, j))) throw DomainError("SymDense: non-finite entry");
      scale = std::max(scale, std::abs(entries_(i, j)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(entries_(i, j) - entries_(j, i)) > 1e-13 * scale) {
        throw DomainError("SymDense: asymmetric entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      }
}

namespace {

// Row-major square work array in the working precision.
template <class T>
struct Square {
  explicit Square(std::size_t n) : n(n), data(n * n, T(0)) {}
  static Square identity(std::size_t n) {
    Square s(n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = T(1);
    return s;
  }
  T& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  T operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  std::size_t n;
  std::vector<T> data;
};

// Implicit-shift QL on (d, e) where e[i] couples i and i+1 and e[n-1] = 0.
// Rotations are accumulated into the columns of z when z is non-null.
template <class T>
void ql_implicit(std::vector<T>& d, std::vector<T>& e, Square<T>* z) {
  using std::abs;
  const std::size_t n = d.size();
  const T eps = std::numeric_limits<T>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const T dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == kMaxSweepsPerEigenvalue) {
        throw ConvergenceError("symmetric QL iteration did not converge for eigenvalue " +
                                   std::to_string(l),
                               l);
      }
      T g = (d[l + 1] - d[l]) / (T(2) * e[l]);
      T r = std::hypot(g, T(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      T s = 1, c = 1, p = 0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        T f = s * e[i];
        const T b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == T(0)) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + T(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z) {
          for (std::size_t k = 0; k < z->n; ++k) {
            f = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
            (*z)(k, i) = c * (*z)(k, i) - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }
}

template <class T>
EigenResult sorted_result(const std::vector<T>& d, const Square<T>* z) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  EigenResult out;
  out.values.reserve(d.size());
  for (std::size_t k : order) out.values.push_back(static_cast<double>(d[k]));
  if (z) {
    Matrix v(z->n, d.size());
    for (std::size_t c = 0; c < order.size(); ++c)
      for (std::size_t r = 0; r < z->n; ++r) v(r, c) = static_cast<double>((*z)(r, order[c]));
    out.vectors = std::move(v);
  }
  return out;
}

// Householder reduction of a full symmetric matrix to tridiagonal form,
// A = Q T Q^T. On return a holds garbage below the tridiagonal band.
template <class T>
void householder_tridiagonalize(Square<T>& a, std::vector<T>& d, std::vector<T>& e, Square<T>& q) {
  const std::size_t n = a.n;
  q = Square<T>::identity(n);
  std::vector<T> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    T alpha2 = 0;
    for (std::size_t i = 0; i < m; ++i) alpha2 += a(k + 1 + i, k) * a(k + 1 + i, k);
    if (alpha2 == T(0)) continue;
    const T alpha = std::sqrt(alpha2);
    const T sgn = a(k + 1, k) >= T(0) ? T(1) : T(-1);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    v[0] += sgn * alpha;
    T vnorm2 = 0;
    for (std::size_t i = 0; i < m; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == T(0)) continue;
    const T beta = T(2) / vnorm2;

    // trailing block B <- H B H with H = I - beta v v^T
    T pv = 0;
    for (std::size_t i = 0; i < m; ++i) {
      T acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = beta * acc;
      pv += p[i] * v[i];
    }
    const T kk = T(0.5) * beta * pv;
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kk * v[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(k + 1 + i, k + 1 + j) -= v[i] * w[j] + w[i] * v[j];

    a(k + 1, k) = a(k, k + 1) = -sgn * alpha;
    for (std::size_t i = 1; i < m; ++i) a(k + 1 + i, k) = a(k, k + 1 + i) = 0;

    for (std::size_t r = 0; r < n; ++r) {
      T t = 0;
      for (std::size_t i = 0; i < m; ++i) t += q(r, k + 1 + i) * v[i];
      t *= beta;
      for (std::size_t i = 0; i < m; ++i) q(r, k + 1 + i) -= t * v[i];
    }
  }
  d.assign(n, T(0));
  e.assign(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
    if (i + 1 < n) e[i] = a(i + 1, i);
  }
}

template <class T>
EigenResult dense_eigen_in(Square<T> work, bool want_vectors) {
  std::vector<T> d, e;
  Square<T> q(0);
  householder_tridiagonalize(work, d, e, q);
  if (!want_vectors) {
    ql_implicit<T>(d, e, nullptr);
    return sorted_result<T>(d, nullptr);
  }
  ql_implicit(d, e, &q);
  return sorted_result(d, &q);
}

}  // namespace

EigenResult symtri_eigen(const SymTridiag& t, bool want_vectors) {
  const std::size_t n = t.size();
  std::vector<double> d = t.diag();
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag().begin(), t.offdiag().end(), e.begin());
  if (!want_vectors) {
    ql_implicit<double>(d, e, nullptr);
    return sorted_result<double>(d, nullptr);
  }
  auto z = Square<double>::identity(n);
  ql_implicit(d, e, &z);
  return sorted_result(d, &z);
}

EigenResult dense_sym_eigen(const SymDense& a, bool want_vectors) {
  const std::size_t n = a.size();
  Square<double> work(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work(i, j) = a(i, j);
  return dense_eigen_in(std::move(work), want_vectors);
}

LowerBidiagonal cholesky_tridiag(const SymTridiag& b) {
  const std::size_t n = b.size();
  LowerBidiagonal l;
  l.diag.resize(n);
  l.sub.resize(n > 0 ? n - 1 : 0);
  double carry = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pivot = b.diag()[i] - carry;
    if (!(pivot > 0.0)) throw NotPositiveDefiniteError(i, pivot);
    l.diag[i] = std::sqrt(pivot);
    if (i + 1 < n) {
      l.sub[i] = b.offdiag()[i] / l.diag[i];
      carry = l.sub[i] * l.sub[i];
    }
  }
  return l;
}

// The reduction to standard form runs in long double: with the Laguerre
// overlap the reduced matrix is ill-conditioned enough that double-precision
// round-off shows up at the 1e-11 level in the low eigenvalues.
EigenResult generalized_sym_eigen(const SymDense& h, const SymTridiag& b, bool want_vectors) {
  using T = long double;
  const std::size_t n = h.size();
  if (b.size() != n) throw DomainError("generalized_sym_eigen: order mismatch");

  std::vector<T> ld(n), ls(n > 0 ? n - 1 : 0);
  T carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const T pivot = T(b.diag()[i]) - carry;
    if (!(pivot > T(0))) throw NotPositiveDefiniteError(i, static_cast<double>(pivot));
    ld[i] = std::sqrt(pivot);
    if (i + 1 < n) {
      ls[i] = T(b.offdiag()[i]) / ld[i];
      carry = ls[i] * ls[i];
    }
  }

  // X = L^{-1} H
  Square<T> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x(0, j) = T(h(0, j)) / ld[0];
    for (std::size_t i = 1; i < n; ++i) x(i, j) = (T(h(i, j)) - ls[i - 1] * x(i - 1, j)) / ld[i];
  }
  // C = L^{-1} X^T = L^{-1} H L^{-T}
  Square<T> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c(0, j) = x(j, 0) / ld[0];
    for (std::size_t i = 1; i < n; ++i) c(i, j) = (x(j, i) - ls[i - 1] * c(i - 1, j)) / ld[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c(i, j) = c(j, i) = T(0.5) * (c(i, j) + c(j, i));

  std::vector<T> d, e;
  Square<T> q(0);
  householder_tridiagonalize(c, d, e, q);
  if (!want_vectors) {
    ql_implicit<T>(d, e, nullptr);
    return sorted_result<T>(d, nullptr);
  }
  ql_implicit(d, e, &q);

  // v = L^{-T} w
  for (std::size_t k = 0; k < n; ++k) {
    q(n - 1, k) /= ld[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) q(i, k) = (q(i, k) - ls[i] * q(i + 1, k)) / ld[i];
  }
  return sorted_result(d, &q);
}

}  // namespace multipole
