#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multipole {

/// Input outside the domain of an operation (bad parameters, invalid degree,
/// zero Pochhammer factor, ...). The CLI maps it to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cholesky pivot <= 0.
class NotPositiveDefiniteError : public DomainError {
 public:
  NotPositiveDefiniteError(std::size_t pivot, double value)
      : DomainError("matrix is not positive definite: pivot " + std::to_string(pivot) +
                    " = " + std::to_string(value)),
        pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

/// A dipole channel with (gamma + 1/2)^2 <= 0, i.e. complex gamma. The
/// bound-state pipeline cannot handle it.
class SupercriticalChannelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative method failed to converge. The CLI maps it to exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Truncated infinite matrix did not converge under size doubling.
class TruncationError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace multipole
