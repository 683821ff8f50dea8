#pragma once

// Core scalar/matrix aliases, the error taxonomy, and the numerical
// equality policy shared by every operation in the library.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cnops {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept { return "Error"; }
};

class DomainError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "DomainError"; }
};

class NumericalFailure : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "NumericalFailure"; }
};

class InvalidConjugation : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "InvalidConjugation"; }
};

class RangeError : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "RangeError"; }
};

class ModulusMismatch : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "ModulusMismatch"; }
};

class NotCNormal : public Error {
public:
  using Error::Error;
  const char* name() const noexcept override { return "NotCNormal"; }
};

/// Global numerical-equality policy. Matrix equality X ~ Y means
/// ||X-Y||_F <= eps_abs + eps_rel * max(||X||_F, ||Y||_F), and a singular
/// value counts as nonzero iff it exceeds eps_abs + eps_rel * sigma_max.
struct Tolerance {
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;

  double bound(double scale) const { return eps_abs + eps_rel * scale; }

  double rank_cutoff(double sigma_max) const { return bound(sigma_max); }

  bool scalar_eq(double a, double b) const {
    return std::abs(a - b) <= bound(std::max(std::abs(a), std::abs(b)));
  }

  bool matrix_eq(const ComplexMatrix& x, const ComplexMatrix& y) const {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    return (x - y).norm() <= bound(std::max(x.norm(), y.norm()));
  }

  bool vector_eq(const ComplexVector& x, const ComplexVector& y) const {
    if (x.size() != y.size()) return false;
    return (x - y).norm() <= bound(std::max(x.norm(), y.norm()));
  }
};

inline bool is_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

/// Inner product, linear in the first slot: <x,y> = sum_i x_i * conj(y_i).
inline Complex inner(const ComplexVector& x, const ComplexVector& y) {
  return y.dot(x);
}

inline double residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x - y).norm();
}

inline void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw DomainError(std::string(who) + ": matrix must be square");
}

inline void require_finite(const ComplexMatrix& m, const char* who) {
  if (!is_finite(m))
    throw DomainError(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace cnops
