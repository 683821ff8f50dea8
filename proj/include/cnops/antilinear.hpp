#pragma once

// Anti-linear maps and conjugations as first-class values.
//
// Encoding convention: an anti-linear map X is stored as the square matrix
// M of its action x |-> M * conj(x). Under this encoding, with the inner
// product linear in the first slot,
//
//   sharp adjoint        X#           has matrix  M^T
//   anti o linear A      X o A        has matrix  M * conj(A)
//   linear A o anti      A o X        has matrix  A * M
//   anti o anti          X1 o X2      is linear:  M1 * conj(M2)
//
// A conjugation (anti-linear isometric involution) is exactly an
// anti-linear map whose matrix is symmetric unitary.

#include <utility>

#include "cnops/numeric.hpp"
#include "cnops/rng.hpp"
#include "cnops/types.hpp"

namespace cnops {

struct AntiLinearMap {
  ComplexMatrix mat;

  Index dim() const { return mat.rows(); }

  ComplexVector apply(const ComplexVector& v) const {
    if (mat.cols() != v.size()) throw DomainError("apply: dimension mismatch");
    return mat * v.conjugate();
  }
};

struct Conjugation {
  ComplexMatrix mat;  // symmetric unitary

  Index dim() const { return mat.rows(); }
  AntiLinearMap antilinear() const { return {mat}; }

  ComplexVector apply(const ComplexVector& v) const {
    if (mat.cols() != v.size()) throw DomainError("apply: dimension mismatch");
    return mat * v.conjugate();
  }
};

/// X# with <Xx,y> = <X#y,x> for all x, y.
inline AntiLinearMap sharp_adjoint(const AntiLinearMap& x) {
  return {x.mat.transpose()};
}

inline AntiLinearMap compose(const AntiLinearMap& x, const ComplexMatrix& a) {
  if (x.mat.cols() != a.rows())
    throw DomainError("compose: dimension mismatch");
  return {x.mat * a.conjugate()};
}

inline AntiLinearMap compose(const ComplexMatrix& a, const AntiLinearMap& x) {
  if (a.cols() != x.mat.rows())
    throw DomainError("compose: dimension mismatch");
  return {a * x.mat};
}

inline ComplexMatrix compose(const AntiLinearMap& x, const AntiLinearMap& y) {
  if (x.mat.cols() != y.mat.rows())
    throw DomainError("compose: dimension mismatch");
  return x.mat * y.mat.conjugate();
}

inline ComplexMatrix compose(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainError("compose: dimension mismatch");
  return a * b;
}

inline AntiLinearMap compose(const Conjugation& c, const ComplexMatrix& a) {
  return compose(c.antilinear(), a);
}

inline AntiLinearMap compose(const ComplexMatrix& a, const Conjugation& c) {
  return compose(a, c.antilinear());
}

inline ComplexMatrix compose(const Conjugation& c, const AntiLinearMap& x) {
  return compose(c.antilinear(), x);
}

inline ComplexMatrix compose(const AntiLinearMap& x, const Conjugation& c) {
  return compose(x, c.antilinear());
}

/// Matrix of the linear map C o T o C.
inline ComplexMatrix conjugate_by(const Conjugation& c, const ComplexMatrix& t) {
  if (c.dim() != t.rows() || t.rows() != t.cols())
    throw DomainError("conjugate_by: dimension mismatch");
  return c.mat * t.conjugate() * c.mat.conjugate();
}

inline Conjugation make_conjugation(const ComplexMatrix& s,
                                    const Tolerance& tol = {}) {
  if (s.rows() != s.cols())
    throw InvalidConjugation("make_conjugation: matrix must be square");
  require_finite(s, "make_conjugation");
  const ComplexMatrix id = ComplexMatrix::Identity(s.rows(), s.cols());
  if (!tol.matrix_eq(s * s.adjoint(), id))
    throw InvalidConjugation("make_conjugation: matrix is not unitary");
  if (!tol.matrix_eq(s, s.transpose()))
    throw InvalidConjugation("make_conjugation: matrix is not symmetric");
  return {s};
}

/// Identity-matrix conjugation x |-> conj(x).
inline Conjugation canonical_conjugation(Index n) {
  return {ComplexMatrix::Identity(n, n)};
}

/// Exchange-matrix conjugation (z_1,...,z_n) |-> (conj(z_n),...,conj(z_1)).
inline Conjugation flip_conjugation(Index n) {
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) s(i, n - 1 - i) = 1.0;
  return {s};
}

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// R factor normalized to a positive diagonal.
inline ComplexMatrix haar_unitary(Index n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

/// Random conjugation S = U U^T for Haar unitary U. Every symmetric unitary
/// arises this way (Takagi), so this samples the whole class.
inline Conjugation random_conjugation(Index n, Rng& rng) {
  if (n < 1) throw DomainError("random_conjugation: dimension must be >= 1");
  const ComplexMatrix u = haar_unitary(n, rng);
  ComplexMatrix s = u * u.transpose();
  s = ((s + s.transpose()) / 2.0).eval();  // exact symmetry
  return {s};
}

inline Conjugation random_conjugation(Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_conjugation(n, rng);
}

/// X# X = X X# as linear compositions.
inline bool is_antilinear_normal(const AntiLinearMap& x,
                                 const Tolerance& tol = {}) {
  require_square(x.mat, "is_antilinear_normal");
  const ComplexMatrix sharp_then = compose(sharp_adjoint(x), x);
  const ComplexMatrix then_sharp = compose(x, sharp_adjoint(x));
  return tol.matrix_eq(sharp_then, then_sharp);
}

/// Anti-linear map isometric on ran(initial_projector) and zero on its
/// orthocomplement; final_projector is the projector onto its range.
struct PartialAntiIsometry {
  ComplexMatrix mat;
  ComplexMatrix initial_projector;
  ComplexMatrix final_projector;

  AntiLinearMap antilinear() const { return {mat}; }
};

/// Projector onto the kernel of the anti-linear map x |-> M conj(x),
/// which is the conjugate of the matrix kernel.
inline ComplexMatrix antilinear_kernel_projector(const AntiLinearMap& x,
                                                 const Tolerance& tol = {}) {
  return kernel_projector(x.mat, tol).conjugate();
}

inline ComplexMatrix antilinear_range_projector(const AntiLinearMap& x,
                                                const Tolerance& tol = {}) {
  return range_projector(x.mat, tol);
}

}  // namespace cnops
