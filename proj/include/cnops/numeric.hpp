#pragma once

// Dense complex linear-algebra substrate: SVD, Hermitian and normal
// eigendecompositions, Moore-Penrose pseudoinverse, PSD square root,
// range/kernel projectors, and positive-semidefinite ordering. All rank
// decisions go through Tolerance::rank_cutoff; there are no per-routine
// thresholds.

#include <algorithm>
#include <utility>
#include <vector>

#include "cnops/types.hpp"

namespace cnops {

struct SvdResult {
  ComplexMatrix u;   // rows x rows, unitary
  RealVector sigma;  // min(rows, cols), descending
  ComplexMatrix v;   // cols x cols, unitary

  ComplexMatrix reconstruct() const {
    ComplexMatrix s = ComplexMatrix::Zero(u.cols(), v.cols());
    for (Index i = 0; i < sigma.size(); ++i) s(i, i) = sigma(i);
    return u * s * v.adjoint();
  }
};

inline SvdResult svd(const ComplexMatrix& a) {
  require_finite(a, "svd");
  Eigen::JacobiSVD<ComplexMatrix> dec(a,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (dec.info() != Eigen::Success)
    throw NumericalFailure("svd: decomposition did not converge");
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

inline RealVector singular_values(const ComplexMatrix& a) {
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> dec(a);
  if (dec.info() != Eigen::Success)
    throw NumericalFailure("singular_values: decomposition did not converge");
  return dec.singularValues();
}

inline double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

struct HermitianEig {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalues
};

inline HermitianEig eig_hermitian(const ComplexMatrix& h,
                                  const Tolerance& tol = {}) {
  require_square(h, "eig_hermitian");
  require_finite(h, "eig_hermitian");
  if (!tol.matrix_eq(h, h.adjoint()))
    throw DomainError("eig_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("eig_hermitian: solver did not converge");
  HermitianEig out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  return out;
}

inline ComplexMatrix pinv(const ComplexMatrix& a, const Tolerance& tol = {}) {
  if (a.size() == 0) return a.adjoint();
  const SvdResult dec = svd(a);
  const double cutoff =
      dec.sigma.size() > 0 ? tol.rank_cutoff(dec.sigma(0)) : 0.0;
  ComplexMatrix splus = ComplexMatrix::Zero(a.cols(), a.rows());
  for (Index i = 0; i < dec.sigma.size(); ++i)
    if (dec.sigma(i) > cutoff) splus(i, i) = 1.0 / dec.sigma(i);
  return dec.v * splus * dec.u.adjoint();
}

inline Index numerical_rank(const ComplexMatrix& a, const Tolerance& tol = {}) {
  const RealVector s = singular_values(a);
  if (s.size() == 0) return 0;
  const double cutoff = tol.rank_cutoff(s(0));
  Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  return r;
}

/// PSD square root. Eigenvalues below the rank cutoff (including roundoff
/// negatives down to -cutoff) clamp to zero; anything more negative is a
/// genuine domain violation.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& h, const Tolerance& tol = {}) {
  const HermitianEig eig = eig_hermitian(h, tol);
  const double lambda_max =
      eig.eigenvalues.size() > 0 ? std::max(0.0, eig.eigenvalues(0)) : 0.0;
  const double cutoff = tol.rank_cutoff(lambda_max);
  RealVector roots(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < -cutoff)
      throw DomainError("sqrt_psd: input has a significantly negative eigenvalue");
    roots(i) = lambda <= cutoff ? 0.0 : std::sqrt(lambda);
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

/// |A| = (A^* A)^{1/2}.
inline ComplexMatrix modulus(const ComplexMatrix& a, const Tolerance& tol = {}) {
  return sqrt_psd(a.adjoint() * a, tol);
}

/// Orthogonal projector onto the numerical range of A.
inline ComplexMatrix range_projector(const ComplexMatrix& a,
                                     const Tolerance& tol = {}) {
  const SvdResult dec = svd(a);
  const double cutoff =
      dec.sigma.size() > 0 ? tol.rank_cutoff(dec.sigma(0)) : 0.0;
  Index r = 0;
  while (r < dec.sigma.size() && dec.sigma(r) > cutoff) ++r;
  if (r == 0) return ComplexMatrix::Zero(a.rows(), a.rows());
  const ComplexMatrix ur = dec.u.leftCols(r);
  return ur * ur.adjoint();
}

/// Orthogonal projector onto the numerical kernel of A (= ran(A^*)^perp).
inline ComplexMatrix kernel_projector(const ComplexMatrix& a,
                                      const Tolerance& tol = {}) {
  const SvdResult dec = svd(a);
  const double cutoff =
      dec.sigma.size() > 0 ? tol.rank_cutoff(dec.sigma(0)) : 0.0;
  Index r = 0;
  while (r < dec.sigma.size() && dec.sigma(r) > cutoff) ++r;
  const Index n = a.cols();
  if (r == n) return ComplexMatrix::Zero(n, n);
  const ComplexMatrix vk = dec.v.rightCols(n - r);
  return vk * vk.adjoint();
}

/// Orthonormal basis of the numerical kernel of A, as columns.
inline ComplexMatrix kernel_basis(const ComplexMatrix& a,
                                  const Tolerance& tol = {}) {
  const SvdResult dec = svd(a);
  const double cutoff =
      dec.sigma.size() > 0 ? tol.rank_cutoff(dec.sigma(0)) : 0.0;
  Index r = 0;
  while (r < dec.sigma.size() && dec.sigma(r) > cutoff) ++r;
  return dec.v.rightCols(a.cols() - r);
}

inline ComplexMatrix range_basis(const ComplexMatrix& a,
                                 const Tolerance& tol = {}) {
  const SvdResult dec = svd(a);
  const double cutoff =
      dec.sigma.size() > 0 ? tol.rank_cutoff(dec.sigma(0)) : 0.0;
  Index r = 0;
  while (r < dec.sigma.size() && dec.sigma(r) > cutoff) ++r;
  return dec.u.leftCols(r);
}

/// A <= B in the PSD order, up to the tolerance slack on min eig(B - A).
inline bool psd_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                    const Tolerance& tol = {}) {
  require_square(a, "psd_leq");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("psd_leq: dimension mismatch");
  if (!tol.matrix_eq(a, a.adjoint()) || !tol.matrix_eq(b, b.adjoint()))
    throw DomainError("psd_leq: inputs must be Hermitian");
  const ComplexMatrix diff = b - a;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(diff);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("psd_leq: eigensolver did not converge");
  return es.eigenvalues().minCoeff() >= -tol.bound(diff.norm());
}

inline bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = {}) {
  return a.rows() == a.cols() && tol.matrix_eq(a, a.adjoint());
}

inline bool is_normal_matrix(const ComplexMatrix& a, const Tolerance& tol = {}) {
  if (a.rows() != a.cols()) return false;
  return tol.matrix_eq(a * a.adjoint(), a.adjoint() * a);
}

inline bool is_unitary(const ComplexMatrix& a, const Tolerance& tol = {}) {
  if (a.rows() != a.cols()) return false;
  return tol.matrix_eq(a * a.adjoint(),
                       ComplexMatrix::Identity(a.rows(), a.cols()));
}

inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Greedy chain clustering of sorted values: consecutive entries within
/// `threshold` land in one cluster. Returns [begin, end) index ranges.
inline std::vector<std::pair<Index, Index>> cluster_ranges(
    const RealVector& sorted_values, double threshold) {
  std::vector<std::pair<Index, Index>> ranges;
  const Index n = sorted_values.size();
  Index begin = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n ||
        std::abs(sorted_values(i) - sorted_values(i - 1)) > threshold) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  return ranges;
}

struct NormalEig {
  ComplexVector eigenvalues;
  ComplexMatrix eigenvectors;  // unitary
};

/// Eigendecomposition of a normal matrix with a guaranteed-unitary
/// eigenvector basis: diagonalize the Hermitian part, then diagonalize the
/// compression of the skew part inside each eigenvalue cluster. Stable for
/// repeated and clustered eigenvalues, where a direct non-Hermitian solve
/// can return a badly conditioned eigenbasis.
inline NormalEig eig_normal(const ComplexMatrix& t, const Tolerance& tol = {}) {
  require_square(t, "eig_normal");
  if (!is_normal_matrix(t, tol))
    throw DomainError("eig_normal: input is not normal");
  const Index n = t.rows();
  const ComplexMatrix h = (t + t.adjoint()) / 2.0;
  const ComplexMatrix k = (t - t.adjoint()) / Complex(0.0, 2.0);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hs(h);
  if (hs.info() != Eigen::Success)
    throw NumericalFailure("eig_normal: Hermitian stage did not converge");
  const RealVector hvals = hs.eigenvalues();
  ComplexMatrix basis = hs.eigenvectors();

  const double spread =
      n > 0 ? std::abs(hvals(n - 1) - hvals(0)) : 0.0;
  const double threshold = tol.bound(spread);
  for (const auto& [b, e] : cluster_ranges(hvals, threshold)) {
    const Index width = e - b;
    if (width <= 1) continue;
    const ComplexMatrix sub = basis.middleCols(b, width);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ks(
        ComplexMatrix(sub.adjoint() * k * sub));
    if (ks.info() != Eigen::Success)
      throw NumericalFailure("eig_normal: cluster stage did not converge");
    basis.middleCols(b, width) = sub * ks.eigenvectors();
  }

  ComplexVector lambda(n);
  for (Index j = 0; j < n; ++j) {
    const ComplexVector vj = basis.col(j);
    lambda(j) = vj.dot(t * vj);  // Rayleigh quotient
  }
  return {lambda, basis};
}

}  // namespace cnops
