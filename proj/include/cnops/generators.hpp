#pragma once

// Seeded factories for structured random instances: Ginibre/Haar draws,
// conjugations, commuting (conjugation, positive) pairs, anti-unitaries
// commuting with a positive matrix, synthesized conjugate-normal matrices,
// normal anti-commuting pairs, and weight vectors for truncated shifts.

#include <vector>

#include "cnops/antilinear.hpp"
#include "cnops/cnormal.hpp"
#include "cnops/numeric.hpp"
#include "cnops/rng.hpp"
#include "cnops/types.hpp"

namespace cnops::gen {

inline ComplexMatrix ginibre(Rng& rng, Index rows, Index cols) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

inline ComplexVector random_unit_vector(Rng& rng, Index n) {
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
  const double norm = v.norm();
  return norm > 0 ? ComplexVector(v / norm) : v;
}

inline ComplexMatrix real_orthogonal(Rng& rng, Index n) {
  Eigen::MatrixXd g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (Index j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q.cast<Complex>();
}

/// Conjugation together with the Haar frame U of its Takagi form U U^T.
struct FramedConjugation {
  Conjugation c;
  ComplexMatrix frame;
};

inline FramedConjugation random_conjugation_with_frame(Rng& rng, Index n) {
  const ComplexMatrix u = haar_unitary(n, rng);
  ComplexMatrix s = u * u.transpose();
  s = ((s + s.transpose()) / 2.0).eval();
  return {Conjugation{s}, u};
}

/// Random cluster sizes summing to n; mostly small clusters with the odd
/// multiplicity to exercise degenerate eigenspaces.
inline std::vector<Index> random_partition(Rng& rng, Index n) {
  std::vector<Index> sizes;
  Index left = n;
  while (left > 0) {
    Index size = 1;
    const double u = rng.uniform();
    if (u > 0.85)
      size = 3;
    else if (u > 0.6)
      size = 2;
    size = std::min(size, left);
    sizes.push_back(size);
    left -= size;
  }
  return sizes;
}

/// Positive matrix with prescribed cluster structure: P = V D V^* for a
/// Haar basis V, eigenvalues separated by at least 0.25 per cluster, plus
/// an optional exact-zero cluster.
struct ClusteredPositive {
  ComplexMatrix p;
  ComplexMatrix basis;           // V
  std::vector<Index> sizes;      // cluster sizes, in order
  std::vector<double> values;    // one eigenvalue per cluster
};

inline ClusteredPositive clustered_positive(Rng& rng, Index n, Index zero_dim) {
  ClusteredPositive out;
  if (zero_dim > n) zero_dim = n;
  if (zero_dim > 0) {
    out.sizes.push_back(zero_dim);
    out.values.push_back(0.0);
  }
  const auto rest = random_partition(rng, n - zero_dim);
  double value = 0.3 + 0.2 * rng.uniform();
  for (const Index size : rest) {
    out.sizes.push_back(size);
    out.values.push_back(value);
    value += 0.3 + 0.3 * rng.uniform();
  }
  out.basis = haar_unitary(n, rng);
  RealVector d(n);
  Index at = 0;
  for (std::size_t k = 0; k < out.sizes.size(); ++k)
    for (Index i = 0; i < out.sizes[k]; ++i) d(at++) = out.values[k];
  ComplexMatrix p = out.basis * d.asDiagonal() * out.basis.adjoint();
  out.p = ((p + p.adjoint()) / 2.0).eval();
  return out;
}

/// Anti-unitary commuting with the clustered positive matrix: a Haar
/// unitary block per eigenvalue cluster, twisted through the basis.
inline AntiLinearMap antiunitary_commuting_with(Rng& rng,
                                                const ClusteredPositive& cp) {
  const Index n = cp.p.rows();
  ComplexMatrix blocks = ComplexMatrix::Zero(n, n);
  Index at = 0;
  for (const Index size : cp.sizes) {
    blocks.block(at, at, size, size) = haar_unitary(size, rng);
    at += size;
  }
  return {cp.basis * blocks * cp.basis.transpose()};
}

/// Conjugation commuting with the clustered positive matrix: a random
/// conjugation block per eigenvalue cluster.
inline Conjugation conjugation_commuting_with(Rng& rng,
                                              const ClusteredPositive& cp) {
  const Index n = cp.p.rows();
  ComplexMatrix blocks = ComplexMatrix::Zero(n, n);
  Index at = 0;
  for (const Index size : cp.sizes) {
    blocks.block(at, at, size, size) = random_conjugation(size, rng).mat;
    at += size;
  }
  ComplexMatrix s = cp.basis * blocks * cp.basis.transpose();
  s = ((s + s.transpose()) / 2.0).eval();
  return {s};
}

struct CjpInstance {
  Conjugation c;
  AntiLinearMap j;
  ComplexMatrix p;
  ComplexMatrix t;  // C o J o P
};

struct CjpOptions {
  Index zero_dim = 0;        // dimension of an exact kernel of P
  bool commuting_cp = false; // make C commute with P too (then T is normal)
};

inline CjpInstance random_cjp(Rng& rng, Index n, const CjpOptions& opt = {},
                              const Tolerance& tol = {}) {
  const ClusteredPositive cp = clustered_positive(rng, n, opt.zero_dim);
  CjpInstance out;
  out.p = cp.p;
  out.j = antiunitary_commuting_with(rng, cp);
  out.c = opt.commuting_cp ? conjugation_commuting_with(rng, cp)
                           : random_conjugation(n, rng);
  out.t = cjp_synthesize(out.c, out.j, out.p, tol);
  return out;
}

/// Plain conjugate-normal sample of the given dimension.
inline CjpInstance random_cnormal(Rng& rng, Index n, const Tolerance& tol = {}) {
  CjpOptions opt;
  if (rng.uniform() < 0.2) opt.zero_dim = rng.uniform_int(1, std::max<int>(1, int(n) / 3));
  return random_cjp(rng, n, opt, tol);
}

/// Normal and conjugate-normal sample: C, J, P mutually compatible.
inline CjpInstance random_normal_cnormal(Rng& rng, Index n,
                                         const Tolerance& tol = {},
                                         Index zero_dim = 0) {
  CjpOptions opt;
  opt.zero_dim = zero_dim;
  opt.commuting_cp = true;
  return random_cjp(rng, n, opt, tol);
}

/// Normal T with C T C = -T, built in a hidden Haar basis as
/// diag(lambda) (+) diag(-conj(lambda)) (+) i diag(d) with the matching
/// swap (+) identity conjugation.
struct AnticommutingInstance {
  ComplexMatrix t;
  Conjugation c;
  Index pair_dim;  // size of each mirrored block
  Index imag_dim;  // size of the purely imaginary block
};

inline AnticommutingInstance random_anticommuting_normal(Rng& rng, Index n) {
  const Index k = n >= 2 ? rng.uniform_int(0, static_cast<int>(n / 2)) : 0;
  const Index m = n - 2 * k;
  ComplexVector diag(n);
  for (Index i = 0; i < k; ++i) {
    if (i > 0 && rng.uniform() < 0.25) {
      diag(i) = diag(i - 1);  // repeated eigenvalue
    } else {
      const double re = rng.uniform(0.25, 1.75);
      diag(i) = Complex(re, rng.uniform(-1.25, 1.25));
    }
    diag(k + i) = -std::conj(diag(i));
  }
  for (Index i = 0; i < m; ++i) {
    double d = rng.uniform(-1.5, 1.5);
    if (i > 0 && rng.uniform() < 0.25) d = diag(2 * k + i - 1).imag();
    diag(2 * k + i) = Complex(0.0, d);
  }
  ComplexMatrix s0 = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < k; ++i) {
    s0(i, k + i) = 1.0;
    s0(k + i, i) = 1.0;
  }
  for (Index i = 0; i < m; ++i) s0(2 * k + i, 2 * k + i) = 1.0;

  const ComplexMatrix w = haar_unitary(n, rng);
  AnticommutingInstance out;
  out.t = w * diag.asDiagonal() * w.adjoint();
  ComplexMatrix s = w * s0 * w.transpose();
  out.c = Conjugation{((s + s.transpose()) / 2.0).eval()};
  out.pair_dim = k;
  out.imag_dim = m;
  return out;
}

/// C-symmetric sample for the fixed conjugation (the B = 0 Cartesian case).
inline ComplexMatrix random_c_symmetric(Rng& rng, Index n, const Conjugation& c) {
  const ComplexMatrix m = ginibre(rng, n, n);
  return (m + conjugate_by(c, m.adjoint())) / 2.0;
}

inline std::vector<Complex> random_weights(Rng& rng, Index count) {
  std::vector<Complex> w(count);
  for (auto& wi : w) {
    const double mag = rng.uniform(0.5, 2.0);
    wi = mag * rng.unit_phase();
  }
  return w;
}

/// Weights with a palindromic magnitude profile (criterion holds exactly).
inline std::vector<Complex> palindromic_weights(Rng& rng, Index count) {
  std::vector<double> mags(count);
  for (Index i = 0; i < count; ++i) {
    const Index mirror = count - 1 - i;
    mags[i] = i <= mirror ? rng.uniform(0.5, 2.0) : mags[mirror];
  }
  std::vector<Complex> w(count);
  for (Index i = 0; i < count; ++i) w[i] = mags[i] * rng.unit_phase();
  return w;
}

/// Palindromic weights with one mirror pair detuned by `gap` in magnitude.
inline std::vector<Complex> near_tie_weights(Rng& rng, Index count, double gap) {
  std::vector<Complex> w = palindromic_weights(rng, count);
  if (count >= 2) {
    const Index j = rng.uniform_int(0, static_cast<int>(count / 2) - 1);
    const Index mirror = count - 1 - j;
    if (mirror != j)
      w[j] = (std::abs(w[j]) + gap) * (w[j] / std::abs(w[j]));
  }
  return w;
}

/// Matrix with prescribed numerical rank and singular values in [0.5, 2].
inline ComplexMatrix random_with_rank(Rng& rng, Index rows, Index cols,
                                      Index rank) {
  const Index k = std::min(rows, cols);
  RealVector s = RealVector::Zero(k);
  for (Index i = 0; i < std::min(rank, k); ++i) s(i) = rng.uniform(0.5, 2.0);
  ComplexMatrix d = ComplexMatrix::Zero(rows, cols);
  for (Index i = 0; i < k; ++i) d(i, i) = s(i);
  return haar_unitary(rows, rng) * d * haar_unitary(cols, rng).adjoint();
}

}  // namespace cnops::gen
