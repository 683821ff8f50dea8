#pragma once

// Conjugate-normality predicates and structure theory: the ten-condition
// equivalence battery, left/right products, symmetrizations, Cartesian
// decomposition, truncated weighted shifts, the skew-structure and
// spectral-commutation checks, and the C J P synthesis/factorization of
// conjugate-normal matrices.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cnops/antilinear.hpp"
#include "cnops/douglas.hpp"
#include "cnops/numeric.hpp"
#include "cnops/types.hpp"

namespace cnops {

/// T^* = C T C.
inline bool is_c_symmetric(const ComplexMatrix& t, const Conjugation& c,
                           const Tolerance& tol = {}) {
  require_square(t, "is_c_symmetric");
  if (c.dim() != t.rows())
    throw DomainError("is_c_symmetric: dimension mismatch");
  return tol.matrix_eq(t.adjoint(), conjugate_by(c, t));
}

/// C T^* C = -T.
inline bool is_c_skew(const ComplexMatrix& t, const Conjugation& c,
                      const Tolerance& tol = {}) {
  require_square(t, "is_c_skew");
  if (c.dim() != t.rows()) throw DomainError("is_c_skew: dimension mismatch");
  return tol.matrix_eq(conjugate_by(c, t.adjoint()), -t);
}

/// Outcome of the ten equivalent conjugate-normality conditions. The
/// conditions are mutually equivalent in exact arithmetic, so `coherent`
/// (all booleans agree) failing flags either a bug or a tolerance-boundary
/// instance.
struct CNormalReport {
  std::array<bool, 10> conditions{};
  std::array<double, 10> residuals{};
  bool verdict = false;   // == conditions[0]
  bool coherent = false;  // all ten agree
  // max |lhs - rhs| over the probe vectors of the two pointwise norm
  // conditions (standard basis + random unit vectors)
  double probe_residual_forward = 0.0;
  double probe_residual_adjoint = 0.0;
};

inline constexpr std::array<const char*, 10> kBatteryConditionNames = {
    "moduli",
    "moduli_adjoint",
    "moduli_conjugated",
    "moduli_conjugated_adjoint",
    "gram_intertwine",
    "ct_antilinear_normal",
    "norm_forward",
    "norm_adjoint",
    "halves_commute",
    "halves_commute_variant",
};

/// Evaluates all ten conjugate-normality conditions for (T, C).
///
/// The two pointwise norm conditions are probed on the standard basis plus
/// eight seeded random unit vectors, and certified through their exact
/// operator-identity equivalents (a for-all-x statement is not finitely
/// checkable; the operator identity is).
inline CNormalReport is_c_normal_battery(const ComplexMatrix& t,
                                         const Conjugation& c,
                                         const Tolerance& tol = {},
                                         std::uint64_t probe_seed = 0x5eedbeefULL) {
  require_square(t, "is_c_normal_battery");
  if (c.dim() != t.rows())
    throw DomainError("is_c_normal_battery: dimension mismatch");
  const Index n = t.rows();
  const ComplexMatrix& s = c.mat;
  const ComplexMatrix gram = t.adjoint() * t;
  const ComplexMatrix cogram = t * t.adjoint();

  CNormalReport rep;
  auto set = [&](int idx, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    rep.residuals[idx] = (lhs - rhs).norm();
    rep.conditions[idx] = tol.matrix_eq(lhs, rhs);
  };

  // (1)-(4): the moduli identity C|X|C = |X^*| for X in {T, T^*, CTC, CT^*C}
  auto moduli_condition = [&](int idx, const ComplexMatrix& x) {
    const ComplexMatrix mod = modulus(x, tol);
    const ComplexMatrix mod_adj = modulus(x.adjoint(), tol);
    set(idx, s * mod.conjugate() * s.conjugate(), mod_adj);
  };
  moduli_condition(0, t);
  moduli_condition(1, t.adjoint());
  moduli_condition(2, conjugate_by(c, t));
  moduli_condition(3, conjugate_by(c, t.adjoint()));

  // (5): C T^*T = T T^* C as anti-linear maps
  set(4, s * gram.conjugate(), cogram * s);

  // (6): C T is anti-linearly normal
  const AntiLinearMap ct = compose(c, t);
  set(5, compose(sharp_adjoint(ct), ct), compose(ct, sharp_adjoint(ct)));

  // (7)-(8): pointwise norm identities, certified by operator identities
  set(6, s * cogram.conjugate() * s.conjugate(), gram);
  set(7, s * gram.conjugate() * s.conjugate(), cogram);
  {
    Rng rng(probe_seed);
    std::vector<ComplexVector> probes;
    for (Index i = 0; i < n; ++i)
      probes.push_back(ComplexVector::Unit(n, i));
    for (int i = 0; i < 8; ++i) {
      ComplexVector v(n);
      for (Index j = 0; j < n; ++j) v(j) = rng.complex_gaussian();
      if (v.norm() > 0) v /= v.norm();
      probes.push_back(std::move(v));
    }
    for (const ComplexVector& x : probes) {
      const ComplexVector cx = s * x.conjugate();
      rep.probe_residual_forward = std::max(
          rep.probe_residual_forward,
          std::abs((t * cx).norm() - (t.adjoint() * x).norm()));
      rep.probe_residual_adjoint = std::max(
          rep.probe_residual_adjoint,
          std::abs((t.adjoint() * cx).norm() - (t * x).norm()));
    }
  }

  // (9)-(10): the anti-linear halves commute, in both orderings
  {
    const ComplexMatrix half_p = (s * t.conjugate() + t.adjoint() * s) / 2.0;
    const ComplexMatrix half_m = (s * t.conjugate() - t.adjoint() * s) / 2.0;
    set(8, half_p * half_m.conjugate(), half_m * half_p.conjugate());
  }
  {
    const ComplexMatrix half_p = (t * s + s * t.transpose()) / 2.0;
    const ComplexMatrix half_m = (t * s - s * t.transpose()) / 2.0;
    set(9, half_p * half_m.conjugate(), half_m * half_p.conjugate());
  }

  rep.verdict = rep.conditions[0];
  rep.coherent = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                             [&](bool b) { return b == rep.conditions[0]; });
  return rep;
}

struct LeftRightProducts {
  ComplexMatrix left;   // (C T C) T
  ComplexMatrix right;  // T (C T C)
  bool both_normal;
  double left_residual;
  double right_residual;
};

/// T_L = C T C T and T_R = T C T C; both are normal when T is C-normal.
inline LeftRightProducts left_right_products(const ComplexMatrix& t,
                                             const Conjugation& c,
                                             const Tolerance& tol = {}) {
  require_square(t, "left_right_products");
  if (c.dim() != t.rows())
    throw DomainError("left_right_products: dimension mismatch");
  const ComplexMatrix ctc = conjugate_by(c, t);
  LeftRightProducts out;
  out.left = ctc * t;
  out.right = t * ctc;
  out.left_residual =
      residual(out.left * out.left.adjoint(), out.left.adjoint() * out.left);
  out.right_residual = residual(out.right * out.right.adjoint(),
                                out.right.adjoint() * out.right);
  out.both_normal =
      is_normal_matrix(out.left, tol) && is_normal_matrix(out.right, tol);
  return out;
}

/// (S1, S2) = (T^*T - TT^*, T^*T + TT^*). For C-normal T, S1 is
/// C-skew-symmetric and S2 is C-symmetric.
inline std::pair<ComplexMatrix, ComplexMatrix> symmetrizations(
    const ComplexMatrix& t) {
  require_square(t, "symmetrizations");
  const ComplexMatrix gram = t.adjoint() * t;
  const ComplexMatrix cogram = t * t.adjoint();
  return {gram - cogram, gram + cogram};
}

/// Unique splitting T = A + iB with A C-symmetric and B C-skew-symmetric.
struct CartesianPair {
  ComplexMatrix symmetric_part;  // A
  ComplexMatrix skew_part;       // B
};

inline CartesianPair cartesian_decompose(const ComplexMatrix& t,
                                         const Conjugation& c) {
  require_square(t, "cartesian_decompose");
  if (c.dim() != t.rows())
    throw DomainError("cartesian_decompose: dimension mismatch");
  const ComplexMatrix ctsc = conjugate_by(c, t.adjoint());
  return {(t + ctsc) / 2.0, (t - ctsc) / Complex(0.0, 2.0)};
}

/// The four equivalent characterizations of conjugate normality through the
/// Cartesian pair, plus the consequence identities that hold in that case.
/// The pointwise norm identity ||Tx||^2 = ||Ax||^2 + ||Bx||^2 is evaluated
/// in its exact operator form T^*T = A^*A + B^*B.
struct CartesianEquivalences {
  bool c_normal = false;
  bool norm_identity = false;
  bool adjoint_commute_left = false;   // A^*B = B^*A
  bool adjoint_commute_right = false;  // A B^* = B A^*
  double residual_c_normal = 0.0;
  double residual_norm_identity = 0.0;
  double residual_adjoint_left = 0.0;
  double residual_adjoint_right = 0.0;
  // consequences (meaningful when c_normal holds)
  bool cogram_sum = false;     // TT^* = AA^* + BB^*
  bool gram_commute = false;   // [A^*A, B^*B] = 0
  bool norm_bounds = false;    // max(||A||^2,||B||^2) <= ||T||^2 <= ||A||^2+||B||^2
  double residual_cogram_sum = 0.0;
  double residual_gram_commute = 0.0;
  double norm_t_sq = 0.0, norm_a_sq = 0.0, norm_b_sq = 0.0;
  bool consequences = false;
  CartesianPair pair;
};

inline CartesianEquivalences cartesian_equivalences(const ComplexMatrix& t,
                                                    const Conjugation& c,
                                                    const Tolerance& tol = {}) {
  CartesianEquivalences out;
  out.pair = cartesian_decompose(t, c);
  const ComplexMatrix& a = out.pair.symmetric_part;
  const ComplexMatrix& b = out.pair.skew_part;
  const ComplexMatrix& s = c.mat;

  const ComplexMatrix gram = t.adjoint() * t;
  const ComplexMatrix cogram = t * t.adjoint();

  const ComplexMatrix cn_lhs = s * gram.conjugate() * s.conjugate();
  out.residual_c_normal = (cn_lhs - cogram).norm();
  out.c_normal = tol.matrix_eq(cn_lhs, cogram);

  const ComplexMatrix gram_sum = a.adjoint() * a + b.adjoint() * b;
  out.residual_norm_identity = (gram - gram_sum).norm();
  out.norm_identity = tol.matrix_eq(gram, gram_sum);

  out.residual_adjoint_left = (a.adjoint() * b - b.adjoint() * a).norm();
  out.adjoint_commute_left =
      tol.matrix_eq(a.adjoint() * b, b.adjoint() * a);
  out.residual_adjoint_right = (a * b.adjoint() - b * a.adjoint()).norm();
  out.adjoint_commute_right =
      tol.matrix_eq(a * b.adjoint(), b * a.adjoint());

  const ComplexMatrix cogram_sum = a * a.adjoint() + b * b.adjoint();
  out.residual_cogram_sum = (cogram - cogram_sum).norm();
  out.cogram_sum = tol.matrix_eq(cogram, cogram_sum);

  const ComplexMatrix ga = a.adjoint() * a;
  const ComplexMatrix gb = b.adjoint() * b;
  out.residual_gram_commute = (ga * gb - gb * ga).norm();
  out.gram_commute = tol.matrix_eq(ga * gb, gb * ga);

  const double nt = operator_norm(t), na = operator_norm(a),
               nb = operator_norm(b);
  out.norm_t_sq = nt * nt;
  out.norm_a_sq = na * na;
  out.norm_b_sq = nb * nb;
  const double slack = tol.bound(out.norm_t_sq + out.norm_a_sq + out.norm_b_sq);
  out.norm_bounds =
      std::max(out.norm_a_sq, out.norm_b_sq) <= out.norm_t_sq + slack &&
      out.norm_t_sq <= out.norm_a_sq + out.norm_b_sq + slack;

  out.consequences =
      out.norm_identity && out.cogram_sum && out.gram_commute && out.norm_bounds;
  return out;
}

/// n x n truncated weighted shift with superdiagonal (w_1, ..., w_{n-1}):
/// the rank-one convention e_j (x) e_{j+1} maps x to <x, e_{j+1}> e_j, so
/// w_j sits at entry (j, j+1).
inline ComplexMatrix weighted_shift(std::span<const Complex> weights) {
  if (weights.empty())
    throw DomainError("weighted_shift: needs at least one weight");
  const Index n = static_cast<Index>(weights.size()) + 1;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index j = 0; j + 1 < n; ++j) m(j, j + 1) = weights[j];
  return m;
}

/// |w_j| = |w_{n-j}| for all j: the exact criterion for the truncated shift
/// to be conjugate-normal under the flip conjugation.
inline bool shift_cnormal_criterion(std::span<const Complex> weights,
                                    const Tolerance& tol = {}) {
  const auto m = weights.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!tol.scalar_eq(std::abs(weights[i]), std::abs(weights[m - 1 - i])))
      return false;
  return true;
}

/// Block form of a normal T with C T C = -T: in a unitary eigenvector basis
/// W grouped by sign of Re(lambda), W^* T W = T1 (+) (-T1^*) (+) i T3 with
/// T1 normal and T3 Hermitian, and C swaps the first two eigenspace groups.
struct SkewStructure {
  ComplexMatrix unitary;     // W
  ComplexMatrix block_plus;  // T1
  ComplexMatrix block_imag;  // T3
  std::vector<Index> plus_indices;
  std::vector<Index> minus_indices;
  std::vector<Index> imag_indices;
  ComplexVector eigenvalues;  // in W column order
  double reconstruction_residual = 0.0;
  double swap_residual = 0.0;
  double hermiticity_residual = 0.0;
};

inline SkewStructure skew_structure(const ComplexMatrix& t,
                                    const Conjugation& c,
                                    const Tolerance& tol = {}) {
  require_square(t, "skew_structure");
  if (c.dim() != t.rows())
    throw DomainError("skew_structure: dimension mismatch");
  if (!is_normal_matrix(t, tol))
    throw DomainError("skew_structure: input is not normal");
  if (!tol.matrix_eq(conjugate_by(c, t), -t))
    throw DomainError("skew_structure: C T C != -T");

  const NormalEig eig = eig_normal(t, tol);
  const Index n = t.rows();
  double rho = 0.0;
  for (Index i = 0; i < n; ++i) rho = std::max(rho, std::abs(eig.eigenvalues(i)));
  // Re(lambda) = 0 is a band at the working tolerance, not a line.
  const double tau = tol.bound(rho);

  std::vector<Index> plus, minus, imag;
  for (Index i = 0; i < n; ++i) {
    const double re = eig.eigenvalues(i).real();
    if (re > tau)
      plus.push_back(i);
    else if (re < -tau)
      minus.push_back(i);
    else
      imag.push_back(i);
  }
  if (plus.size() != minus.size())
    throw DomainError("skew_structure: spectrum is not symmetric under z -> -conj(z)");

  // Pair each positive-part eigenvalue with its mirror -conj(lambda);
  // the anti-commutation precondition guarantees the mirror exists.
  const double pair_tol = 10.0 * std::max(tau, tol.bound(rho));
  std::vector<Index> matched(minus.size());
  std::vector<bool> used(minus.size(), false);
  for (std::size_t i = 0; i < plus.size(); ++i) {
    const Complex target = -std::conj(eig.eigenvalues(plus[i]));
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < minus.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(eig.eigenvalues(minus[j]) - target);
      if (best < 0 || d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best < 0 || best > pair_tol)
      throw DomainError("skew_structure: eigenvalue mirror pairing failed");
    matched[i] = minus[best_j];
    used[best_j] = true;
  }

  SkewStructure out;
  const Index k = static_cast<Index>(plus.size());
  const Index m = static_cast<Index>(imag.size());
  out.unitary = ComplexMatrix(n, n);
  out.eigenvalues = ComplexVector(n);
  Index col = 0;
  auto emit = [&](Index src, std::vector<Index>& bucket) {
    out.unitary.col(col) = eig.eigenvectors.col(src);
    out.eigenvalues(col) = eig.eigenvalues(src);
    bucket.push_back(col);
    ++col;
  };
  for (std::size_t i = 0; i < plus.size(); ++i) emit(plus[i], out.plus_indices);
  for (std::size_t i = 0; i < matched.size(); ++i)
    emit(matched[i], out.minus_indices);
  for (std::size_t i = 0; i < imag.size(); ++i) emit(imag[i], out.imag_indices);

  const ComplexMatrix w1 = out.unitary.leftCols(k);
  const ComplexMatrix w2 = out.unitary.middleCols(k, k);
  const ComplexMatrix w3 = out.unitary.rightCols(m);
  out.block_plus = w1.adjoint() * t * w1;
  out.block_imag = Complex(0.0, -1.0) * (w3.adjoint() * t * w3);
  out.hermiticity_residual =
      (out.block_imag - out.block_imag.adjoint()).norm();

  ComplexMatrix target = ComplexMatrix::Zero(n, n);
  target.topLeftCorner(k, k) = out.block_plus;
  target.block(k, k, k, k) = -out.block_plus.adjoint();
  target.bottomRightCorner(m, m) = Complex(0.0, 1.0) * out.block_imag;
  out.reconstruction_residual =
      (out.unitary.adjoint() * t * out.unitary - target).norm();

  const ComplexMatrix proj_plus = w1 * w1.adjoint();
  const ComplexMatrix proj_minus = w2 * w2.adjoint();
  out.swap_residual =
      (c.mat * proj_plus.conjugate() * c.mat.conjugate() - proj_minus).norm();
  return out;
}

/// Commutation of C (for normal T) and of the anti-linear C T with the
/// eigenprojections of T^*T, eigenvalues clustered at the tolerance scale.
struct SpectralCommutation {
  std::optional<bool> conj_commutes;  // only evaluated when T is normal
  bool ct_commutes = false;
  std::optional<double> conj_residual;
  double ct_residual = 0.0;
  Index cluster_count = 0;
};

inline SpectralCommutation spectral_commutation_check(const ComplexMatrix& t,
                                                      const Conjugation& c,
                                                      const Tolerance& tol = {}) {
  require_square(t, "spectral_commutation_check");
  if (c.dim() != t.rows())
    throw DomainError("spectral_commutation_check: dimension mismatch");
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("spectral_commutation_check: input is not C-normal");

  const ComplexMatrix gram = t.adjoint() * t;
  const HermitianEig eig = eig_hermitian(gram, tol);
  const Index n = t.rows();
  const double spread =
      n > 0 ? std::abs(eig.eigenvalues(0) - eig.eigenvalues(n - 1)) : 0.0;
  const auto clusters = cluster_ranges(eig.eigenvalues, tol.bound(spread));

  const ComplexMatrix& s = c.mat;
  const ComplexMatrix ct = compose(c, t).mat;
  const bool normal = is_normal_matrix(t, tol);

  SpectralCommutation out;
  out.cluster_count = static_cast<Index>(clusters.size());
  bool conj_ok = true, ct_ok = true;
  double conj_res = 0.0;
  for (const auto& [b, e] : clusters) {
    const ComplexMatrix vk = eig.eigenvectors.middleCols(b, e - b);
    const ComplexMatrix proj = vk * vk.adjoint();
    const ComplexMatrix pc = proj.conjugate();
    ct_ok = ct_ok && tol.matrix_eq(ct * pc, proj * ct);
    out.ct_residual = std::max(out.ct_residual, (ct * pc - proj * ct).norm());
    if (normal) {
      conj_ok = conj_ok && tol.matrix_eq(s * pc, proj * s);
      conj_res = std::max(conj_res, (s * pc - proj * s).norm());
    }
  }
  out.ct_commutes = ct_ok;
  if (normal) {
    out.conj_commutes = conj_ok;
    out.conj_residual = conj_res;
  }
  return out;
}

/// Compression of a conjugation onto one eigenvalue cluster of a commuting
/// positive matrix. Each block is symmetric unitary of the cluster's size,
/// and the blocks reassemble to the conjugation.
struct ConjugationBlock {
  double eigenvalue = 0.0;
  Index multiplicity = 0;
  ComplexMatrix basis;  // n x m orthonormal eigenvectors
  ComplexMatrix block;  // m x m compressed conjugation matrix
  double unitarity_residual = 0.0;
  double symmetry_residual = 0.0;
};

struct ConjugationBlockDecomposition {
  std::vector<ConjugationBlock> blocks;
  double reassembly_residual = 0.0;
};

inline ConjugationBlockDecomposition conjugation_positive_factorization(
    const ComplexMatrix& p, const Conjugation& c, const Tolerance& tol = {}) {
  require_square(p, "conjugation_positive_factorization");
  if (c.dim() != p.rows())
    throw DomainError("conjugation_positive_factorization: dimension mismatch");
  if (!is_hermitian(p, tol))
    throw DomainError("conjugation_positive_factorization: P is not Hermitian");
  const ComplexMatrix& s = c.mat;
  if (!tol.matrix_eq(s * p.conjugate(), p * s))
    throw DomainError(
        "conjugation_positive_factorization: C does not commute with P");

  const HermitianEig eig = eig_hermitian(p, tol);
  const Index n = p.rows();
  const double spread =
      n > 0 ? std::abs(eig.eigenvalues(0) - eig.eigenvalues(n - 1)) : 0.0;
  if (n > 0 && eig.eigenvalues(n - 1) < -tol.bound(spread))
    throw DomainError("conjugation_positive_factorization: P is not PSD");

  ConjugationBlockDecomposition out;
  ComplexMatrix reassembled = ComplexMatrix::Zero(n, n);
  for (const auto& [b, e] : cluster_ranges(eig.eigenvalues, tol.bound(spread))) {
    ConjugationBlock blk;
    blk.multiplicity = e - b;
    blk.eigenvalue = eig.eigenvalues.segment(b, e - b).mean();
    blk.basis = eig.eigenvectors.middleCols(b, e - b);
    blk.block = blk.basis.adjoint() * s * blk.basis.conjugate();
    const ComplexMatrix id =
        ComplexMatrix::Identity(blk.multiplicity, blk.multiplicity);
    blk.unitarity_residual = (blk.block * blk.block.adjoint() - id).norm();
    blk.symmetry_residual = (blk.block - blk.block.transpose()).norm();
    reassembled += blk.basis * blk.block * blk.basis.transpose();
    out.blocks.push_back(std::move(blk));
  }
  out.reassembly_residual = (reassembled - s).norm();
  return out;
}

/// T = C o J o P for an anti-unitary J commuting with a positive P.
/// The result is C-normal by construction.
inline ComplexMatrix cjp_synthesize(const Conjugation& c, const AntiLinearMap& j,
                                    const ComplexMatrix& p,
                                    const Tolerance& tol = {}) {
  require_square(p, "cjp_synthesize");
  if (c.dim() != j.dim() || c.dim() != p.rows())
    throw DomainError("cjp_synthesize: dimension mismatch");
  if (!is_unitary(j.mat, tol))
    throw DomainError("cjp_synthesize: J is not anti-unitary");
  if (!is_hermitian(p, tol))
    throw DomainError("cjp_synthesize: P is not Hermitian");
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
    if (es.eigenvalues().minCoeff() < -tol.bound(p.norm()))
      throw DomainError("cjp_synthesize: P is not PSD");
  }
  if (!tol.matrix_eq(j.mat * p.conjugate(), p * j.mat))
    throw DomainError("cjp_synthesize: J does not commute with P");
  ComplexMatrix t = c.mat * j.mat.conjugate() * p;
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("cjp_synthesize: synthesized matrix failed the C-normality check");
  return t;
}

struct CjpFactors {
  AntiLinearMap j;  // anti-unitary commuting with p
  ComplexMatrix p;  // |T|
  double roundtrip_residual = 0.0;
};

/// Inverse of cjp_synthesize: P = |T| and J the extended anti-unitary from
/// the conjugation-twisted polar decomposition.
inline CjpFactors cjp_factor(const ComplexMatrix& t, const Conjugation& c,
                             const Tolerance& tol = {}) {
  const CNormalPolar polar = cnormal_polar(t, c, tol, /*extend=*/true);
  CjpFactors out;
  out.j = polar.j;
  out.p = polar.modulus;
  out.roundtrip_residual =
      (c.mat * out.j.mat.conjugate() * out.p - t).norm();
  return out;
}

}  // namespace cnops
