#pragma once

// Randomized verification suites behind the `verify` CLI command. Each
// suite draws seeded instances, checks the module's invariants, and
// records failures with the offending instance attached. Trials are
// generated and reported in seed order, so a (suite, seed, trials, dims)
// tuple reproduces exactly.

#include <chrono>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cnops/cnormal.hpp"
#include "cnops/douglas.hpp"
#include "cnops/generators.hpp"
#include "cnops/inequalities.hpp"
#include "cnops/json_io.hpp"
#include "cnops/numeric.hpp"

namespace cnops::verify {

struct Config {
  std::uint64_t seed = 1;
  int trials = 100;
  Index dim_min = 2;
  Index dim_max = 8;
  Tolerance tol;
  std::string suite = "all";

  void validate() const {
    if (dim_min < 1 || dim_min > dim_max || dim_max > 64)
      throw DomainError("verify: dimension range must satisfy 1 <= min <= max <= 64");
    if (trials < 0) throw DomainError("verify: trials must be nonnegative");
  }

  Index dim_for_trial(int trial) const {
    const Index span = dim_max - dim_min + 1;
    return dim_min + static_cast<Index>(trial % span);
  }
};

struct Failure {
  int trial = 0;
  std::string assertion;
  double residual = 0.0;
  Json instance;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::vector<Failure> failures;
  double wall_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

class Checker {
public:
  Checker(std::vector<Failure>& sink, int trial) : sink_(&sink), trial_(trial) {}

  void set_instance(Json instance) { instance_ = std::move(instance); }

  void require(bool ok, const std::string& assertion, double res = 0.0) {
    if (ok) return;
    sink_->push_back({trial_, assertion, res, instance_});
  }

private:
  std::vector<Failure>* sink_;
  int trial_;
  Json instance_;
};

inline Json tc_instance(const ComplexMatrix& t, const Conjugation& c) {
  Json j;
  j["T"] = matrix_to_json(t);
  j["C"] = conjugation_to_json(c);
  return j;
}

// ---------------------------------------------------------------------
// battery: coherence of the ten conditions, i-scaling invariance, kernel
// intertwining, and block reduction.

inline void battery_trial(int trial, Rng& rng, Index dim, const Tolerance& tol,
                          std::vector<Failure>& sink) {
  const bool synthesized = trial % 2 == 0;
  ComplexMatrix t;
  Conjugation c{ComplexMatrix::Identity(dim, dim)};
  if (synthesized) {
    const gen::CjpInstance inst = gen::random_cnormal(rng, dim, tol);
    t = inst.t;
    c = inst.c;
  } else {
    t = gen::ginibre(rng, dim, dim);
    c = random_conjugation(dim, rng);
  }
  Checker ck(sink, trial);
  ck.set_instance(tc_instance(t, c));

  const CNormalReport rep = is_c_normal_battery(t, c, tol);
  ck.require(rep.coherent, "battery_conditions_agree");
  if (synthesized)
    ck.require(rep.verdict, "synthesized_instance_is_c_normal",
               rep.residuals[0]);

  const CNormalReport rep_i =
      is_c_normal_battery(ComplexMatrix(Complex(0.0, 1.0) * t), c, tol);
  ck.require(rep_i.verdict == rep.verdict, "verdict_invariant_under_i_scaling");

  if (rep.verdict) {
    const ComplexMatrix ker_t = kernel_projector(t, tol);
    const ComplexMatrix ker_tadj = kernel_projector(t.adjoint(), tol);
    const ComplexMatrix lhs = c.mat * ker_t.conjugate();
    const ComplexMatrix rhs = ker_tadj * c.mat;
    ck.require(tol.matrix_eq(lhs, rhs), "kernel_intertwining",
               (lhs - rhs).norm());
  }

  // verdict of 0 (+) T under C1 (+) C equals verdict of T under C
  const Index pad = 1 + trial % 2;
  const Conjugation c1 = random_conjugation(pad, rng);
  const ComplexMatrix t0 =
      direct_sum(ComplexMatrix::Zero(pad, pad), t);
  const Conjugation c01{direct_sum(c1.mat, c.mat)};
  const CNormalReport rep0 = is_c_normal_battery(t0, c01, tol);
  ck.require(rep0.verdict == rep.verdict, "zero_block_reduction");
}

// ---------------------------------------------------------------------
// douglas: factorization postconditions, the three-way equivalence, the
// minimal-norm uniqueness clause, and the anti-linear variants.

inline void douglas_trial(int trial, Rng& rng, Index dim, const Tolerance& tol,
                          std::vector<Failure>& sink) {
  Checker ck(sink, trial);
  const Index rank_b = trial % 3 == 0 ? std::max<Index>(1, dim - 1) : dim;
  const ComplexMatrix b = gen::random_with_rank(rng, dim, dim, rank_b);
  const ComplexMatrix x = gen::ginibre(rng, dim, dim);
  const ComplexMatrix a = b * x;
  {
    Json inst;
    inst["A"] = matrix_to_json(a);
    inst["B"] = matrix_to_json(b);
    ck.set_instance(inst);
  }

  ck.require(range_included(a, b, tol), "constructed_range_inclusion");
  const DouglasSolution sol = douglas_solve(a, b, tol);
  ck.require(tol.matrix_eq(a, b * sol.factor), "factorization_reconstructs",
             (a - b * sol.factor).norm());
  {
    const ComplexMatrix ka = kernel_projector(a, tol);
    const ComplexMatrix kc = kernel_projector(sol.factor, tol);
    ck.require(tol.matrix_eq(ka, kc), "kernel_match", (ka - kc).norm());
  }
  {
    const ComplexMatrix proj = range_projector(b.adjoint(), tol);
    ck.require(tol.matrix_eq(proj * sol.factor, sol.factor),
               "range_in_codomain_of_b_adjoint",
               (proj * sol.factor - sol.factor).norm());
  }
  {
    const ComplexMatrix aa = a * a.adjoint();
    const ComplexMatrix bb = b * b.adjoint();
    ck.require(psd_leq(aa, sol.k_min * bb, tol), "majorization_at_k_min");
    const double eps =
        10.0 * tol.bound(std::max(aa.norm(), sol.k_min * bb.norm()));
    if (sol.k_min > eps)
      ck.require(!psd_leq(aa, (sol.k_min - eps) * bb, tol),
                 "majorization_fails_below_k_min");
  }
  {
    // any factor with range inside ran(B^*) equals the minimal one
    const ComplexMatrix other = range_projector(b.adjoint(), tol) * x;
    ck.require(tol.matrix_eq(other, sol.factor), "minimal_factor_unique",
               (other - sol.factor).norm());
  }
  if (rank_b < dim) {
    const ComplexMatrix outside = gen::ginibre(rng, dim, dim);
    bool raised = false;
    try {
      douglas_solve(outside, b, tol);
    } catch (const RangeError&) {
      raised = true;
    }
    ck.require(raised, "inclusion_failure_raises");
    // without inclusion the majorization fails at every scale
    ck.require(!psd_leq(outside * outside.adjoint(),
                        1e9 * b * b.adjoint(), tol),
               "majorization_fails_without_inclusion");
  }

  // anti-linear factorization through a conjugation
  const Conjugation c = random_conjugation(dim, rng);
  const AntiLinearMap s_map{gen::random_with_rank(rng, dim, dim, rank_b)};
  const AntiLinearMap t_map = compose(s_map, gen::ginibre(rng, dim, dim));
  const ComplexMatrix r = antilinear_douglas(t_map, s_map, c, tol);
  ck.require(tol.matrix_eq(t_map.mat, s_map.mat * r.conjugate()),
             "antilinear_factorization_reconstructs",
             (t_map.mat - s_map.mat * r.conjugate()).norm());
  {
    const ComplexMatrix kr = kernel_projector(r, tol);
    const ComplexMatrix kt = antilinear_kernel_projector(t_map, tol);
    ck.require(tol.matrix_eq(kr, kt), "antilinear_kernel_match",
               (kr - kt).norm());
    const ComplexMatrix rr = range_projector(r, tol);
    const ComplexMatrix target =
        range_projector(s_map.mat.adjoint(), tol).conjugate();
    ck.require(tol.matrix_eq(rr, target), "antilinear_range_match",
               (rr - target).norm());
  }

  // equal-modulus partial isometry factor
  const AntiLinearMap t2{gen::random_with_rank(rng, dim, dim, rank_b)};
  const ComplexMatrix u = haar_unitary(dim, rng);
  const AntiLinearMap s2 = compose(u, t2);
  const ComplexMatrix d = antilinear_equal_modulus_factor(s2, t2, tol);
  ck.require(tol.matrix_eq(s2.mat, d * t2.mat), "equal_modulus_factorizes",
             (s2.mat - d * t2.mat).norm());
  ck.require(tol.matrix_eq(d * d.adjoint() * d, d),
             "equal_modulus_factor_partial_isometry");
  ck.require(tol.matrix_eq(ComplexMatrix(d.adjoint() * d),
                           range_projector(t2.mat, tol)),
             "equal_modulus_initial_space");
  ck.require(tol.matrix_eq(ComplexMatrix(d * d.adjoint()),
                           range_projector(s2.mat, tol)),
             "equal_modulus_final_space");
  {
    const ComplexMatrix proj = range_projector(t2.mat, tol);
    ck.require(tol.matrix_eq(d * proj, u * proj),
               "equal_modulus_factor_matches_unitary");
  }
  {
    bool raised = false;
    try {
      antilinear_equal_modulus_factor(AntiLinearMap{2.0 * t2.mat}, t2, tol);
    } catch (const ModulusMismatch&) {
      raised = true;
    }
    ck.require(raised, "modulus_mismatch_raises");
  }
}

// ---------------------------------------------------------------------
// polar: anti-linear polar round-trips, conjugation independence of the
// modulus, the conjugation-twisted polar of C-normal matrices, and the
// products of unitaries with projections.

inline void polar_trial(int trial, Rng& rng, Index dim, const Tolerance& tol,
                        std::vector<Failure>& sink) {
  Checker ck(sink, trial);
  const Index rank = trial % 3 == 0 ? std::max<Index>(1, dim - 1) : dim;
  const AntiLinearMap a{trial % 3 == 0
                            ? gen::random_with_rank(rng, dim, dim, rank)
                            : gen::ginibre(rng, dim, dim)};
  ck.set_instance(Json{{"A", antilinear_to_json(a)}});

  const PolarDecomposition pd = antilinear_polar(a, tol);
  const ComplexMatrix& mj = pd.isometry_part.mat;
  ck.require(tol.matrix_eq(a.mat, mj * pd.modulus.conjugate()),
             "polar_reconstructs",
             (a.mat - mj * pd.modulus.conjugate()).norm());
  ck.require(tol.matrix_eq(kernel_projector(mj, tol), kernel_projector(a.mat, tol)),
             "polar_kernel_match");
  ck.require(tol.matrix_eq(mj * mj.adjoint() * mj, mj),
             "polar_partial_isometry");
  ck.require(tol.matrix_eq(pd.isometry_part.final_projector,
                           range_projector(mj, tol)),
             "polar_final_projector");
  ck.require(tol.matrix_eq(pd.isometry_part.initial_projector,
                           range_projector(pd.modulus, tol)),
             "polar_initial_is_modulus_range");
  for (int rep = 0; rep < 2; ++rep) {
    const Conjugation c = random_conjugation(dim, rng);
    const ComplexMatrix x = compose(c, a);
    const ComplexMatrix mod = sqrt_psd(x.adjoint() * x, tol);
    ck.require(tol.matrix_eq(mod, pd.modulus),
               "modulus_conjugation_independent", (mod - pd.modulus).norm());
  }

  // conjugate-normal polar
  const gen::CjpInstance inst = gen::random_cnormal(rng, dim, tol);
  const CNormalPolar cp = cnormal_polar(inst.t, inst.c, tol, false);
  const ComplexMatrix recon = inst.c.mat * cp.j.mat.conjugate() * cp.modulus;
  ck.require(tol.matrix_eq(recon, inst.t), "cnormal_polar_reconstructs",
             (recon - inst.t).norm());
  ck.require(tol.matrix_eq(cp.j.mat * cp.modulus.conjugate(),
                           cp.modulus * cp.j.mat),
             "cnormal_polar_commutation");
  ck.require(tol.matrix_eq(cp.modulus, inst.p), "cnormal_polar_recovers_modulus",
             (cp.modulus - inst.p).norm());
  ck.require(tol.matrix_eq(kernel_projector(cp.j.mat, tol).conjugate(),
                           kernel_projector(inst.t, tol)),
             "cnormal_polar_kernel_match");
  const CNormalPolar cpe = cnormal_polar(inst.t, inst.c, tol, true);
  ck.require(is_unitary(cpe.j.mat, tol), "extended_j_is_anti_unitary");
  ck.require(tol.matrix_eq(cpe.j.mat * cpe.modulus.conjugate(),
                           cpe.modulus * cpe.j.mat),
             "extended_j_still_commutes");
  ck.require(tol.matrix_eq(
                 ComplexMatrix(inst.c.mat * cpe.j.mat.conjugate() * cpe.modulus),
                 inst.t),
             "extended_reconstructs");

  if (dim >= 2) {
    // every 1-by-1 matrix is conjugate normal, so this needs dim >= 2
    bool raised = false;
    try {
      cnormal_polar(gen::ginibre(rng, dim, dim),
                    random_conjugation(dim, rng), tol, false);
    } catch (const NotCNormal&) {
      raised = true;
    }
    ck.require(raised, "generic_input_raises_not_c_normal");
  }

  // a C-normal partial isometry factors as (C-normal unitary) * projection
  {
    gen::ClusteredPositive proj_struct;
    const Index r = rng.uniform_int(1, static_cast<int>(dim));
    proj_struct.sizes = {r};
    proj_struct.values = {1.0};
    if (r < dim) {
      proj_struct.sizes.push_back(dim - r);
      proj_struct.values.push_back(0.0);
    }
    proj_struct.basis = haar_unitary(dim, rng);
    RealVector dvals(dim);
    for (Index i = 0; i < dim; ++i) dvals(i) = i < r ? 1.0 : 0.0;
    ComplexMatrix p = proj_struct.basis * dvals.asDiagonal() *
                      proj_struct.basis.adjoint();
    proj_struct.p = ((p + p.adjoint()) / 2.0).eval();
    const AntiLinearMap j = gen::antiunitary_commuting_with(rng, proj_struct);
    const Conjugation c = random_conjugation(dim, rng);
    const ComplexMatrix t = cjp_synthesize(c, j, proj_struct.p, tol);
    const ComplexMatrix gram = t.adjoint() * t;
    ck.require(tol.matrix_eq(gram * gram, gram), "cjp_projection_gives_partial_isometry");
    const CNormalPolar pol = cnormal_polar(t, c, tol, true);
    const ComplexMatrix uni = c.mat * pol.j.mat.conjugate();
    ck.require(is_unitary(uni, tol), "partial_isometry_unitary_factor");
    ck.require(is_c_normal(uni, c, tol), "unitary_factor_c_normal");
    ck.require(tol.matrix_eq(pol.modulus * pol.modulus, pol.modulus),
               "partial_isometry_projection_factor");
    ck.require(tol.matrix_eq(uni * pol.modulus, t),
               "unitary_times_projection_reconstructs");
  }
}

// ---------------------------------------------------------------------
// cartesian: the four equivalent characterizations, their consequence
// identities, and the truncated-shift criterion.

inline void cartesian_trial(int trial, Rng& rng, Index dim,
                            const Tolerance& tol,
                            std::vector<Failure>& sink) {
  Checker ck(sink, trial);
  const gen::CjpInstance inst = gen::random_cnormal(rng, dim, tol);
  ck.set_instance(tc_instance(inst.t, inst.c));

  const CartesianEquivalences eq = cartesian_equivalences(inst.t, inst.c, tol);
  ck.require(eq.c_normal && eq.norm_identity && eq.adjoint_commute_left &&
                 eq.adjoint_commute_right,
             "equivalences_hold_for_c_normal");
  ck.require(eq.consequences, "consequences_hold_for_c_normal");
  ck.require(is_c_symmetric(eq.pair.symmetric_part, inst.c, tol),
             "part_a_is_c_symmetric");
  ck.require(is_c_skew(eq.pair.skew_part, inst.c, tol), "part_b_is_c_skew");
  const ComplexMatrix recomposed =
      eq.pair.symmetric_part + Complex(0.0, 1.0) * eq.pair.skew_part;
  ck.require(tol.matrix_eq(recomposed, inst.t), "decomposition_recomposes",
             (recomposed - inst.t).norm());

  {
    const ComplexMatrix g = gen::ginibre(rng, dim, dim);
    const Conjugation cg = random_conjugation(dim, rng);
    const CartesianEquivalences eg = cartesian_equivalences(g, cg, tol);
    const bool all_same = eg.c_normal == eg.norm_identity &&
                          eg.c_normal == eg.adjoint_commute_left &&
                          eg.c_normal == eg.adjoint_commute_right;
    ck.require(all_same, "equivalences_agree_on_generic_input");
  }

  // truncated shift criterion vs the battery verdict under the flip
  {
    const Index count = 1 + trial % 11;
    const std::vector<Complex> w = trial % 2 == 0
                                       ? gen::palindromic_weights(rng, count)
                                       : gen::random_weights(rng, count);
    const ComplexMatrix shift = weighted_shift(w);
    const bool crit = shift_cnormal_criterion(w, tol);
    const bool batt =
        is_c_normal_battery(shift, flip_conjugation(count + 1), tol).verdict;
    double gap = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      gap = std::max(gap, std::abs(std::abs(w[i]) -
                                   std::abs(w[w.size() - 1 - i])));
      scale = std::max(scale, std::abs(w[i]));
    }
    const double band = tol.bound(scale);
    if (gap <= band || gap > 10.0 * band)
      ck.require(crit == batt, "shift_criterion_matches_battery", gap);
  }
}

// ---------------------------------------------------------------------
// structure: block form of anti-commuting normals, spectral commutation,
// conjugation blocks over a commuting positive, kernel compression, the
// intertwining extraction for anti-linear maps commuting with a symmetric
// normal, and the A + iA^* criterion.

inline void structure_trial(int trial, Rng& rng, Index dim,
                            const Tolerance& tol,
                            std::vector<Failure>& sink) {
  Checker ck(sink, trial);

  {
    const gen::AnticommutingInstance ai = gen::random_anticommuting_normal(rng, dim);
    ck.set_instance(tc_instance(ai.t, ai.c));
    const SkewStructure ss = skew_structure(ai.t, ai.c, tol);
    const double scale = ai.t.norm();
    ck.require(is_unitary(ss.unitary, tol), "skew_basis_unitary");
    ck.require(ss.reconstruction_residual <= tol.bound(scale),
               "skew_reconstruction", ss.reconstruction_residual);
    ck.require(ss.hermiticity_residual <= tol.bound(scale),
               "skew_t3_hermitian", ss.hermiticity_residual);
    ck.require(ss.swap_residual <= tol.bound(std::sqrt(double(dim))),
               "skew_eigenspace_swap", ss.swap_residual);
    ck.require(static_cast<Index>(ss.plus_indices.size()) == ai.pair_dim,
               "skew_recovers_pair_dimension");
  }

  {
    const gen::CjpInstance inst = gen::random_cnormal(rng, dim, tol);
    const auto [s1, s2] = symmetrizations(inst.t);
    ck.require(is_c_skew(s1, inst.c, tol), "s1_is_c_skew");
    ck.require(is_c_symmetric(s2, inst.c, tol), "s2_is_c_symmetric");
    const SkewStructure ss1 = skew_structure(s1, inst.c, tol);
    ck.require(ss1.reconstruction_residual <= tol.bound(s1.norm()),
               "s1_skew_structure", ss1.reconstruction_residual);

    const SpectralCommutation sc = spectral_commutation_check(inst.t, inst.c, tol);
    ck.require(sc.ct_commutes, "ct_commutes_with_spectral_projections",
               sc.ct_residual);

    const LeftRightProducts lr = left_right_products(inst.t, inst.c, tol);
    ck.require(lr.both_normal, "left_right_products_normal",
               std::max(lr.left_residual, lr.right_residual));
  }

  {
    const gen::CjpInstance nn = gen::random_normal_cnormal(rng, dim, tol);
    ck.require(is_normal_matrix(nn.t, tol), "commuting_cjp_gives_normal");
    const SpectralCommutation sc = spectral_commutation_check(nn.t, nn.c, tol);
    ck.require(sc.conj_commutes.value_or(false),
               "conjugation_commutes_with_spectral_projections",
               sc.conj_residual.value_or(0.0));
    ck.require(sc.ct_commutes, "ct_commutes_for_normal_instance", sc.ct_residual);

    const ConjugationBlockDecomposition cbd =
        conjugation_positive_factorization(nn.p, nn.c, tol);
    double worst = 0.0;
    for (const auto& blk : cbd.blocks)
      worst = std::max({worst, blk.unitarity_residual, blk.symmetry_residual});
    ck.require(worst <= tol.bound(std::sqrt(double(dim))),
               "conjugation_blocks_symmetric_unitary", worst);
    ck.require(cbd.reassembly_residual <= tol.bound(std::sqrt(double(dim))),
               "conjugation_blocks_reassemble", cbd.reassembly_residual);
  }

  if (dim >= 2) {
    // kernel compression: restrict a normal C-normal matrix to (ker T)^perp
    const gen::CjpInstance nz = gen::random_normal_cnormal(rng, dim, tol, 1);
    const ComplexMatrix basis = range_basis(nz.t.adjoint(), tol);
    if (basis.cols() > 0) {
      bool ok = true;
      double res = 0.0;
      try {
        const Conjugation inner = make_conjugation(
            ComplexMatrix(basis.adjoint() * nz.c.mat * basis.conjugate()), tol);
        const ComplexMatrix compressed = basis.adjoint() * nz.t * basis;
        const CNormalReport rep = is_c_normal_battery(compressed, inner, tol);
        ok = rep.verdict;
        res = rep.residuals[0];
      } catch (const Error&) {
        ok = false;
      }
      ck.require(ok, "kernel_compression_stays_c_normal", res);
    }
  }

  {
    // anti-linear maps commuting with a K-symmetric normal are T K with
    // T N^* = N T: extract T and check the intertwining
    const gen::FramedConjugation fc = gen::random_conjugation_with_frame(rng, dim);
    const ComplexMatrix q = gen::real_orthogonal(rng, dim);
    RealVector lam(dim);
    Index at = 0;
    for (const Index size : gen::random_partition(rng, dim)) {
      const double value = rng.uniform(-2.0, 2.0);
      for (Index i = 0; i < size; ++i) lam(at++) = value;
    }
    ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
    for (const auto& [b, en] : cluster_ranges(lam, 0.0))
      e.block(b, b, en - b, en - b) = gen::ginibre(rng, en - b, en - b);
    const ComplexMatrix n_mat =
        fc.frame * q * lam.asDiagonal() * q.transpose() * fc.frame.adjoint();
    const AntiLinearMap x{fc.frame * q * e * q.transpose() *
                          fc.frame.transpose()};
    ck.require(is_c_symmetric(n_mat, fc.c, tol), "test_normal_is_k_symmetric");
    ck.require(tol.matrix_eq(x.mat * n_mat.conjugate(), n_mat * x.mat),
               "x_commutes_with_normal");
    const ComplexMatrix t_ext = compose(x, fc.c);
    ck.require(tol.matrix_eq(t_ext * n_mat.adjoint(), n_mat * t_ext),
               "extracted_factor_intertwines",
               (t_ext * n_mat.adjoint() - n_mat * t_ext).norm());
    ck.require(tol.matrix_eq(compose(t_ext, fc.c).mat, x.mat),
               "extracted_factor_recomposes");
  }

  if (dim >= 2) {
    // square-zero matrices satisfy the A + iA^* criterion side condition
    // exactly: T = A + iA^* is C-normal iff A is
    const gen::FramedConjugation fc = gen::random_conjugation_with_frame(rng, dim);
    const ComplexMatrix q = gen::real_orthogonal(rng, dim);
    const ComplexVector v =
        (fc.frame * (q.col(0) + Complex(0.0, 1.0) * q.col(1))) * M_SQRT1_2;
    const ComplexVector u_pos = fc.c.apply(v);
    const double mag = rng.uniform(0.5, 2.0);
    const ComplexMatrix a_pos = mag * u_pos * v.adjoint();
    ck.require(is_c_skew(ComplexMatrix(a_pos * a_pos -
                                       a_pos.adjoint() * a_pos.adjoint()),
                         fc.c, tol),
               "square_zero_side_condition");
    const bool va = is_c_normal_battery(a_pos, fc.c, tol).verdict;
    const bool vt = is_c_normal_battery(
                        ComplexMatrix(a_pos + Complex(0.0, 1.0) * a_pos.adjoint()),
                        fc.c, tol)
                        .verdict;
    ck.require(va, "square_zero_aligned_is_c_normal");
    ck.require(va == vt, "a_plus_i_a_star_criterion_positive");

    ComplexVector w = gen::random_unit_vector(rng, dim);
    w -= v * inner(w, v);  // orthogonalize against v
    if (w.norm() > 1e-3) {
      w /= w.norm();
      const ComplexMatrix a_neg = w * v.adjoint();
      const bool na = is_c_normal_battery(a_neg, fc.c, tol).verdict;
      const bool nt = is_c_normal_battery(
                          ComplexMatrix(a_neg + Complex(0.0, 1.0) * a_neg.adjoint()),
                          fc.c, tol)
                          .verdict;
      ck.require(na == nt, "a_plus_i_a_star_criterion_generic");
    }
  }
}

// ---------------------------------------------------------------------
// inequalities: the sandwich, product, and self-commutator reports, the
// scaling covariance, singular-value identities, and monotonicity.

inline void inequalities_trial(int trial, Rng& rng, Index dim,
                               const Tolerance& tol,
                               std::vector<Failure>& sink) {
  Checker ck(sink, trial);
  const gen::CjpInstance inst = gen::random_cnormal(rng, dim, tol);
  ck.set_instance(tc_instance(inst.t, inst.c));

  const SandwichReports sw = singular_value_sandwich(inst.t, inst.c, tol);
  ck.require(sw.lower.passed, "sandwich_lower", sw.lower.min_slack());
  ck.require(sw.upper.passed, "sandwich_upper", sw.upper.min_slack());
  ck.require(sw.modulus_chain_residual <= tol.bound(inst.t.norm()),
             "modulus_chain", sw.modulus_chain_residual);
  ck.require(sw.moduli_commute_residual <= tol.bound(inst.t.norm() * inst.t.norm()),
             "cartesian_moduli_commute", sw.moduli_commute_residual);

  const ProductBoundReport pb = product_singular_bound(inst.t, inst.c, tol);
  ck.require(pb.bound.passed, "product_bound", pb.bound.min_slack());
  ck.require(pb.sv_equal, "product_singular_values_match",
             pb.sv_equality_residual);

  const InequalityReport sc = self_commutator_bound(inst.t, inst.c, tol);
  ck.require(sc.passed, "self_commutator_bound", sc.min_slack());

  {
    // reports scale linearly under T -> zT
    const Complex z = rng.uniform(0.3, 3.0) * rng.unit_phase();
    const ComplexMatrix tz = z * inst.t;
    ck.require(is_c_normal(tz, inst.c, tol), "scaled_matrix_stays_c_normal");
    const SandwichReports swz = singular_value_sandwich(tz, inst.c, tol);
    const double mag = std::abs(z);
    double worst = 0.0;
    for (Index i = 0; i < swz.upper.lhs.size(); ++i) {
      worst = std::max(worst, std::abs(swz.upper.lhs(i) - mag * sw.upper.lhs(i)));
      worst = std::max(worst, std::abs(swz.upper.rhs(i) - mag * sw.upper.rhs(i)));
    }
    ck.require(worst <= tol.bound(mag * inst.t.norm()), "sandwich_scaling",
               worst);
  }

  {
    // tight case: C-symmetric T has s_j(T) = s_j(|A|)
    const Conjugation c2 = random_conjugation(dim, rng);
    const ComplexMatrix a = gen::random_c_symmetric(rng, dim, c2);
    const SandwichReports swa = singular_value_sandwich(a, c2, tol);
    double worst = 0.0;
    for (Index i = 0; i < swa.upper.slack.size(); ++i)
      worst = std::max(worst, std::abs(swa.upper.slack(i)));
    ck.require(worst <= tol.bound(a.norm()), "c_symmetric_upper_tight", worst);
  }

  {
    // s_j(T) = s_j(T^*) = eigenvalues of |T|
    const ComplexMatrix g = gen::ginibre(rng, dim, dim);
    const RealVector s1 = singular_values(g);
    const RealVector s2 = singular_values(g.adjoint());
    const RealVector s3 = eig_hermitian(modulus(g, tol), tol).eigenvalues;
    double worst = (s1 - s2).cwiseAbs().maxCoeff();
    worst = std::max(worst, (s1 - s3).cwiseAbs().maxCoeff());
    ck.require(worst <= tol.bound(s1(0)), "singular_value_identities", worst);
  }

  {
    // monotonicity: S <= T (PSD order) implies s_j(S) <= s_j(T)
    const ComplexMatrix g1 = gen::ginibre(rng, dim, dim);
    const ComplexMatrix g2 = gen::ginibre(rng, dim, dim);
    const ComplexMatrix p1 = g1 * g1.adjoint();
    const ComplexMatrix p2 = p1 + g2 * g2.adjoint();
    const RealVector s1 = singular_values(p1);
    const RealVector s2 = singular_values(p2);
    bool mono = true;
    for (Index i = 0; i < s1.size(); ++i)
      mono = mono && s1(i) <= s2(i) + tol.bound(s2(0));
    ck.require(mono, "psd_monotonicity");
  }
}

// ---------------------------------------------------------------------

inline SuiteReport run_single_suite(const std::string& name,
                                    const Config& cfg) {
  SuiteReport rep;
  rep.suite = name;
  rep.trials = cfg.trials;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial)));
    const Index dim = cfg.dim_for_trial(trial);
    if (name == "battery")
      battery_trial(trial, rng, dim, cfg.tol, rep.failures);
    else if (name == "douglas")
      douglas_trial(trial, rng, dim, cfg.tol, rep.failures);
    else if (name == "polar")
      polar_trial(trial, rng, dim, cfg.tol, rep.failures);
    else if (name == "cartesian")
      cartesian_trial(trial, rng, dim, cfg.tol, rep.failures);
    else if (name == "structure")
      structure_trial(trial, rng, dim, cfg.tol, rep.failures);
    else if (name == "inequalities")
      inequalities_trial(trial, rng, dim, cfg.tol, rep.failures);
    else
      throw DomainError("verify: unknown suite '" + name + "'");
  }
  const auto end = std::chrono::steady_clock::now();
  rep.wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          end - start)
          .count();
  return rep;
}

inline std::vector<SuiteReport> run_suites(const Config& cfg) {
  cfg.validate();
  static const std::vector<std::string> all = {
      "battery", "douglas", "polar", "cartesian", "structure", "inequalities"};
  std::vector<SuiteReport> reports;
  if (cfg.suite == "all") {
    for (const auto& name : all) reports.push_back(run_single_suite(name, cfg));
  } else {
    reports.push_back(run_single_suite(cfg.suite, cfg));
  }
  return reports;
}

inline Json suite_report_to_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["trials"] = rep.trials;
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    Json fj;
    fj["trial"] = f.trial;
    fj["assertion"] = f.assertion;
    fj["residual"] = f.residual;
    fj["instance"] = f.instance;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["passed"] = rep.passed();
  return j;
}

}  // namespace cnops::verify
