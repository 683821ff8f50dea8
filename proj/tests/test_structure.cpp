#include <catch2/catch.hpp>

#include "cnops/cnormal.hpp"
#include "cnops/generators.hpp"

using namespace cnops;

namespace {
const Tolerance tol;
const Complex kI(0.0, 1.0);
}  // namespace

TEST_CASE("skew structure on closed forms") {
  {
    ComplexMatrix t = ComplexMatrix::Zero(2, 2);
    t(0, 0) = 1.0;
    t(1, 1) = -1.0;
    const SkewStructure ss = skew_structure(t, flip_conjugation(2), tol);
    REQUIRE(ss.plus_indices.size() == 1);
    REQUIRE(ss.minus_indices.size() == 1);
    REQUIRE(ss.imag_indices.empty());
    REQUIRE(ss.block_plus.rows() == 1);
    REQUIRE(ss.block_plus(0, 0).real() == Approx(1.0));
    REQUIRE(ss.reconstruction_residual < 1e-12);
    REQUIRE(ss.swap_residual < 1e-12);
  }
  {
    ComplexMatrix t(1, 1);
    t << kI;
    const SkewStructure ss = skew_structure(t, canonical_conjugation(1), tol);
    REQUIRE(ss.plus_indices.empty());
    REQUIRE(ss.imag_indices.size() == 1);
    REQUIRE(ss.block_imag(0, 0).real() == Approx(1.0));
    REQUIRE(ss.hermiticity_residual < 1e-12);
  }
  {
    const ComplexMatrix zero = ComplexMatrix::Zero(3, 3);
    const SkewStructure ss = skew_structure(zero, canonical_conjugation(3), tol);
    REQUIRE(ss.plus_indices.empty());
    REQUIRE(ss.imag_indices.size() == 3);
    REQUIRE(ss.block_imag.norm() < 1e-12);
  }
  {
    // not normal
    ComplexMatrix n2 = ComplexMatrix::Zero(2, 2);
    n2(0, 1) = 1.0;
    REQUIRE_THROWS_AS(skew_structure(n2, flip_conjugation(2), tol), DomainError);
    // normal but not anti-commuting with C
    ComplexMatrix d = ComplexMatrix::Identity(2, 2);
    REQUIRE_THROWS_AS(skew_structure(d, canonical_conjugation(2), tol),
                      DomainError);
  }
}

TEST_CASE("skew structure recovers constructed block forms") {
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 7;
    const gen::AnticommutingInstance ai = gen::random_anticommuting_normal(rng, n);
    const SkewStructure ss = skew_structure(ai.t, ai.c, tol);
    REQUIRE(static_cast<Index>(ss.plus_indices.size()) == ai.pair_dim);
    REQUIRE(static_cast<Index>(ss.imag_indices.size()) == ai.imag_dim);
    REQUIRE(is_unitary(ss.unitary, tol));
    REQUIRE(ss.reconstruction_residual <= tol.bound(ai.t.norm()));
    REQUIRE(ss.hermiticity_residual <= tol.bound(ai.t.norm()));
    REQUIRE(ss.swap_residual <= tol.bound(std::sqrt(double(n))));
    REQUIRE(is_normal_matrix(ss.block_plus, tol));
  }
}

TEST_CASE("spectral projections commute with the conjugation structure") {
  {
    ComplexMatrix t = ComplexMatrix::Zero(2, 2);
    t(0, 0) = 1.0;
    t(1, 1) = 2.0;
    const SpectralCommutation sc =
        spectral_commutation_check(t, canonical_conjugation(2), tol);
    REQUIRE(sc.cluster_count == 2);
    REQUIRE(sc.conj_commutes.has_value());
    REQUIRE(*sc.conj_commutes);
    REQUIRE(sc.ct_commutes);
  }
  {
    ComplexMatrix n2 = ComplexMatrix::Zero(2, 2);
    n2(0, 1) = 1.0;
    const SpectralCommutation sc =
        spectral_commutation_check(n2, flip_conjugation(2), tol);
    REQUIRE(sc.ct_commutes);
    REQUIRE_FALSE(sc.conj_commutes.has_value());  // not normal
    REQUIRE(sc.cluster_count == 2);
  }
  {
    Rng rng(62);
    const gen::CjpInstance nn = gen::random_normal_cnormal(rng, 5, tol);
    const SpectralCommutation sc = spectral_commutation_check(nn.t, nn.c, tol);
    REQUIRE(sc.conj_commutes.value_or(false));
    REQUIRE(sc.ct_commutes);
  }
  {
    Rng rng(63);
    REQUIRE_THROWS_AS(
        spectral_commutation_check(gen::ginibre(rng, 3, 3),
                                   random_conjugation(3, rng), tol),
        NotCNormal);
  }
}

TEST_CASE("conjugation blocks over a commuting positive matrix") {
  {
    Rng rng(64);
    const Conjugation c = random_conjugation(2, rng);
    const ConjugationBlockDecomposition d = conjugation_positive_factorization(
        ComplexMatrix::Identity(2, 2), c, tol);
    REQUIRE(d.blocks.size() == 1);
    REQUIRE(d.blocks[0].multiplicity == 2);
    // the single block is the whole conjugation, expressed in the
    // eigenbasis the solver picked
    const auto& blk = d.blocks[0];
    REQUIRE(tol.matrix_eq(blk.basis * blk.block * blk.basis.transpose(), c.mat));
    REQUIRE(d.reassembly_residual < 1e-12);
  }
  {
    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    p(1, 1) = 2.0;
    const ConjugationBlockDecomposition d =
        conjugation_positive_factorization(p, canonical_conjugation(2), tol);
    REQUIRE(d.blocks.size() == 2);
    for (const auto& blk : d.blocks) {
      REQUIRE(blk.multiplicity == 1);
      REQUIRE(std::abs(std::abs(blk.block(0, 0)) - 1.0) < 1e-12);
    }
  }
  {
    Rng rng(65);
    for (int trial = 0; trial < 10; ++trial) {
      const Index n = 2 + trial % 6;
      const gen::ClusteredPositive cp = gen::clustered_positive(rng, n, trial % 3 == 0 ? 1 : 0);
      const Conjugation c = gen::conjugation_commuting_with(rng, cp);
      const ConjugationBlockDecomposition d =
          conjugation_positive_factorization(cp.p, c, tol);
      REQUIRE(d.blocks.size() == cp.sizes.size());
      double worst = 0.0;
      for (const auto& blk : d.blocks)
        worst = std::max({worst, blk.unitarity_residual, blk.symmetry_residual});
      REQUIRE(worst <= tol.bound(std::sqrt(double(n))));
      REQUIRE(d.reassembly_residual <= tol.bound(std::sqrt(double(n))));
    }
  }
  {
    // commutation failure
    Rng rng(66);
    const ComplexMatrix g = gen::ginibre(rng, 3, 3);
    const ComplexMatrix p = g * g.adjoint();
    REQUIRE_THROWS_AS(
        conjugation_positive_factorization(p, random_conjugation(3, rng), tol),
        DomainError);
  }
}

TEST_CASE("synthesis from conjugation, anti-unitary, and positive parts") {
  {
    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    p(1, 1) = 2.0;
    const ComplexMatrix t =
        cjp_synthesize(canonical_conjugation(2),
                       AntiLinearMap{ComplexMatrix::Identity(2, 2)}, p, tol);
    REQUIRE(tol.matrix_eq(t, p));
    REQUIRE(is_c_normal_battery(t, canonical_conjugation(2), tol).verdict);
  }
  {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
      const Index n = 2 + trial % 6;
      const gen::CjpInstance inst = gen::random_cjp(rng, n, {}, tol);
      REQUIRE(is_c_normal_battery(inst.t, inst.c, tol).verdict);
    }
  }
  {
    // commutation violation is rejected
    Rng rng(68);
    const ComplexMatrix g = gen::ginibre(rng, 3, 3);
    const ComplexMatrix p = g * g.adjoint();
    const AntiLinearMap j{haar_unitary(3, rng)};
    REQUIRE_THROWS_AS(cjp_synthesize(random_conjugation(3, rng), j, p, tol),
                      DomainError);
  }
}

TEST_CASE("factorization recovers synthesis data") {
  {
    ComplexMatrix n2 = ComplexMatrix::Zero(2, 2);
    n2(0, 1) = 1.0;
    const CjpFactors f = cjp_factor(n2, flip_conjugation(2), tol);
    ComplexMatrix expected_p = ComplexMatrix::Zero(2, 2);
    expected_p(1, 1) = 1.0;
    REQUIRE(tol.matrix_eq(f.p, expected_p));
    REQUIRE(is_unitary(f.j.mat, tol));
    REQUIRE(tol.matrix_eq(f.j.mat * f.p.conjugate(), f.p * f.j.mat));
    REQUIRE(f.roundtrip_residual < 1e-12);
  }
  {
    Rng rng(69);
    for (int trial = 0; trial < 10; ++trial) {
      const Index n = 2 + trial % 6;
      const gen::CjpInstance inst = gen::random_cnormal(rng, n, tol);
      const CjpFactors f = cjp_factor(inst.t, inst.c, tol);
      REQUIRE(f.roundtrip_residual <= tol.bound(inst.t.norm()));
      REQUIRE(is_unitary(f.j.mat, tol));
      const ComplexMatrix resynth = cjp_synthesize(inst.c, f.j, f.p, tol);
      REQUIRE(tol.matrix_eq(resynth, inst.t));
    }
  }
  {
    Rng rng(70);
    REQUIRE_THROWS_AS(
        cjp_factor(gen::ginibre(rng, 3, 3), random_conjugation(3, rng), tol),
        NotCNormal);
  }
}

TEST_CASE("battery survives restriction to the orthocomplement of the kernel") {
  Rng rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const Index n = 3 + trial % 4;
    const gen::CjpInstance nz = gen::random_normal_cnormal(rng, n, tol, 1);
    const ComplexMatrix basis = range_basis(nz.t.adjoint(), tol);
    REQUIRE(basis.cols() < n);
    if (basis.cols() == 0) continue;
    const Conjugation inner = make_conjugation(
        ComplexMatrix(basis.adjoint() * nz.c.mat * basis.conjugate()), tol);
    const ComplexMatrix compressed = basis.adjoint() * nz.t * basis;
    REQUIRE(is_c_normal_battery(compressed, inner, tol).verdict);
  }
}
