#include <catch2/catch.hpp>

#include "cnops/generators.hpp"
#include "cnops/numeric.hpp"

using namespace cnops;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Tolerance tol;

}  // namespace

TEST_CASE("svd on diagonal and nilpotent matrices") {
  {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 1.0;
    const SvdResult s = svd(a);
    REQUIRE(s.sigma(0) == Approx(3.0));
    REQUIRE(s.sigma(1) == Approx(1.0));
  }
  {
    const SvdResult s = svd(mat2(0, 1, 0, 0));
    REQUIRE(s.sigma(0) == Approx(1.0));
    REQUIRE(s.sigma(1) == Approx(0.0).margin(1e-14));
  }
  {
    const SvdResult s = svd(ComplexMatrix::Zero(2, 2));
    REQUIRE(s.sigma.maxCoeff() == 0.0);
  }
}

TEST_CASE("svd reconstructs and orders descending") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + trial % 7;
    const ComplexMatrix a = gen::ginibre(rng, n, n + trial % 2);
    const SvdResult s = svd(a);
    REQUIRE(tol.matrix_eq(s.reconstruct(), a));
    for (Index i = 0; i + 1 < s.sigma.size(); ++i)
      REQUIRE(s.sigma(i) >= s.sigma(i + 1));
    REQUIRE(is_unitary(s.u, tol));
    REQUIRE(is_unitary(s.v, tol));
  }
}

TEST_CASE("eig_hermitian on small closed forms") {
  {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 0) = 2.0;
    h(1, 1) = 1.0;
    const HermitianEig e = eig_hermitian(h, tol);
    REQUIRE(e.eigenvalues(0) == Approx(2.0));
    REQUIRE(e.eigenvalues(1) == Approx(1.0));
  }
  {
    const HermitianEig e = eig_hermitian(mat2(0, 1, 1, 0), tol);
    REQUIRE(e.eigenvalues(0) == Approx(1.0));
    REQUIRE(e.eigenvalues(1) == Approx(-1.0));
  }
  {
    const HermitianEig e = eig_hermitian(ComplexMatrix::Identity(3, 3), tol);
    REQUIRE(e.eigenvalues.minCoeff() == Approx(1.0));
  }
  REQUIRE_THROWS_AS(eig_hermitian(mat2(0, 1, 0, 0), tol), DomainError);
}

TEST_CASE("eig_hermitian reconstructs") {
  Rng rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 6;
    const ComplexMatrix g = gen::ginibre(rng, n, n);
    const ComplexMatrix h = g + g.adjoint();
    const HermitianEig e = eig_hermitian(h, tol);
    const ComplexMatrix rec = e.eigenvectors *
                              e.eigenvalues.cast<Complex>().asDiagonal() *
                              e.eigenvectors.adjoint();
    REQUIRE(tol.matrix_eq(rec, h));
  }
}

TEST_CASE("pinv closed forms and the four defining conditions") {
  {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 2.0;
    const ComplexMatrix p = pinv(a, tol);
    REQUIRE(std::abs(p(0, 0) - Complex(0.5, 0.0)) < 1e-12);
    REQUIRE(std::abs(p(1, 1)) == 0.0);
  }
  {
    Rng rng(5);
    const ComplexMatrix u = haar_unitary(4, rng);
    REQUIRE(tol.matrix_eq(pinv(u, tol), u.adjoint()));
  }
  {
    const ComplexMatrix a = mat2(0, 1, 0, 0);
    REQUIRE(tol.matrix_eq(pinv(a, tol), mat2(0, 0, 1, 0)));
  }
  Rng rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 5;
    const Index rank = 1 + trial % n;
    const ComplexMatrix a = gen::random_with_rank(rng, n, n, rank);
    const ComplexMatrix p = pinv(a, tol);
    REQUIRE(tol.matrix_eq(a * p * a, a));
    REQUIRE(tol.matrix_eq(p * a * p, p));
    REQUIRE(tol.matrix_eq((a * p).adjoint(), a * p));
    REQUIRE(tol.matrix_eq((p * a).adjoint(), p * a));
  }
}

TEST_CASE("pinv is an involution on full-rank matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = gen::ginibre(rng, 4, 4);
    REQUIRE(tol.matrix_eq(pinv(pinv(a, tol), tol), a));
  }
}

TEST_CASE("sqrt_psd closed forms") {
  {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 0) = 4.0;
    h(1, 1) = 9.0;
    const ComplexMatrix r = sqrt_psd(h, tol);
    REQUIRE(r(0, 0).real() == Approx(2.0));
    REQUIRE(r(1, 1).real() == Approx(3.0));
  }
  REQUIRE(sqrt_psd(ComplexMatrix::Zero(3, 3), tol).norm() == 0.0);
  {
    // eigenvalues 3 and 1, so the root is ((r3+1)/2, (r3-1)/2; ...)
    const ComplexMatrix h = mat2(2, 1, 1, 2);
    const double s3 = std::sqrt(3.0);
    const ComplexMatrix expected =
        mat2((s3 + 1) / 2, (s3 - 1) / 2, (s3 - 1) / 2, (s3 + 1) / 2);
    const ComplexMatrix r = sqrt_psd(h, tol);
    REQUIRE(tol.matrix_eq(r, expected));
    REQUIRE(tol.matrix_eq(r * r, h));
  }
  {
    ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
    neg(1, 1) = -1.0;
    REQUIRE_THROWS_AS(sqrt_psd(neg, tol), DomainError);
  }
}

TEST_CASE("sqrt_psd squares back on random PSD input") {
  Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 6;
    const ComplexMatrix g = gen::ginibre(rng, n, n);
    const ComplexMatrix h = g * g.adjoint();
    const ComplexMatrix r = sqrt_psd(h, tol);
    REQUIRE(tol.matrix_eq(r, r.adjoint()));
    REQUIRE(tol.matrix_eq(r * r, h));
  }
}

TEST_CASE("range projector closed forms") {
  {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    REQUIRE(tol.matrix_eq(range_projector(a, tol), a));
  }
  {
    Rng rng(9);
    ComplexMatrix a = gen::ginibre(rng, 2, 2);
    REQUIRE(tol.matrix_eq(range_projector(a, tol), ComplexMatrix::Identity(2, 2)));
  }
  {
    ComplexMatrix a(2, 1);
    a << 1.0, 1.0;
    const ComplexMatrix expected = 0.5 * mat2(1, 1, 1, 1);
    REQUIRE(tol.matrix_eq(range_projector(a, tol), expected));
  }
}

TEST_CASE("range projector properties") {
  Rng rng(10);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 5;
    const ComplexMatrix a = gen::random_with_rank(rng, n, n, 1 + trial % n);
    const ComplexMatrix p = range_projector(a, tol);
    REQUIRE(tol.matrix_eq(p * p, p));
    REQUIRE(tol.matrix_eq(p.adjoint(), p));
    REQUIRE(tol.matrix_eq(p * a, a));
    // invariance under right multiplication by an invertible factor
    const ComplexMatrix x =
        gen::ginibre(rng, n, n) + 3.0 * ComplexMatrix::Identity(n, n);
    REQUIRE(tol.matrix_eq(range_projector(a * x, tol), p));
    // kernel projector complements the range of the adjoint
    REQUIRE(tol.matrix_eq(
        kernel_projector(a, tol),
        ComplexMatrix::Identity(n, n) - range_projector(a.adjoint(), tol)));
  }
}

TEST_CASE("psd order") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix d10 = ComplexMatrix::Zero(2, 2);
  d10(0, 0) = 1.0;
  REQUIRE(psd_leq(d10, id, tol));
  REQUIRE_FALSE(psd_leq(id, d10, tol));
  REQUIRE_THROWS_AS(psd_leq(mat2(0, 1, 0, 0), id, tol), DomainError);

  // ((a+b)/sqrt2)^2 <= a^2 + b^2 for commuting PSD pairs
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 2 + trial % 4;
    const ComplexMatrix v = haar_unitary(n, rng);
    RealVector da(n), db(n);
    for (Index i = 0; i < n; ++i) {
      da(i) = rng.uniform(0.0, 2.0);
      db(i) = rng.uniform(0.0, 2.0);
    }
    const ComplexMatrix a = v * da.asDiagonal() * v.adjoint();
    const ComplexMatrix b = v * db.asDiagonal() * v.adjoint();
    const ComplexMatrix lhs = (a + b) * (a + b) / 2.0;
    const ComplexMatrix rhs = a * a + b * b;
    REQUIRE(psd_leq(lhs, rhs, tol));
  }
}

TEST_CASE("singular values match those of the adjoint and the modulus") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 2 + trial % 6;
    const ComplexMatrix a = gen::ginibre(rng, n, n);
    const RealVector s = singular_values(a);
    const RealVector s_adj = singular_values(a.adjoint());
    const RealVector s_mod = eig_hermitian(modulus(a, tol), tol).eigenvalues;
    REQUIRE((s - s_adj).cwiseAbs().maxCoeff() <= tol.bound(s(0)));
    REQUIRE((s - s_mod).cwiseAbs().maxCoeff() <= tol.bound(s(0)));
  }
}

TEST_CASE("singular value monotonicity in the PSD order") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 2 + trial % 6;
    const ComplexMatrix g1 = gen::ginibre(rng, n, n);
    const ComplexMatrix g2 = gen::ginibre(rng, n, n);
    const ComplexMatrix small = g1 * g1.adjoint();
    const ComplexMatrix large = small + g2 * g2.adjoint();
    const RealVector ss = singular_values(small);
    const RealVector sl = singular_values(large);
    for (Index i = 0; i < n; ++i) REQUIRE(ss(i) <= sl(i) + tol.bound(sl(0)));
  }
}

TEST_CASE("normal eigendecomposition handles clustered spectra") {
  Rng rng(14);
  for (int trial = 0; trial < 12; ++trial) {
    const Index n = 3 + trial % 5;
    const ComplexMatrix v = haar_unitary(n, rng);
    ComplexVector lam(n);
    for (Index i = 0; i < n; ++i) {
      if (i > 0 && rng.uniform() < 0.4)
        lam(i) = lam(i - 1);  // force repeats
      else {
        const double re = rng.uniform(-1.0, 1.0);
        lam(i) = Complex(re, rng.uniform(-1.0, 1.0));
      }
    }
    const ComplexMatrix t = v * lam.asDiagonal() * v.adjoint();
    const NormalEig e = eig_normal(t, tol);
    REQUIRE(is_unitary(e.eigenvectors, tol));
    const ComplexMatrix rec = e.eigenvectors * e.eigenvalues.asDiagonal() *
                              e.eigenvectors.adjoint();
    REQUIRE(tol.matrix_eq(rec, t));
  }
  REQUIRE_THROWS_AS(eig_normal(mat2(0, 1, 0, 0), tol), DomainError);
}
