#include <catch2/catch.hpp>

#include "cnops/antilinear.hpp"
#include "cnops/generators.hpp"

using namespace cnops;

namespace {
const Tolerance tol;

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

TEST_CASE("apply follows the M conj(x) convention") {
  const Complex i(0.0, 1.0);
  {
    const Conjugation c = canonical_conjugation(2);
    ComplexVector x(2);
    x << 1.0, i;
    const ComplexVector y = c.apply(x);
    REQUIRE(std::abs(y(0) - Complex(1.0, 0.0)) == 0.0);
    REQUIRE(std::abs(y(1) - Complex(0.0, -1.0)) == 0.0);
  }
  {
    const Conjugation c = flip_conjugation(2);
    ComplexVector x(2);
    x << 1.0, 2.0 * i;
    const ComplexVector y = c.apply(x);
    REQUIRE(std::abs(y(0) - Complex(0.0, -2.0)) == 0.0);
    REQUIRE(std::abs(y(1) - Complex(1.0, 0.0)) == 0.0);
  }
  {
    const AntiLinearMap zero{ComplexMatrix::Zero(3, 3)};
    ComplexVector x = ComplexVector::Ones(3);
    REQUIRE(zero.apply(x).norm() == 0.0);
  }
  REQUIRE_THROWS_AS(canonical_conjugation(2).apply(ComplexVector::Ones(3)),
                    DomainError);
}

TEST_CASE("anti-linearity holds numerically") {
  Rng rng(21);
  const AntiLinearMap x{gen::ginibre(rng, 4, 4)};
  const ComplexVector v = gen::random_unit_vector(rng, 4);
  const ComplexVector w = gen::random_unit_vector(rng, 4);
  const Complex alpha = rng.complex_gaussian();
  const ComplexVector lhs = x.apply(ComplexVector(alpha * v + w));
  const ComplexVector rhs = std::conj(alpha) * x.apply(v) + x.apply(w);
  REQUIRE(tol.vector_eq(lhs, rhs));
}

TEST_CASE("sharp adjoint is the transpose and satisfies its identity") {
  REQUIRE((sharp_adjoint(AntiLinearMap{ComplexMatrix::Identity(3, 3)}).mat -
           ComplexMatrix::Identity(3, 3))
              .norm() == 0.0);
  REQUIRE((sharp_adjoint(AntiLinearMap{mat2(0, 1, 0, 0)}).mat - mat2(0, 0, 1, 0)).norm() == 0.0);

  Rng rng(22);
  const AntiLinearMap x{gen::ginibre(rng, 3, 3)};
  const AntiLinearMap xs = sharp_adjoint(x);
  // involution, exactly
  REQUIRE((sharp_adjoint(xs).mat - x.mat).norm() == 0.0);
  // <Xu, v> = conj(<u, X#v>) = <X#v, u> on basis pairs and random vectors
  for (int rep = 0; rep < 6; ++rep) {
    const ComplexVector u =
        rep < 3 ? ComplexVector(ComplexVector::Unit(3, rep))
                : gen::random_unit_vector(rng, 3);
    const ComplexVector v = gen::random_unit_vector(rng, 3);
    const Complex lhs = inner(x.apply(u), v);
    const Complex rhs = inner(xs.apply(v), u);
    REQUIRE(std::abs(lhs - rhs) <= tol.bound(std::abs(lhs) + 1.0));
    REQUIRE(std::abs(lhs - std::conj(inner(u, xs.apply(v)))) <=
            tol.bound(std::abs(lhs) + 1.0));
  }

  // conjugations are sharp-self-adjoint
  const Conjugation c = random_conjugation(4, rng);
  REQUIRE(tol.matrix_eq(sharp_adjoint(c.antilinear()).mat, c.mat));
}

TEST_CASE("composition follows the four mixed-case rules") {
  Rng rng(23);
  const Conjugation c = random_conjugation(3, rng);
  // C o C is the identity
  REQUIRE(tol.matrix_eq(compose(c.antilinear(), c.antilinear()),
                        ComplexMatrix::Identity(3, 3)));

  const ComplexMatrix n2 = mat2(0, 1, 0, 0);
  const Conjugation flip = flip_conjugation(2);
  const AntiLinearMap anti_after_linear = compose(flip.antilinear(), n2);
  REQUIRE(tol.matrix_eq(anti_after_linear.mat, mat2(0, 0, 0, 1)));

  // identity composed with a conjugation is the conjugation
  REQUIRE(tol.matrix_eq(
      compose(ComplexMatrix(ComplexMatrix::Identity(3, 3)), c.antilinear()).mat,
      c.mat));

  // matrix rules on random data
  const AntiLinearMap x{gen::ginibre(rng, 3, 3)};
  const AntiLinearMap y{gen::ginibre(rng, 3, 3)};
  const ComplexMatrix a = gen::ginibre(rng, 3, 3);
  REQUIRE(tol.matrix_eq(compose(x, y), x.mat * y.mat.conjugate()));
  REQUIRE(tol.matrix_eq(compose(x, a).mat, x.mat * a.conjugate()));
  REQUIRE(tol.matrix_eq(compose(a, x).mat, a * x.mat));

  REQUIRE_THROWS_AS(compose(x, AntiLinearMap{ComplexMatrix::Zero(2, 2)}),
                    DomainError);

  // composition agrees with pointwise application
  const ComplexVector v = gen::random_unit_vector(rng, 3);
  REQUIRE(tol.vector_eq(ComplexVector(compose(x, y) * v),
                        x.apply(y.apply(v))));
  REQUIRE(tol.vector_eq(compose(x, a).apply(v), x.apply(ComplexVector(a * v))));
  REQUIRE(tol.vector_eq(compose(a, x).apply(v), ComplexVector(a * x.apply(v))));
}

TEST_CASE("make_conjugation validates symmetric unitarity") {
  REQUIRE_NOTHROW(make_conjugation(ComplexMatrix::Identity(3, 3), tol));
  REQUIRE_NOTHROW(make_conjugation(flip_conjugation(4).mat, tol));
  REQUIRE_THROWS_AS(make_conjugation(mat2(0, 1, 0, 0), tol), InvalidConjugation);
  // unitary but not symmetric
  ComplexMatrix rot(2, 2);
  rot << 0, -1, 1, 0;
  REQUIRE_THROWS_AS(make_conjugation(rot, tol), InvalidConjugation);
  REQUIRE_THROWS_AS(make_conjugation(ComplexMatrix::Identity(2, 3), tol),
                    InvalidConjugation);
}

TEST_CASE("random conjugations validate, involve, and reproduce") {
  {
    Rng rng(24);
    const Conjugation c1 = random_conjugation(1, rng);
    REQUIRE(std::abs(std::abs(c1.mat(0, 0)) - 1.0) < 1e-12);
  }
  Rng rng(25);
  for (Index n : {1, 2, 3, 5, 8}) {
    const Conjugation c = random_conjugation(n, rng);
    REQUIRE_NOTHROW(make_conjugation(c.mat, tol));
    // involution and inner-product reversal on random vectors
    for (int rep = 0; rep < 4; ++rep) {
      const ComplexVector x = gen::random_unit_vector(rng, n);
      const ComplexVector y = gen::random_unit_vector(rng, n);
      REQUIRE(tol.vector_eq(c.apply(c.apply(x)), x));
      const Complex lhs = inner(c.apply(x), c.apply(y));
      const Complex rhs = inner(y, x);
      REQUIRE(std::abs(lhs - rhs) <= tol.bound(1.0));
    }
  }
  // determinism for a fixed seed
  const Conjugation a = random_conjugation(6, std::uint64_t{99});
  const Conjugation b = random_conjugation(6, std::uint64_t{99});
  REQUIRE((a.mat - b.mat).norm() == 0.0);
}

TEST_CASE("anti-linear normality") {
  Rng rng(26);
  REQUIRE(is_antilinear_normal(random_conjugation(4, rng).antilinear(), tol));
  REQUIRE_FALSE(is_antilinear_normal(AntiLinearMap{mat2(0, 2, 0, 0)}, tol));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  REQUIRE(is_antilinear_normal(AntiLinearMap{d}, tol));
}

TEST_CASE("haar unitaries are unitary and seed-stable") {
  Rng rng(27);
  const ComplexMatrix u = haar_unitary(6, rng);
  REQUIRE(is_unitary(u, tol));
  Rng r1(123), r2(123);
  REQUIRE((haar_unitary(5, r1) - haar_unitary(5, r2)).norm() == 0.0);
}
