#pragma once

// Range-inclusion factorization and the polar decompositions built on it:
// the linear majorization solver, its anti-linear counterparts, and the
// conjugation-twisted polar decomposition of conjugate-normal matrices.

#include <utility>

#include "cnops/antilinear.hpp"
#include "cnops/numeric.hpp"
#include "cnops/types.hpp"

namespace cnops {

/// Quick conjugate-normality test through the operator identity
/// C T^*T = T T^* C, i.e. S conj(T^*T) conj(S) = T T^*.
inline bool is_c_normal(const ComplexMatrix& t, const Conjugation& c,
                        const Tolerance& tol = {}) {
  require_square(t, "is_c_normal");
  if (c.dim() != t.rows()) throw DomainError("is_c_normal: dimension mismatch");
  const ComplexMatrix lhs =
      c.mat * (t.adjoint() * t).conjugate() * c.mat.conjugate();
  return tol.matrix_eq(lhs, t * t.adjoint());
}

inline bool range_included(const ComplexMatrix& a, const ComplexMatrix& b,
                           const Tolerance& tol = {}) {
  if (a.rows() != b.rows())
    throw DomainError("range_included: row dimensions differ");
  return tol.matrix_eq(range_projector(b, tol) * a, a);
}

struct DouglasSolution {
  ComplexMatrix factor;  // C with A = B C
  double norm_sq;        // ||C||^2
  double k_min;          // inf { k : A A^* <= k B B^* }, equal to norm_sq
};

/// Minimal-norm factor C = pinv(B) A of A = B C. The factor satisfies
/// ker C = ker A and ran C subset of ran B^*; its squared operator norm is
/// the majorization infimum.
inline DouglasSolution douglas_solve(const ComplexMatrix& a,
                                     const ComplexMatrix& b,
                                     const Tolerance& tol = {}) {
  if (a.rows() != b.rows())
    throw DomainError("douglas_solve: row dimensions differ");
  if (!range_included(a, b, tol))
    throw RangeError("douglas_solve: ran(A) is not contained in ran(B)");
  const ComplexMatrix factor = pinv(b, tol) * a;
  const double nsq = factor.size() > 0 ? operator_norm(factor) : 0.0;
  return {factor, nsq * nsq, nsq * nsq};
}

/// Anti-linear range-inclusion factor: for anti-linear T, S with
/// ran T inside ran S, returns the linear R = C o D o C with T = S o R,
/// ker R = ker T and cl ran R = (ker S)^perp.
inline ComplexMatrix antilinear_douglas(const AntiLinearMap& t,
                                        const AntiLinearMap& s,
                                        const Conjugation& c,
                                        const Tolerance& tol = {}) {
  if (t.dim() != s.dim() || t.dim() != c.dim())
    throw DomainError("antilinear_douglas: dimension mismatch");
  const ComplexMatrix a = compose(t, c);  // linear
  const ComplexMatrix b = compose(s, c);
  if (!range_included(a, b, tol))
    throw RangeError("antilinear_douglas: ran(T) is not contained in ran(S)");
  const ComplexMatrix d = douglas_solve(a, b, tol).factor;
  return compose(c, compose(d, c));  // linear C o D o C
}

/// Partial isometry D with S = D o T, initial space cl ran T and final
/// space cl ran S, for anti-linear S, T of equal modulus (S#S = T#T).
inline ComplexMatrix antilinear_equal_modulus_factor(const AntiLinearMap& s,
                                                     const AntiLinearMap& t,
                                                     const Tolerance& tol = {}) {
  if (s.dim() != t.dim())
    throw DomainError("antilinear_equal_modulus_factor: dimension mismatch");
  const ComplexMatrix gram_s = compose(sharp_adjoint(s), s);
  const ComplexMatrix gram_t = compose(sharp_adjoint(t), t);
  if (!tol.matrix_eq(gram_s, gram_t))
    throw ModulusMismatch(
        "antilinear_equal_modulus_factor: S#S and T#T differ");
  // S# o S has matrix conj(M_S^H M_S), so the shared matrix modulus is
  // the PSD root of the conjugated composition.
  const ComplexMatrix mod = sqrt_psd(gram_t.conjugate(), tol);
  const ComplexMatrix mod_pinv = pinv(mod, tol);
  const ComplexMatrix ut = t.mat * mod_pinv;
  const ComplexMatrix us = s.mat * mod_pinv;
  return us * ut.adjoint();
}

struct PolarDecomposition {
  PartialAntiIsometry isometry_part;  // J
  ComplexMatrix modulus;              // |A|, PSD

  AntiLinearMap reconstruct() const {
    return compose(isometry_part.antilinear(), modulus);
  }
};

/// Polar decomposition A = J |A| of an anti-linear map, with J a partial
/// anti-isometry vanishing exactly on ker A. The modulus is the PSD root
/// of the linear composition A# o A; conjugating A by any conjugation C
/// leaves it unchanged, since (C A)^*(C A) = A# A.
inline PolarDecomposition antilinear_polar(const AntiLinearMap& a,
                                           const Tolerance& tol = {}) {
  require_square(a.mat, "antilinear_polar");
  // A# o A is the linear matrix conj(M^H M); its PSD root is the modulus
  // of the map (equal to |C A| for every conjugation C).
  const ComplexMatrix gram = compose(sharp_adjoint(a), a);
  const ComplexMatrix mod = sqrt_psd(gram, tol);
  const ComplexMatrix mj = a.mat * pinv(mod.conjugate(), tol);
  PartialAntiIsometry j;
  j.mat = mj;
  j.initial_projector = range_projector(mj.adjoint(), tol).conjugate();
  j.final_projector = range_projector(mj, tol);
  return {std::move(j), mod};
}

struct CNormalPolar {
  AntiLinearMap j;        // partial anti-unitary, or anti-unitary if extended
  ComplexMatrix modulus;  // |T|
  bool extended;
};

/// T = C o J o |T| with J |T| = |T| J for conjugate-normal T. With
/// extend = false, J is the partial anti-unitary supported on ran|T|;
/// with extend = true it is completed to an anti-unitary by the canonical
/// conjugation of an orthonormal basis of ker|T|.
inline CNormalPolar cnormal_polar(const ComplexMatrix& t, const Conjugation& c,
                                  const Tolerance& tol = {},
                                  bool extend = false) {
  require_square(t, "cnormal_polar");
  if (c.dim() != t.rows())
    throw DomainError("cnormal_polar: dimension mismatch");
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("cnormal_polar: input is not C-normal");
  // C o T is anti-linearly normal here, so its polar parts commute and
  // its modulus equals |T|.
  const AntiLinearMap x = compose(c, t);
  PolarDecomposition polar = antilinear_polar(x, tol);
  ComplexMatrix mj = polar.isometry_part.mat;
  if (extend) {
    const ComplexMatrix k = kernel_basis(polar.modulus, tol);
    if (k.cols() > 0) mj += k * k.transpose();
  }
  return {AntiLinearMap{std::move(mj)}, std::move(polar.modulus), extend};
}

}  // namespace cnops
