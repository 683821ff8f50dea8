#pragma once

// Singular-value and norm inequalities for conjugate-normal matrices,
// evaluated per instance and returned as slack reports. A failed
// inequality is a finding, not an exception: reports carry passed=false
// with the offending slack.

#include <algorithm>
#include <string>
#include <utility>

#include "cnops/cnormal.hpp"
#include "cnops/numeric.hpp"
#include "cnops/types.hpp"

namespace cnops {

struct InequalityReport {
  std::string name;
  RealVector lhs;
  RealVector rhs;
  RealVector slack;  // rhs - lhs per index
  bool passed = false;

  double min_slack() const { return slack.size() ? slack.minCoeff() : 0.0; }
};

inline InequalityReport make_inequality_report(std::string name,
                                               RealVector lhs, RealVector rhs,
                                               const Tolerance& tol) {
  InequalityReport rep;
  rep.name = std::move(name);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.slack = rep.rhs - rep.lhs;
  double scale = 0.0;
  for (Index i = 0; i < rep.lhs.size(); ++i)
    scale = std::max({scale, std::abs(rep.lhs(i)), std::abs(rep.rhs(i))});
  rep.passed = rep.min_slack() >= -tol.bound(scale);
  return rep;
}

/// Two-sided bound (1/sqrt2) s_j(|A|+|B|) <= s_j(T) <= s_j(|A|+|B|) through
/// the Cartesian pair, plus the certificates used on the way there:
/// |T| = sqrt(|A|^2 + |B|^2) and [|A|, |B|] = 0.
struct SandwichReports {
  InequalityReport lower;
  InequalityReport upper;
  double modulus_chain_residual = 0.0;
  double moduli_commute_residual = 0.0;
};

inline SandwichReports singular_value_sandwich(const ComplexMatrix& t,
                                               const Conjugation& c,
                                               const Tolerance& tol = {}) {
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("singular_value_sandwich: input is not C-normal");
  const CartesianPair pair = cartesian_decompose(t, c);
  const ComplexMatrix amod = modulus(pair.symmetric_part, tol);
  const ComplexMatrix bmod = modulus(pair.skew_part, tol);
  const ComplexMatrix sum = amod + bmod;

  const RealVector s_t = singular_values(t);
  const RealVector s_sum = singular_values(sum);

  SandwichReports out;
  out.lower = make_inequality_report("sandwich_lower", s_sum * M_SQRT1_2, s_t, tol);
  out.upper = make_inequality_report("sandwich_upper", s_t, s_sum, tol);
  out.modulus_chain_residual =
      (modulus(t, tol) - sqrt_psd(amod * amod + bmod * bmod, tol)).norm();
  out.moduli_commute_residual = (amod * bmod - bmod * amod).norm();
  return out;
}

/// 2 s_j(B A^*) = 2 s_j(A B^*) <= s_j((T^*T) (+) (TT^*)). The lhs uses
/// A B^*; the equality of the two products' singular values is folded into
/// the report through `sv_equality_residual`.
struct ProductBoundReport {
  InequalityReport bound;
  double sv_equality_residual = 0.0;
  bool sv_equal = false;
};

inline ProductBoundReport product_singular_bound(const ComplexMatrix& t,
                                                 const Conjugation& c,
                                                 const Tolerance& tol = {}) {
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("product_singular_bound: input is not C-normal");
  const CartesianPair pair = cartesian_decompose(t, c);
  const ComplexMatrix& a = pair.symmetric_part;
  const ComplexMatrix& b = pair.skew_part;

  const RealVector s_ab = singular_values(a * b.adjoint());
  const RealVector s_ba = singular_values(b * a.adjoint());
  const RealVector s_ds =
      singular_values(direct_sum(t.adjoint() * t, t * t.adjoint()));

  ProductBoundReport out;
  out.sv_equality_residual = (s_ab - s_ba).cwiseAbs().maxCoeff();
  out.sv_equal = true;
  for (Index i = 0; i < s_ab.size(); ++i)
    out.sv_equal = out.sv_equal && tol.scalar_eq(s_ab(i), s_ba(i));
  out.bound = make_inequality_report("product_bound", 2.0 * s_ab,
                                     s_ds.head(s_ab.size()), tol);
  out.bound.passed = out.bound.passed && out.sv_equal;
  return out;
}

/// ||T^*T - TT^*|| <= 2||A|| min(||A-A^*||, ||A+A^*||)
///                  + 2||B|| min(||B-B^*||, ||B+B^*||), in operator norm.
inline InequalityReport self_commutator_bound(const ComplexMatrix& t,
                                              const Conjugation& c,
                                              const Tolerance& tol = {}) {
  if (!is_c_normal(t, c, tol))
    throw NotCNormal("self_commutator_bound: input is not C-normal");
  const CartesianPair pair = cartesian_decompose(t, c);
  const ComplexMatrix& a = pair.symmetric_part;
  const ComplexMatrix& b = pair.skew_part;
  const auto [s1, s2] = symmetrizations(t);
  (void)s2;

  const double lhs = operator_norm(s1);
  const double rhs =
      2.0 * operator_norm(a) *
          std::min(operator_norm(a - a.adjoint()), operator_norm(a + a.adjoint())) +
      2.0 * operator_norm(b) *
          std::min(operator_norm(b - b.adjoint()), operator_norm(b + b.adjoint()));

  RealVector l(1), r(1);
  l << lhs;
  r << rhs;
  return make_inequality_report("self_commutator", std::move(l), std::move(r),
                                tol);
}

}  // namespace cnops
