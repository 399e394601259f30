#ifndef INTERDICT_LAGRANGIAN_HPP
#define INTERDICT_LAGRANGIAN_HPP

#include <cstdint>
#include <vector>

#include "interdict/family.hpp"
#include "interdict/instance.hpp"

namespace interdict {

/// One line of the lower envelope of Phi: value(lambda) = intercept +
/// slope * lambda with intercept = w(S \ R) and slope = c(R) - b.
struct ActiveLine {
  Rational intercept;
  Rational slope;
  EdgeSet witness_S;
  EdgeSet witness_R;

  Rational value_at(const Rational& lambda) const {
    return intercept + slope * lambda;
  }
};

/// Exact maximizer of Phi(lambda) = L(lambda) - lambda*b together with two
/// supporting lines through (lambda_star, Lambda) whose slopes bracket zero.
/// The hi line's witness pair is budget-feasible and attains L(lambda_star).
struct LambdaCertificate {
  Rational lambda_star;
  Rational L_star;
  Rational Lambda;
  ActiveLine line_lo;  // slope >= 0
  ActiveLine line_hi;  // slope <= 0
};

/// L(lambda) evaluation: the minimizing member S under truncated weights,
/// with the two extreme deletion witnesses. R_min takes only strictly
/// truncated edges, R_max also takes ties; their lines give the extreme
/// supergradients of Phi available from S.
struct LagrangianEval {
  Rational L;
  EdgeSet S;
  EdgeSet R_min;
  EdgeSet R_max;
};

LagrangianEval eval_L(const std::vector<std::int64_t>& weights,
                      const std::vector<std::int64_t>& costs,
                      const Rational& lambda, const FamilyOracle& family);
LagrangianEval eval_L(const InterdictionInstance& inst, const Rational& lambda,
                      const FamilyOracle& family);

Rational phi(const std::vector<std::int64_t>& weights,
             const std::vector<std::int64_t>& costs, std::int64_t budget,
             const Rational& lambda, const FamilyOracle& family);
Rational phi(const InterdictionInstance& inst, const Rational& lambda,
             const FamilyOracle& family);

/// Discrete Newton iteration on the concave piecewise-linear Phi. Returns
/// the smallest maximizer. Requires the degenerate case to have been
/// excluded (every member costs more than the budget); throws
/// std::invalid_argument otherwise. For budget 0, Phi is non-decreasing and
/// the smallest lambda at which truncation becomes inactive is reported.
LambdaCertificate find_lambda_star(const std::vector<std::int64_t>& weights,
                                   const std::vector<std::int64_t>& costs,
                                   std::int64_t budget,
                                   const FamilyOracle& family);
LambdaCertificate find_lambda_star(const InterdictionInstance& inst,
                                   const FamilyOracle& family);

/// Checks every certificate invariant against the instance data; throws
/// std::logic_error on the first violation.
void validate_certificate(const LambdaCertificate& cert,
                          const std::vector<std::int64_t>& weights,
                          const std::vector<std::int64_t>& costs,
                          std::int64_t budget);

}  // namespace interdict

#endif  // INTERDICT_LAGRANGIAN_HPP
