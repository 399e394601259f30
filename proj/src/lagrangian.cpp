#include "interdict/lagrangian.hpp"

#include <algorithm>
#include <stdexcept>

namespace interdict {

namespace {

ActiveLine make_line(const std::vector<std::int64_t>& w,
                     const std::vector<std::int64_t>& c, std::int64_t b,
                     const EdgeSet& s, const EdgeSet& r) {
  std::int64_t residual = 0;
  std::int64_t removed_cost = 0;
  for (EdgeId id : s)
    if (!r.contains(id)) residual += w[std::size_t(id)];
  for (EdgeId id : r) removed_cost += c[std::size_t(id)];
  return ActiveLine{Rational{residual}, Rational{removed_cost - b}, s, r};
}

Rational max_weight_cost_ratio(const std::vector<std::int64_t>& w,
                               const std::vector<std::int64_t>& c) {
  Rational best{0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational r{w[i], c[i]};
    if (best < r) best = r;
  }
  return best;
}

std::size_t distinct_ratio_count(const std::vector<std::int64_t>& w,
                                 const std::vector<std::int64_t>& c) {
  std::vector<Rational> ratios;
  ratios.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ratios.emplace_back(w[i], c[i]);
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
  return ratios.size();
}

}  // namespace

LagrangianEval eval_L(const std::vector<std::int64_t>& w,
                      const std::vector<std::int64_t>& c,
                      const Rational& lambda, const FamilyOracle& family) {
  if (lambda.is_negative())
    throw std::domain_error("eval_L: negative lambda");
  const std::vector<Rational> truncated = truncate_weights(w, c, lambda);
  FamilyOracle::MinimizeResult m = family.minimize(truncated);
  if (!(m.value == set_weight(m.member, truncated)))
    throw std::logic_error("eval_L: oracle value disagrees with its witness");
  std::vector<EdgeId> r_min, r_max;
  for (EdgeId id : m.member) {
    const Rational priced = lambda * Rational{c[std::size_t(id)]};
    const Rational kept{w[std::size_t(id)]};
    if (priced < kept) r_min.push_back(id);
    if (priced <= kept) r_max.push_back(id);
  }
  return {std::move(m.value), std::move(m.member), EdgeSet{std::move(r_min)},
          EdgeSet{std::move(r_max)}};
}

LagrangianEval eval_L(const InterdictionInstance& inst, const Rational& lambda,
                      const FamilyOracle& family) {
  return eval_L(inst.weight_vector(), inst.cost_vector(), lambda, family);
}

Rational phi(const std::vector<std::int64_t>& w,
             const std::vector<std::int64_t>& c, std::int64_t b,
             const Rational& lambda, const FamilyOracle& family) {
  return eval_L(w, c, lambda, family).L - lambda * Rational{b};
}

Rational phi(const InterdictionInstance& inst, const Rational& lambda,
             const FamilyOracle& family) {
  return phi(inst.weight_vector(), inst.cost_vector(), inst.budget(), lambda,
             family);
}

LambdaCertificate find_lambda_star(const std::vector<std::int64_t>& w,
                                   const std::vector<std::int64_t>& c,
                                   std::int64_t b,
                                   const FamilyOracle& family) {
  if (w.size() != c.size())
    throw std::invalid_argument("find_lambda_star: weight/cost size mismatch");

  // With no deletion budget Phi(lambda) = L(lambda) is non-decreasing; the
  // smallest lambda with every truncation inactive is reported so that the
  // engine pipeline stays uniform.
  if (b == 0) {
    const Rational lambda_star = max_weight_cost_ratio(w, c);
    LagrangianEval ev = eval_L(w, c, lambda_star, family);
    ActiveLine lo = make_line(w, c, b, ev.S, ev.R_max);
    ActiveLine hi = make_line(w, c, b, ev.S, ev.R_min);
    if (!hi.slope.is_zero())
      throw std::logic_error("find_lambda_star: expected flat hi line at b=0");
    return {lambda_star, ev.L, ev.L, std::move(lo), std::move(hi)};
  }

  // Bracket initialisation: a rising supporting line at lambda = 0 and a
  // falling one at the largest edge ratio (beyond it L is constant).
  LagrangianEval ev0 = eval_L(w, c, Rational{0}, family);
  if (!ev0.L.is_zero())
    throw std::logic_error("find_lambda_star: L(0) must be zero");
  ActiveLine line_lo = make_line(w, c, b, ev0.S, ev0.R_max);
  if (!(Rational{0} < line_lo.slope))
    throw std::invalid_argument(
        "find_lambda_star: instance is degenerate (a member's full deletion "
        "cost is within the budget); exclude that case first");

  const Rational lambda_max = max_weight_cost_ratio(w, c);
  LagrangianEval ev_hi = eval_L(w, c, lambda_max, family);
  ActiveLine line_hi = make_line(w, c, b, ev_hi.S, ev_hi.R_min);
  if (!(line_hi.slope == Rational{-b}))
    throw std::logic_error("find_lambda_star: hi line must have slope -b");

  const Rational budget{b};
  // One new envelope line is installed per iteration; the bound below holds
  // for the instances this solver targets and any overrun means broken
  // comparison logic, not a long envelope.
  const long max_iterations =
      static_cast<long>(distinct_ratio_count(w, c)) + 2;
  for (long iteration = 0; iteration < max_iterations; ++iteration) {
    const Rational lambda_new =
        (line_hi.intercept - line_lo.intercept) / (line_lo.slope - line_hi.slope);
    const Rational upper = line_lo.value_at(lambda_new);
    if (!(upper == line_hi.value_at(lambda_new)))
      throw std::logic_error("find_lambda_star: bracketing lines diverge");

    LagrangianEval ev = eval_L(w, c, lambda_new, family);
    const Rational phi_new = ev.L - lambda_new * budget;
    if (upper < phi_new)
      throw std::logic_error("find_lambda_star: envelope above its bound");

    if (phi_new == upper) {
      // Both bracketing lines are active here; since line_lo rises strictly,
      // lambda_new is the smallest maximizer.
      return {lambda_new, std::move(ev.L), phi_new, std::move(line_lo),
              std::move(line_hi)};
    }

    ActiveLine cand_lo = make_line(w, c, b, ev.S, ev.R_max);
    ActiveLine cand_hi = make_line(w, c, b, ev.S, ev.R_min);
    if (!(cand_lo.value_at(lambda_new) == phi_new) ||
        !(cand_hi.value_at(lambda_new) == phi_new))
      throw std::logic_error("find_lambda_star: witness lines not active");

    const bool lo_rises = Rational{0} < cand_lo.slope;
    const bool hi_falls = !(Rational{0} < cand_hi.slope);  // slope <= 0
    if (hi_falls && lo_rises)
      return {lambda_new, std::move(ev.L), phi_new, std::move(cand_lo),
              std::move(cand_hi)};

    if (cand_lo.slope.is_zero()) {
      // A flat active line: lambda_new maximizes Phi but the smallest
      // maximizer lies to the left; continue with the flat line as the
      // falling side.
      line_hi = std::move(cand_lo);
    } else if (lo_rises) {
      line_lo = std::move(cand_lo);
    } else {
      line_hi = std::move(cand_hi);
    }
  }
  throw std::logic_error(
      "find_lambda_star: iteration guard exceeded; comparison logic broken");
}

LambdaCertificate find_lambda_star(const InterdictionInstance& inst,
                                   const FamilyOracle& family) {
  return find_lambda_star(inst.weight_vector(), inst.cost_vector(),
                          inst.budget(), family);
}

void validate_certificate(const LambdaCertificate& cert,
                          const std::vector<std::int64_t>& w,
                          const std::vector<std::int64_t>& c,
                          std::int64_t b) {
  auto fail = [](const char* what) { throw std::logic_error(what); };
  if (cert.lambda_star.is_negative()) fail("certificate: negative lambda*");
  if (!(cert.Lambda == cert.L_star - cert.lambda_star * Rational{b}))
    fail("certificate: Lambda != L* - lambda* * b");
  if (cert.line_lo.slope.is_negative()) fail("certificate: lo slope < 0");
  if (Rational{0} < cert.line_hi.slope) fail("certificate: hi slope > 0");
  for (const ActiveLine* line : {&cert.line_lo, &cert.line_hi}) {
    for (EdgeId id : line->witness_R)
      if (!line->witness_S.contains(id)) fail("certificate: R not within S");
    const ActiveLine rebuilt =
        make_line(w, c, b, line->witness_S, line->witness_R);
    if (!(rebuilt.intercept == line->intercept) ||
        !(rebuilt.slope == line->slope))
      fail("certificate: line does not match its witnesses");
    if (!(line->value_at(cert.lambda_star) == cert.Lambda))
      fail("certificate: line misses (lambda*, Lambda)");
  }
}

}  // namespace interdict
