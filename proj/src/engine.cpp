#include "interdict/engine.hpp"

#include <algorithm>
#include <thread>

namespace interdict {

namespace {

// Degenerate branch: some member's relevant deletion cost fits the budget,
// so the optimum is 0. Two passes: full costs first (remove the whole
// member, the textbook case), then costs with zero-weight edges free (only
// the positive-weight part needs removing).
std::optional<Solution> detect_degenerate(const FamilyOracle& family,
                                          const std::vector<std::int64_t>& w,
                                          const std::vector<std::int64_t>& c,
                                          std::int64_t b,
                                          const SolveOptions& options) {
  FamilyOracle::CostResult full = family.min_cost_member(c);
  Solution sol;
  sol.degenerate = true;
  sol.seed = options.seed;
  sol.knapsack_used = options.knapsack;
  sol.enumeration_used = options.enumeration;
  if (full.cost <= b) {
    sol.S = full.member;
    sol.R = full.member;
    return sol;
  }
  std::vector<std::int64_t> reduced(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) reduced[i] = w[i] > 0 ? c[i] : 0;
  FamilyOracle::CostResult positive_part = family.min_cost_member(reduced);
  if (positive_part.cost <= b) {
    std::vector<EdgeId> r;
    for (EdgeId id : positive_part.member)
      if (w[std::size_t(id)] > 0) r.push_back(id);
    sol.S = positive_part.member;
    sol.R = EdgeSet{std::move(r)};
    return sol;
  }
  return std::nullopt;
}

struct Candidate {
  const EdgeSet* S;
  DeletionResult deletion;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.deletion.residual != b.deletion.residual)
    return a.deletion.residual < b.deletion.residual;
  if (a.S->size() != b.S->size()) return a.S->size() < b.S->size();
  return *a.S < *b.S;
}

Solution run_template(const FamilyOracle& family,
                      const std::vector<std::int64_t>& w,
                      const std::vector<std::int64_t>& c, std::int64_t b,
                      const SolveOptions& options) {
  if (w.size() != c.size() ||
      w.size() != std::size_t(family.ground_size()))
    throw std::invalid_argument("solve: weight/cost vector size mismatch");

  if (auto degenerate = detect_degenerate(family, w, c, b, options))
    return *degenerate;

  LambdaCertificate cert = find_lambda_star(w, c, b, family);
  if (!(Rational{0} < cert.Lambda))
    throw InternalError(
        "solve: Lambda must be positive after the degeneracy check",
        std::move(cert));

  const std::vector<Rational> w_star = truncate_weights(w, c, cert.lambda_star);
  const Rational threshold = Rational{2} * cert.L_star;
  std::vector<EdgeSet> candidates = family.enumerate_below(
      w_star, threshold, options.strict_threshold, options.seed);
  if (candidates.empty())
    throw InternalError(
        "solve: candidate set empty, yet the minimizer itself lies below "
        "2 L*",
        std::move(cert));

  std::vector<Candidate> evaluated(candidates.size());
  auto solve_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      std::vector<KnapsackItem> items = items_for(candidates[i], w, c);
      DeletionResult del = options.knapsack == KnapsackMode::exact
                               ? knapsack_exact(items, b)
                               : knapsack_fptas(items, b, options.epsilon);
      evaluated[i] = Candidate{&candidates[i], std::move(del)};
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1 || candidates.size() < 2 * std::size_t(threads)) {
    solve_range(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(candidates.size(), std::size_t(t) * chunk);
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      pool.emplace_back([&, lo, hi] { solve_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  const Candidate* best = &evaluated.front();
  for (const Candidate& cand : evaluated)
    if (candidate_less(cand, *best)) best = &cand;

  Solution sol;
  sol.value = best->deletion.residual;
  sol.S = *best->S;
  sol.R = best->deletion.removed;
  sol.lambda_star = cert.lambda_star;
  sol.L_star = cert.L_star;
  sol.Lambda = cert.Lambda;
  sol.candidates = static_cast<std::int64_t>(candidates.size());
  sol.degenerate = false;
  sol.enumeration_used = options.enumeration;
  sol.knapsack_used = options.knapsack;
  sol.seed = options.seed;
  sol.certificate = std::move(cert);

  if (options.strict_threshold) {
    const Rational selected = set_weight(sol.S, w_star);
    if (!(selected < threshold))
      throw InternalError("solve: selected member violates the 2 L* bound",
                          sol.certificate);
  }
  return sol;
}

EnumerationConfig enumeration_config(const SolveOptions& options) {
  EnumerationConfig config;
  config.mode = options.enumeration;
  config.exhaustive_limit = options.exhaustive_limit;
  config.contraction.delta = options.delta;
  config.contraction.repetition_budget = options.repetition_budget;
  config.contraction.threads = options.threads;
  return config;
}

}  // namespace

Solution solve(const InterdictionInstance& inst, const SolveOptions& options) {
  GraphCutFamily family(inst, enumeration_config(options));
  Solution sol = run_template(family, inst.weight_vector(),
                              inst.cost_vector(), inst.budget(), options);
  if (options.enumeration == EnumMode::automatic)
    sol.enumeration_used = inst.vertex_count() <= options.exhaustive_limit
                               ? EnumMode::exhaustive
                               : EnumMode::contraction;
  return sol;
}

Solution solve_explicit(const ExplicitFamily& family,
                        const std::vector<std::int64_t>& weights,
                        const std::vector<std::int64_t>& costs,
                        std::int64_t budget, const SolveOptions& options) {
  Solution sol = run_template(family, weights, costs, budget, options);
  sol.enumeration_used = EnumMode::exhaustive;  // explicit scan is complete
  return sol;
}

const char* to_string(EnumMode mode) {
  switch (mode) {
    case EnumMode::automatic: return "auto";
    case EnumMode::exhaustive: return "exhaustive";
    case EnumMode::contraction: return "contraction";
  }
  return "?";
}

const char* to_string(KnapsackMode mode) {
  return mode == KnapsackMode::exact ? "exact" : "fptas";
}

}  // namespace interdict
