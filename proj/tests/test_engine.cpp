#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "interdict/engine.hpp"
#include "interdict/oracle.hpp"
#include "test_util.hpp"

using namespace interdict;
using test::t1;
using test::unit_triangle;

TEST_CASE("golden triangle solution") {
  const Solution sol = solve(t1());
  CHECK(sol.value == 3);
  CHECK(sol.S == EdgeSet{{0, 1}});
  CHECK(sol.R == EdgeSet{{0}});
  CHECK(sol.lambda_star == Rational{2});
  CHECK(sol.L_star == Rational{6});
  CHECK(sol.Lambda == Rational{2});
  CHECK(sol.candidates == 3);
  CHECK(!sol.degenerate);
  REQUIRE(sol.certificate.has_value());
  validate_certificate(*sol.certificate, t1().weight_vector(),
                       t1().cost_vector(), 2);
}

TEST_CASE("degenerate triangle: a whole cut fits the budget") {
  const auto inst = unit_triangle(2);
  const Solution sol = solve(inst);
  CHECK(sol.degenerate);
  CHECK(sol.value == 0);
  CHECK(sol.S == sol.R);
  CHECK(set_cost(inst, sol.R) <= 2);
  CHECK(sol.S.size() == 2);
  CHECK(sol.candidates == 0);
}

TEST_CASE("zero budget solves the plain minimization") {
  const Solution sol = solve(t1(0));
  CHECK(sol.value == 7);  // min cut under w: min(7, 9, 8)
  CHECK(sol.R.empty());
  CHECK(!sol.degenerate);
  CHECK(sol.lambda_star == Rational{3});
}

TEST_CASE("zero-weight cut edges make deletion free") {
  // Cut {e0,e1} isolates vertex 1 with both edges weightless: removing just
  // their positive-weight part (nothing) costs 0, so the optimum is 0 even
  // though every cut's full cost exceeds the budget.
  std::vector<Edge> edges = {
      {0, 0, 1, 0, 1},
      {1, 1, 2, 0, 1},
      {2, 0, 2, 5, 3},
  };
  const InterdictionInstance inst(3, std::move(edges), 1);
  const Solution sol = solve(inst);
  CHECK(sol.degenerate);
  CHECK(sol.value == 0);
  CHECK(set_cost(inst, sol.R) <= 1);
  std::int64_t residual = 0;
  for (EdgeId id : sol.S)
    if (!sol.R.contains(id)) residual += inst.edge(id).weight;
  CHECK(residual == 0);
  CHECK(brute_solve(inst).value == 0);
}

TEST_CASE("disconnected graphs are degenerate with an empty cut") {
  std::vector<Edge> edges = {{0, 0, 1, 3, 2}, {1, 2, 3, 4, 2}};
  const InterdictionInstance inst(4, std::move(edges), 0);
  const Solution sol = solve(inst);
  CHECK(sol.degenerate);
  CHECK(sol.value == 0);
  CHECK(sol.S.empty());
  CHECK(sol.R.empty());
}

TEST_CASE("explicit family backend") {
  SUBCASE("two singleton members, nothing deletable") {
    const ExplicitFamily family(2, {EdgeSet{{0}}, EdgeSet{{1}}});
    const Solution sol = solve_explicit(family, {5, 3}, {4, 4}, 3);
    CHECK(sol.value == 3);
    CHECK(sol.S == EdgeSet{{1}});
    CHECK(sol.R.empty());
    CHECK(!sol.degenerate);
  }
  SUBCASE("degenerate single member") {
    const ExplicitFamily family(1, {EdgeSet{{0}}});
    const Solution sol = solve_explicit(family, {5}, {1}, 1);
    CHECK(sol.degenerate);
    CHECK(sol.value == 0);
  }
  SUBCASE("the three triangle cuts given explicitly match solve") {
    const ExplicitFamily family(
        3, {EdgeSet{{0, 1}}, EdgeSet{{1, 2}}, EdgeSet{{0, 2}}});
    const auto inst = t1();
    const Solution graph_sol = solve(inst);
    const Solution explicit_sol = solve_explicit(
        family, inst.weight_vector(), inst.cost_vector(), inst.budget());
    CHECK(explicit_sol.value == graph_sol.value);
    CHECK(explicit_sol.S == graph_sol.S);
    CHECK(explicit_sol.R == graph_sol.R);
    CHECK(explicit_sol.lambda_star == graph_sol.lambda_star);
    CHECK(explicit_sol.L_star == graph_sol.L_star);
    CHECK(explicit_sol.candidates == graph_sol.candidates);
  }
  SUBCASE("invalid families are rejected") {
    CHECK_THROWS_AS(ExplicitFamily(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(ExplicitFamily(1, {EdgeSet{{0}}, EdgeSet{{0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExplicitFamily(1, {EdgeSet{{2}}}), std::invalid_argument);
  }
}

TEST_CASE("solution invariants and oracle agreement on random instances") {
  for (int trial = 0; trial < 120; ++trial) {
    const auto inst = test::random_instance(trial);
    const Solution sol = solve(inst);
    const OracleReport truth = brute_solve(inst);
    CHECK(sol.value == truth.value);

    // Witness pair invariants.
    for (EdgeId id : sol.R) CHECK(sol.S.contains(id));
    CHECK(set_cost(inst, sol.R) <= inst.budget());
    std::int64_t residual = 0;
    for (EdgeId id : sol.S)
      if (!sol.R.contains(id)) residual += inst.edge(id).weight;
    CHECK(residual == sol.value);
    CHECK(Rational{sol.value} >= sol.Lambda);

    if (!sol.degenerate) {
      // The oracle's optimal witness is a strict 2-approximate minimizer
      // under the truncated weights.
      const auto w_star = truncate_weights(inst, sol.lambda_star);
      const Rational ws = set_weight(truth.best_S, w_star);
      const Rational bound =
          sol.L_star + Rational{inst.budget()} * sol.lambda_star;
      CHECK(sol.L_star <= ws);
      CHECK(ws <= bound);
      CHECK(bound < Rational{2} * sol.L_star);
    } else {
      CHECK(sol.value == 0);
    }
  }
}

TEST_CASE("optimal value is invariant under edge permutation") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = test::random_instance(trial + 555);
    const Solution sol = solve(inst);
    std::vector<Edge> shuffled = inst.edges();
    SplitMix64 rng(trial);
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    for (std::size_t i = 0; i < shuffled.size(); ++i)
      shuffled[i].id = static_cast<EdgeId>(i);
    const InterdictionInstance permuted(inst.vertex_count(),
                                        std::move(shuffled), inst.budget());
    CHECK(solve(permuted).value == sol.value);
  }
}

TEST_CASE("contraction enumeration mode matches exhaustive results") {
  SolveOptions contraction_opts;
  contraction_opts.enumeration = EnumMode::contraction;
  contraction_opts.seed = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = test::random_instance(trial + 90, 7, 6);
    const Solution a = solve(inst);
    const Solution b = solve(inst, contraction_opts);
    CHECK(a.value == b.value);
    CHECK(a.lambda_star == b.lambda_star);
  }
}

TEST_CASE("non-strict threshold stays optimal on the golden triangle") {
  SolveOptions opts;
  opts.strict_threshold = false;
  const Solution sol = solve(t1(), opts);
  CHECK(sol.value == 3);
  CHECK(sol.candidates >= 3);
}

TEST_CASE("fptas knapsack mode keeps feasibility") {
  SolveOptions opts;
  opts.knapsack = KnapsackMode::fptas;
  opts.epsilon = Rational{1, 10};
  const Solution sol = solve(t1(), opts);
  CHECK(sol.value == 3);  // scaling preserves the optimum here
  CHECK(set_cost(t1(), sol.R) <= 2);
  CHECK(sol.knapsack_used == KnapsackMode::fptas);
}
