#ifndef INTERDICT_KNAPSACK_HPP
#define INTERDICT_KNAPSACK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "interdict/instance.hpp"
#include "interdict/rational.hpp"

namespace interdict {

struct KnapsackItem {
  EdgeId id = 0;
  std::int64_t weight = 0;  // objective weight gained by deleting the item
  std::int64_t cost = 1;    // interdiction cost, >= 1
};

/// Outcome of the per-candidate deletion problem g_b(S): the removed set R,
/// the residual w(S \ R), and whether the value is exact or FPTAS-bounded.
struct DeletionResult {
  EdgeSet removed;
  std::int64_t residual = 0;
  bool exact = true;
  std::optional<Rational> epsilon;
};

/// Exact 0/1 knapsack by dynamic programming over the cost budget
/// (maximizing deleted weight); budget is clamped to the total item cost.
DeletionResult knapsack_exact(const std::vector<KnapsackItem>& items,
                              std::int64_t budget);

/// Classical weight-scaling FPTAS: the deleted weight is at least
/// (1 - eps) times the maximum deletable weight; feasibility is exact.
/// Throws std::domain_error unless 0 < eps < 1.
DeletionResult knapsack_fptas(const std::vector<KnapsackItem>& items,
                              std::int64_t budget, const Rational& eps);

/// Items of an instance restricted to S, in id order.
std::vector<KnapsackItem> items_for(const InterdictionInstance& inst,
                                    const EdgeSet& s);
std::vector<KnapsackItem> items_for(const EdgeSet& s,
                                    const std::vector<std::int64_t>& weights,
                                    const std::vector<std::int64_t>& costs);

}  // namespace interdict

#endif  // INTERDICT_KNAPSACK_HPP
