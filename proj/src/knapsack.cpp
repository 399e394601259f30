#include "interdict/knapsack.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace interdict {

namespace {

constexpr std::int64_t kMaxDpCells = 400'000'000;  // choice-bit budget

std::int64_t total_cost(const std::vector<KnapsackItem>& items) {
  __int128 t = 0;
  for (const KnapsackItem& it : items) t += it.cost;
  if (t > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("knapsack: total cost exceeds int64");
  return static_cast<std::int64_t>(t);
}

std::int64_t total_weight(const std::vector<KnapsackItem>& items) {
  __int128 t = 0;
  for (const KnapsackItem& it : items) t += it.weight;
  if (t > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("knapsack: total weight exceeds int64");
  return static_cast<std::int64_t>(t);
}

void validate(const std::vector<KnapsackItem>& items, std::int64_t budget) {
  if (budget < 0) throw std::invalid_argument("knapsack: negative budget");
  for (const KnapsackItem& it : items) {
    if (it.cost < 1) throw std::invalid_argument("knapsack: cost must be >= 1");
    if (it.weight < 0)
      throw std::invalid_argument("knapsack: negative weight");
  }
}

// Row-major bit matrix of take/skip decisions.
class ChoiceBits {
 public:
  ChoiceBits(std::size_t rows, std::size_t cols)
      : cols_(cols), bits_((rows * cols + 63) / 64, 0) {}
  void set(std::size_t i, std::size_t j) {
    const std::size_t k = i * cols_ + j;
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  bool get(std::size_t i, std::size_t j) const {
    const std::size_t k = i * cols_ + j;
    return (bits_[k >> 6] >> (k & 63)) & 1;
  }

 private:
  std::size_t cols_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

std::vector<KnapsackItem> items_for(const EdgeSet& s,
                                    const std::vector<std::int64_t>& weights,
                                    const std::vector<std::int64_t>& costs) {
  std::vector<KnapsackItem> items;
  items.reserve(s.size());
  for (EdgeId id : s) {
    if (id < 0 || std::size_t(id) >= weights.size())
      throw std::out_of_range("items_for: edge id out of range");
    items.push_back({id, weights[std::size_t(id)], costs[std::size_t(id)]});
  }
  return items;
}

std::vector<KnapsackItem> items_for(const InterdictionInstance& inst,
                                    const EdgeSet& s) {
  return items_for(s, inst.weight_vector(), inst.cost_vector());
}

DeletionResult knapsack_exact(const std::vector<KnapsackItem>& items,
                              std::int64_t budget) {
  validate(items, budget);
  const std::int64_t w_all = total_weight(items);
  DeletionResult result;
  result.exact = true;
  if (items.empty()) {
    result.residual = 0;
    return result;
  }
  const std::int64_t bb = std::min(budget, total_cost(items));
  if (bb == 0) {
    result.residual = w_all;
    return result;
  }
  const std::size_t cols = std::size_t(bb) + 1;
  if (static_cast<std::int64_t>(items.size()) *
          static_cast<std::int64_t>(cols) >
      kMaxDpCells)
    throw std::invalid_argument(
        "knapsack_exact: budget too large for pseudo-polynomial DP");

  std::vector<std::int64_t> dp(cols, 0);
  ChoiceBits choice(items.size(), cols);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::int64_t c = items[i].cost;
    const std::int64_t w = items[i].weight;
    for (std::int64_t j = bb; j >= c; --j) {
      const std::int64_t cand = dp[std::size_t(j - c)] + w;
      if (cand > dp[std::size_t(j)]) {
        dp[std::size_t(j)] = cand;
        choice.set(i, std::size_t(j));
      }
    }
  }

  std::vector<EdgeId> removed;
  std::int64_t j = bb;
  for (std::size_t i = items.size(); i-- > 0;) {
    if (choice.get(i, std::size_t(j))) {
      removed.push_back(items[i].id);
      j -= items[i].cost;
    }
  }
  result.removed = EdgeSet{std::move(removed)};
  result.residual = w_all - dp[std::size_t(bb)];
  return result;
}

DeletionResult knapsack_fptas(const std::vector<KnapsackItem>& items,
                              std::int64_t budget, const Rational& eps) {
  if (!(Rational{0} < eps) || !(eps < Rational{1}))
    throw std::domain_error("knapsack_fptas: eps must be in (0,1)");
  validate(items, budget);
  const std::int64_t w_all = total_weight(items);
  DeletionResult result;
  result.exact = false;
  result.epsilon = eps;
  result.residual = w_all;
  if (items.empty()) {
    result.residual = 0;
    return result;
  }
  const std::int64_t bb = std::min(budget, total_cost(items));

  std::int64_t max_fit_weight = 0;
  for (const KnapsackItem& it : items)
    if (it.cost <= bb) max_fit_weight = std::max(max_fit_weight, it.weight);
  if (max_fit_weight == 0) return result;  // deleting anything gains nothing

  // Scale factor K = eps * P / n; scaled profit of item i is floor(w_i / K).
  const Rational scale =
      eps * Rational{max_fit_weight} / Rational{std::int64_t(items.size())};
  std::vector<std::int64_t> profit(items.size(), 0);
  __int128 profit_sum = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].cost > bb || items[i].weight == 0) continue;
    profit[i] = (Rational{items[i].weight} / scale).floor().to_int64();
    profit_sum += profit[i];
  }
  if (profit_sum > kMaxDpCells / static_cast<std::int64_t>(items.size() + 1))
    throw std::invalid_argument(
        "knapsack_fptas: eps too small for this many items");
  const std::size_t cols = static_cast<std::size_t>(profit_sum) + 1;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> min_cost(cols, kInf);
  min_cost[0] = 0;
  ChoiceBits choice(items.size(), cols);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (profit[i] == 0) continue;
    const std::int64_t p = profit[i];
    const std::int64_t c = items[i].cost;
    for (std::int64_t j = static_cast<std::int64_t>(cols) - 1; j >= p; --j) {
      if (min_cost[std::size_t(j - p)] == kInf) continue;
      const std::int64_t cand = min_cost[std::size_t(j - p)] + c;
      if (cand < min_cost[std::size_t(j)]) {
        min_cost[std::size_t(j)] = cand;
        choice.set(i, std::size_t(j));
      }
    }
  }

  std::int64_t best_p = 0;
  for (std::int64_t j = static_cast<std::int64_t>(cols) - 1; j >= 0; --j) {
    if (min_cost[std::size_t(j)] <= bb) {
      best_p = j;
      break;
    }
  }
  std::vector<EdgeId> removed;
  std::int64_t deleted = 0;
  std::int64_t j = best_p;
  for (std::size_t i = items.size(); i-- > 0;) {
    if (j >= profit[i] && profit[i] > 0 && choice.get(i, std::size_t(j))) {
      removed.push_back(items[i].id);
      deleted += items[i].weight;
      j -= profit[i];
    }
  }
  result.removed = EdgeSet{std::move(removed)};
  result.residual = w_all - deleted;
  return result;
}

}  // namespace interdict
