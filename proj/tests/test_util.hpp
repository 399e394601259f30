#ifndef INTERDICT_TEST_UTIL_HPP
#define INTERDICT_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "interdict/generator.hpp"
#include "interdict/instance.hpp"
#include "interdict/knapsack.hpp"
#include "interdict/rng.hpp"

namespace interdict::test {

// Golden triangle: edges (1,2) w=4 c=2, (2,3) w=3 c=1, (1,3) w=5 c=3 with
// budget 2. Ids 0,1,2 in that order; vertices stored 0-based.
inline InterdictionInstance t1(std::int64_t budget = 2) {
  std::vector<Edge> edges = {
      {0, 0, 1, 4, 2},
      {1, 1, 2, 3, 1},
      {2, 0, 2, 5, 3},
  };
  return InterdictionInstance(3, std::move(edges), budget);
}

inline InterdictionInstance unit_triangle(std::int64_t budget) {
  std::vector<Edge> edges = {
      {0, 0, 1, 1, 1},
      {1, 1, 2, 1, 1},
      {2, 0, 2, 1, 1},
  };
  return InterdictionInstance(3, std::move(edges), budget);
}

// Minimum crossing capacity over all 2^(n-1)-1 bipartitions; independent of
// the production min-cut path.
inline Rational brute_min_cut_value(int n, const std::vector<Edge>& edges,
                                    const std::vector<Rational>& caps) {
  bool have = false;
  Rational best;
  const std::uint32_t end = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    Rational sum;
    for (const Edge& e : edges) {
      const bool su = e.u != 0 && ((mask >> (e.u - 1)) & 1u);
      const bool sv = e.v != 0 && ((mask >> (e.v - 1)) & 1u);
      if (su != sv) sum += caps[std::size_t(e.id)];
    }
    if (!have || sum < best) {
      have = true;
      best = sum;
    }
  }
  return best;
}

// Best residual over all subsets; the knapsack reference.
inline std::int64_t brute_knapsack_residual(
    const std::vector<KnapsackItem>& items, std::int64_t budget) {
  std::int64_t total = 0;
  for (const auto& it : items) total += it.weight;
  std::int64_t best = total;
  const std::uint32_t end = std::uint32_t{1} << items.size();
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    std::int64_t cost = 0, deleted = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1u) {
        cost += items[i].cost;
        deleted += items[i].weight;
      }
    }
    if (cost <= budget && total - deleted < best) best = total - deleted;
  }
  return best;
}

inline InterdictionInstance random_instance(std::uint64_t seed, int nmax = 7,
                                            std::int64_t bmax = 15) {
  SplitMix64 rng(SplitMix64::scramble(seed * 0x9e3779b97f4a7c15ull + 17));
  GenParams p;
  p.n = 3 + static_cast<int>(rng.below(std::uint64_t(nmax - 2)));
  const int mmax = std::min(12, 2 * p.n);
  p.m = (p.n - 1) +
        static_cast<int>(rng.below(std::uint64_t(mmax - (p.n - 1) + 1)));
  p.wmax = 10;
  p.cmax = 10;
  p.bmax = bmax;
  p.seed = rng.next();
  return generate_instance(p);
}

}  // namespace interdict::test

#endif  // INTERDICT_TEST_UTIL_HPP
