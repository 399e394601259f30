#include "interdict/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "interdict/min_cut.hpp"

namespace interdict {

GraphCutFamily::GraphCutFamily(const InterdictionInstance& inst,
                               EnumerationConfig config)
    : inst_(inst), config_(config) {}

int GraphCutFamily::ground_size() const { return inst_.edge_count(); }

FamilyOracle::MinimizeResult GraphCutFamily::minimize(
    const std::vector<Rational>& weights) const {
  CutResult cut = global_min_cut(inst_.vertex_count(), inst_.edges(), weights);
  return {std::move(cut.value), std::move(cut.cut_edges)};
}

FamilyOracle::CostResult GraphCutFamily::min_cost_member(
    const std::vector<std::int64_t>& costs) const {
  std::vector<Rational> caps;
  caps.reserve(costs.size());
  for (std::int64_t c : costs) caps.emplace_back(c);
  CutResult cut = global_min_cut(inst_.vertex_count(), inst_.edges(), caps);
  if (!cut.value.is_integer())
    throw std::logic_error("min_cost_member: non-integer cost sum");
  return {cut.value.num().to_int64(), std::move(cut.cut_edges)};
}

CutFamily GraphCutFamily::enumerate_family(const std::vector<Rational>& weights,
                                           const Rational& threshold,
                                           bool strict,
                                           std::uint64_t seed) const {
  const int n = inst_.vertex_count();
  const bool exhaustive_fits = n <= config_.exhaustive_limit;
  EnumMode mode = config_.mode;
  if (mode == EnumMode::automatic)
    mode = exhaustive_fits ? EnumMode::exhaustive : EnumMode::contraction;
  if (mode == EnumMode::exhaustive) {
    return enumerate_exhaustive(n, inst_.edges(), weights, threshold, strict,
                                config_.exhaustive_limit);
  }
  const CutResult mc = global_min_cut(n, inst_.edges(), weights);
  if (mc.value.is_zero())
    throw std::invalid_argument(
        "enumerate_below: zero min cut; the degenerate case must be handled "
        "before enumeration");
  Rational alpha = threshold / mc.value;
  if (alpha < Rational{1}) alpha = Rational{1};
  return enumerate_contraction(n, inst_.edges(), weights, threshold, strict,
                               alpha, seed, config_.contraction);
}

std::vector<EdgeSet> GraphCutFamily::enumerate_below(
    const std::vector<Rational>& weights, const Rational& threshold,
    bool strict, std::uint64_t seed) const {
  CutFamily family = enumerate_family(weights, threshold, strict, seed);
  std::vector<EdgeSet> members;
  members.reserve(family.cuts.size());
  for (CutResult& cut : family.cuts) members.push_back(std::move(cut.cut_edges));
  return members;
}

ExplicitFamily::ExplicitFamily(int ground_size, std::vector<EdgeSet> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  if (ground_size_ < 0)
    throw std::invalid_argument("ExplicitFamily: negative ground size");
  if (members_.empty())
    throw std::invalid_argument("ExplicitFamily: empty family");
  for (const EdgeSet& s : members_)
    for (EdgeId id : s)
      if (id < 0 || id >= ground_size_)
        throw std::invalid_argument("ExplicitFamily: member id out of range");
  std::vector<EdgeSet> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ExplicitFamily: duplicate members");
}

int ExplicitFamily::ground_size() const { return ground_size_; }

FamilyOracle::MinimizeResult ExplicitFamily::minimize(
    const std::vector<Rational>& weights) const {
  const EdgeSet* best = nullptr;
  Rational best_value;
  for (const EdgeSet& s : members_) {
    Rational v = set_weight(s, weights);
    if (best == nullptr || v < best_value) {
      best = &s;
      best_value = std::move(v);
    }
  }
  return {std::move(best_value), *best};
}

std::vector<EdgeSet> ExplicitFamily::enumerate_below(
    const std::vector<Rational>& weights, const Rational& threshold,
    bool strict, std::uint64_t /*seed*/) const {
  std::vector<EdgeSet> out;
  for (const EdgeSet& s : members_) {
    const Rational v = set_weight(s, weights);
    if (strict ? v < threshold : v <= threshold) out.push_back(s);
  }
  return out;
}

FamilyOracle::CostResult ExplicitFamily::min_cost_member(
    const std::vector<std::int64_t>& costs) const {
  const EdgeSet* best = nullptr;
  std::int64_t best_cost = 0;
  for (const EdgeSet& s : members_) {
    const std::int64_t c = set_cost(s, costs);
    if (best == nullptr || c < best_cost) {
      best = &s;
      best_cost = c;
    }
  }
  return {best_cost, *best};
}

}  // namespace interdict
