#ifndef INTERDICT_FAMILY_HPP
#define INTERDICT_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "interdict/cut_enum.hpp"
#include "interdict/instance.hpp"

namespace interdict {

/// Abstract feasible-set family over a ground set of edge ids. The
/// interdiction engine and the Lagrangian machinery only ever talk to this
/// interface; the graph-cut and explicit-list backends implement it.
class FamilyOracle {
 public:
  virtual ~FamilyOracle() = default;

  struct MinimizeResult {
    Rational value;
    EdgeSet member;
  };
  struct CostResult {
    std::int64_t cost = 0;
    EdgeSet member;
  };

  virtual int ground_size() const = 0;

  /// A member attaining min over the family of the weight sum.
  virtual MinimizeResult minimize(
      const std::vector<Rational>& weights) const = 0;

  /// Every member whose weight passes the threshold test. Randomized
  /// implementations are complete with high probability; every returned
  /// member is exactly verified.
  virtual std::vector<EdgeSet> enumerate_below(
      const std::vector<Rational>& weights, const Rational& threshold,
      bool strict, std::uint64_t seed) const = 0;

  /// A member of minimum total cost under the given integer costs.
  virtual CostResult min_cost_member(
      const std::vector<std::int64_t>& costs) const = 0;
};

enum class EnumMode { automatic, exhaustive, contraction };

struct EnumerationConfig {
  EnumMode mode = EnumMode::automatic;
  int exhaustive_limit = 20;
  ContractionOptions contraction;
};

/// The family of all nontrivial cuts of an undirected multigraph.
/// minimize() is a global min-cut; enumerate_below() runs the exhaustive
/// enumerator for small graphs and randomized contraction otherwise.
class GraphCutFamily : public FamilyOracle {
 public:
  explicit GraphCutFamily(const InterdictionInstance& inst,
                          EnumerationConfig config = {});

  int ground_size() const override;
  MinimizeResult minimize(const std::vector<Rational>& weights) const override;
  std::vector<EdgeSet> enumerate_below(const std::vector<Rational>& weights,
                                       const Rational& threshold, bool strict,
                                       std::uint64_t seed) const override;
  CostResult min_cost_member(
      const std::vector<std::int64_t>& costs) const override;

  /// Full enumeration result with cut metadata (used by the CLI).
  CutFamily enumerate_family(const std::vector<Rational>& weights,
                             const Rational& threshold, bool strict,
                             std::uint64_t seed) const;

 private:
  const InterdictionInstance& inst_;
  EnumerationConfig config_;
};

/// An explicitly listed family of edge sets; every operation is a scan.
class ExplicitFamily : public FamilyOracle {
 public:
  ExplicitFamily(int ground_size, std::vector<EdgeSet> members);

  int ground_size() const override;
  MinimizeResult minimize(const std::vector<Rational>& weights) const override;
  std::vector<EdgeSet> enumerate_below(const std::vector<Rational>& weights,
                                       const Rational& threshold, bool strict,
                                       std::uint64_t seed) const override;
  CostResult min_cost_member(
      const std::vector<std::int64_t>& costs) const override;

  const std::vector<EdgeSet>& members() const { return members_; }

 private:
  int ground_size_;
  std::vector<EdgeSet> members_;
};

}  // namespace interdict

#endif  // INTERDICT_FAMILY_HPP
