#ifndef INTERDICT_ENGINE_HPP
#define INTERDICT_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "interdict/family.hpp"
#include "interdict/instance.hpp"
#include "interdict/knapsack.hpp"
#include "interdict/lagrangian.hpp"

namespace interdict {

enum class KnapsackMode { exact, fptas };

struct SolveOptions {
  EnumMode enumeration = EnumMode::automatic;
  int exhaustive_limit = 20;
  bool strict_threshold = true;  // non-strict is a non-canonical experiment
  KnapsackMode knapsack = KnapsackMode::exact;
  Rational epsilon{1, 10};  // fptas only
  std::uint64_t seed = 0;
  double delta = 0;  // contraction failure probability; <= 0 means 1/n
  std::int64_t repetition_budget = 1'000'000;
  int threads = 1;
};

/// Internal assertion failure: a certified property of the pipeline did not
/// hold. Carries the lambda certificate when one was computed.
class InternalError : public std::runtime_error {
 public:
  InternalError(const std::string& what,
                std::optional<LambdaCertificate> cert = std::nullopt)
      : std::runtime_error(what), certificate(std::move(cert)) {}
  std::optional<LambdaCertificate> certificate;
};

struct Solution {
  std::int64_t value = 0;
  EdgeSet S;
  EdgeSet R;
  Rational lambda_star{0};
  Rational L_star{0};
  Rational Lambda{0};
  std::int64_t candidates = 0;
  bool degenerate = false;

  EnumMode enumeration_used = EnumMode::exhaustive;
  KnapsackMode knapsack_used = KnapsackMode::exact;
  std::uint64_t seed = 0;
  std::optional<LambdaCertificate> certificate;  // absent when degenerate
};

/// Solves the budget-constrained interdiction problem over the family of
/// nontrivial cuts of the instance graph: degenerate-case detection, the
/// lambda* certificate, enumeration of every cut with truncated weight
/// strictly below 2 L*, one knapsack per candidate, and selection of the
/// best witness pair. Exact when enumeration is exhaustive, exact with
/// probability >= 1 - delta under contraction.
Solution solve(const InterdictionInstance& inst, const SolveOptions& options = {});

/// Same template over an explicitly listed family.
Solution solve_explicit(const ExplicitFamily& family,
                        const std::vector<std::int64_t>& weights,
                        const std::vector<std::int64_t>& costs,
                        std::int64_t budget, const SolveOptions& options = {});

const char* to_string(EnumMode mode);
const char* to_string(KnapsackMode mode);

}  // namespace interdict

#endif  // INTERDICT_ENGINE_HPP
