#ifndef INTERDICT_GENERATOR_HPP
#define INTERDICT_GENERATOR_HPP

#include <cstdint>

#include "interdict/instance.hpp"

namespace interdict {

struct GenParams {
  int n = 6;
  int m = 10;               // must be >= n - 1
  std::int64_t wmax = 10;   // weights uniform in [0, wmax]
  std::int64_t cmax = 10;   // costs uniform in [1, cmax]
  std::int64_t bmax = 15;   // budget uniform in [0, bmax]
  std::uint64_t seed = 0;
};

/// Deterministic connected random multigraph: a random attachment spanning
/// tree plus m-(n-1) extra edges. Identical params yield identical
/// instances on every platform.
InterdictionInstance generate_instance(const GenParams& params);

}  // namespace interdict

#endif  // INTERDICT_GENERATOR_HPP
