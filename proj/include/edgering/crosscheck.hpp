#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgering/normality.hpp"
#include "edgering/oracle.hpp"

namespace edgering {

enum class Agreement {
  agree,
  /// Not normal, but every M_Π lies outside the oracle window; each was
  /// confirmed to be in T₁ and not in T₂ within the cap.
  agree_beyond_window,
  disagree,
};

struct CrossCheck {
  NormalityReport report;
  OracleVerdict oracle;
  std::optional<GenerationVerdict> generation;
  std::vector<ExponentVector> beyond_window;
  Agreement agreement = Agreement::agree;
  std::string reason;
};

/// decide vs. oracle_normality, plus verify_generation when the graph is not normal.
CrossCheck crosscheck(const MixedGraph& g, std::int64_t degree_bound, std::int64_t coeff_cap,
                      std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace edgering
