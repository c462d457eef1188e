#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "edgering/altpath.hpp"
#include "edgering/cycles.hpp"
#include "edgering/exact.hpp"
#include "edgering/model.hpp"
#include "json.hpp"

namespace edgering {

enum class GraphKind { signed_graph, mixed };

/// Two disjoint odd cycles in one component with no (generalized)
/// alternating walk between them. Cycles are expressed in the input graph's
/// own edges.
struct ExceptionalPair {
  CyclePair pair;
  ExponentVector m_pi;
  /// ½ρ(C ∪ C′); always equal to m_pi.
  ExponentVector half_rho_pi;

  friend bool operator==(const ExceptionalPair& a, const ExceptionalPair& b) {
    return a.pair.c1 == b.pair.c1 && a.pair.c2 == b.pair.c2 && a.m_pi == b.m_pi &&
           a.half_rho_pi == b.half_rho_pi;
  }
};

struct NormalityReport {
  bool normal = true;
  std::vector<ExceptionalPair> exceptional_pairs;
  /// Distinct M_Π, in order of first appearance.
  std::vector<ExponentVector> generators;
  std::size_t checked_pairs = 0;
  GraphKind graph_kind = GraphKind::signed_graph;

  friend bool operator==(const NormalityReport&, const NormalityReport&) = default;
};

/// Σ_{ℓ∈C} sig_C(ℓ) e_ℓ + Σ_{ℓ∈C′} sig_C′(ℓ) e_ℓ. Works for mixed cycles
/// through the augmented graph.
ExponentVector pair_monomial(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2);

/// Odd cycle condition on a signed graph. DomainError if g has directed edges.
NormalityReport odd_cycle_condition(const MixedGraph& g, std::size_t cycle_cap = kDefaultCycleCap);

/// Odd cycle condition on the augmented graph, phrased over g.
NormalityReport generalized_odd_cycle_condition(const MixedGraph& g,
                                                std::size_t cycle_cap = kDefaultCycleCap);

/// Dispatches on whether g has directed edges.
NormalityReport decide(const MixedGraph& g, std::size_t cycle_cap = kDefaultCycleCap);

std::vector<ExponentVector> normalization_generators(const MixedGraph& g,
                                                     std::size_t cycle_cap = kDefaultCycleCap);

/// 0/1 weights on C minus `skip` whose ρ-sum is Σ_{ℓ≠skip} sig_C(ℓ) e_ℓ.
/// Consecutive nonzero-signature vertices after `skip` are paired and the
/// cycle segment between them gets weight 1. sig_C(skip) must be nonzero.
IntWeights product_construction(const MixedGraph& g, const CycleDesc& c, VertexId skip);

/// Nonnegative integer weights with ρ-sum M_Π for a connected pair: the walk
/// extended into both cycles up to nonzero-signature vertices, plus the
/// product construction on each cycle. g must be signed.
IntWeights express_pair_product(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2,
                                const AltWalk& w);

/// Certificates that M_Π of an exceptional pair lies in T₁ and that 2·M_Π ∈ T₂.
struct Witness {
  ExceptionalPair pair;
  /// ½ on every edge of C ∪ C′.
  RationalWeights half_weights;
  /// Integer weights, possibly negative, with ρ-sum M_Π.
  IntWeights lattice_weights;
  /// 1 on every edge of C ∪ C′; ρ-sum 2·M_Π.
  IntWeights doubled_weights;

  friend bool operator==(const Witness&, const Witness&) = default;
};

Witness make_witness(const MixedGraph& g, const ExceptionalPair& p);
/// Witness for the first exceptional pair, or none when g is normal.
std::optional<Witness> non_normality_witness(const MixedGraph& g,
                                             std::size_t cycle_cap = kDefaultCycleCap);

/// True when all three certificates re-evaluate to M_Π and 2·M_Π with the
/// right weight domains.
bool check_witness(const MixedGraph& g, const Witness& w);

// ---------------------------------------------------------------- JSON

nlohmann::json cycle_to_json(const MixedGraph& g, const CycleDesc& c);
CycleDesc cycle_from_json(const MixedGraph& g, const nlohmann::json& j);
nlohmann::json walk_to_json(const MixedGraph& g, const AltWalk& w);
nlohmann::json report_to_json(const MixedGraph& g, const NormalityReport& r);
NormalityReport report_from_json(const MixedGraph& g, const nlohmann::json& j);
nlohmann::json witness_to_json(const MixedGraph& g, const Witness& w);
Witness witness_from_json(const MixedGraph& g, const nlohmann::json& j);
nlohmann::json exponents_to_json(const ExponentVector& v);
ExponentVector exponents_from_json(const nlohmann::json& j);

}  // namespace edgering
