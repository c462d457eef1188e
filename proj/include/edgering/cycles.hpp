#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "edgering/augment.hpp"
#include "edgering/model.hpp"

namespace edgering {

inline constexpr std::size_t kDefaultCycleCap = 100000;

/// A simple closed walk. edges[k] joins vertices[k] and vertices[(k+1) % len];
/// a loop is a cycle of length 1.
struct CycleDesc {
  std::vector<VertexId> vertices;
  std::vector<EdgeRef> edges;
  std::size_t signed_count = 0;
  /// Parallel to `vertices`; empty when the cycle uses a directed edge.
  std::vector<int> signatures;

  std::size_t length() const { return edges.size(); }
  bool is_odd() const { return signed_count % 2 == 1; }
  bool has_signatures() const { return !signatures.empty(); }
  bool contains(VertexId v) const;
  /// 0 for vertices off the cycle.
  int signature(VertexId v) const;
  VertexId min_vertex() const;

  friend bool operator==(const CycleDesc&, const CycleDesc&) = default;
};

struct CyclePair {
  CycleDesc c1;
  CycleDesc c2;
  bool same_component = false;
  bool vertex_disjoint = false;
};

/// Builds a CycleDesc (with signatures when every edge is signed).
/// Throws StructuralError unless the edges close up a simple cycle through `vertices`.
CycleDesc make_cycle(const MixedGraph& g, std::vector<VertexId> vertices,
                     std::vector<EdgeRef> edges);

/// Re-walks the edge sequence and checks simplicity and closure.
bool is_simple_cycle(const MixedGraph& g, const CycleDesc& c);

/// sig_C(u) = (sgn(e_in) + sgn(e_out)) / 2; a loop vertex gets the loop's sign.
/// DomainError when the cycle contains a directed edge.
std::map<VertexId, int> signatures(const MixedGraph& g, const CycleDesc& c);

/// All simple cycles of the underlying undirected multigraph (directed edges
/// are traversable both ways). Ordered by sorted vertex set, then by the
/// rotation-canonical vertex sequence, then by edge indices.
/// CapacityError("--cycle-cap") when more than `cap` cycles would be emitted.
std::vector<CycleDesc> enumerate_cycles(const MixedGraph& g, std::size_t cap = kDefaultCycleCap);

/// Cycles with an odd number of signed edges (loops included).
std::vector<CycleDesc> enumerate_odd_cycles(const MixedGraph& g,
                                            std::size_t cap = kDefaultCycleCap);

/// Unordered pairs of vertex-disjoint odd cycles lying in one component.
std::vector<CyclePair> disjoint_odd_pairs(const MixedGraph& g,
                                          std::size_t cap = kDefaultCycleCap);

/// The image in the augmented graph of a cycle of the base graph.
CycleDesc to_augmented(const AugmentedGraph& a, const CycleDesc& base_cycle);
/// Collapses artificial detours back to directed edges.
CycleDesc from_augmented(const AugmentedGraph& a, const CycleDesc& augmented_cycle);

}  // namespace edgering
