#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "edgering/augment.hpp"
#include "edgering/cycles.hpp"
#include "edgering/model.hpp"

namespace edgering {

/// A walk whose consecutive signed edges alternate in sign. Vertices and
/// edges may repeat. vertices.size() == edges.size() + 1.
///
/// first_sign / last_sign are the signs of the first and last step. A
/// directed edge (i,j) acts like -[i,t] +[t,j]: traversed forward it starts
/// with - and ends with +, traversed backward the other way round.
struct AltWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeRef> edges;
  Sign first_sign = Sign::positive;
  Sign last_sign = Sign::positive;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const AltWalk&, const AltWalk&) = default;
};

/// A vertex together with the sign required of the walk's first (for a
/// source) or last (for a target) edge.
struct Endpoint {
  VertexId vertex;
  Sign sign;
};

/// Shortest alternating walk of length >= 1 from some source to some target,
/// by BFS over (vertex, sign of last edge) states. `g` must be signed.
std::optional<AltWalk> alternating_reachable(const MixedGraph& g, std::span<const Endpoint> sources,
                                             std::span<const Endpoint> targets);

/// Attachment points of an odd cycle: nonzero-signature vertices with their
/// signature as sign, zero-signature vertices with both signs. Vertices with
/// index >= endpoint_limit are skipped.
std::vector<Endpoint> cycle_endpoints(const CycleDesc& c, std::size_t endpoint_limit);

/// Alternating walk from c1 to c2 in a signed graph, or none when the pair is
/// exceptional. Endpoints are restricted to vertices below `endpoint_limit`
/// (pass the original vertex count when `g` is an augmented graph).
/// PreconditionError unless c1, c2 are vertex-disjoint odd cycles in one component.
std::optional<AltWalk> cycles_alternating_connected(const MixedGraph& g, const CycleDesc& c1,
                                                    const CycleDesc& c2,
                                                    std::optional<std::size_t> endpoint_limit = {});

/// Generalized alternating walk between two odd cycles of a mixed graph,
/// computed in the augmented graph and translated back to `g`'s edges.
std::optional<AltWalk> generalized_alternating_connected(const MixedGraph& g, const CycleDesc& c1,
                                                         const CycleDesc& c2,
                                                         const AugmentedGraph& a);

/// Walk in the augmented graph -> walk in the base graph.
AltWalk collapse_walk(const AugmentedGraph& a, const AltWalk& augmented_walk);

/// True when `w` is a walk of signed graph `g` with alternating signs and
/// matching first/last signs.
bool is_alternating_walk(const MixedGraph& g, const AltWalk& w);

/// Direct check of the generalized alternating path rules on a mixed-graph walk:
///  - the signed edges, read in order with directed edges deleted, alternate;
///  - a directed edge traversed forward is preceded by a + edge and followed by a - edge;
///  - a directed edge traversed backward is preceded by a - edge and followed by a + edge;
///  - two directed edges in opposite directions have an odd number of signed edges between them;
///  - two directed edges in the same direction have an even number between them.
bool is_generalized_alternating(const MixedGraph& g, const AltWalk& w);

/// Sum of rho over the walk's edges (with multiplicity).
ExponentVector walk_rho_sum(const MixedGraph& g, const AltWalk& w);

}  // namespace edgering
