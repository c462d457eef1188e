#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/model.hpp"

namespace edgering {

/// Signed graph obtained from a mixed graph by replacing every directed edge
/// (i,j) with an artificial vertex t and the two signed edges -[i,t], +[t,j].
///
/// Artificial vertices are numbered n, n+1, ... in (tail, head) order of
/// their directed edges. The signed edges of the base keep their ids; the
/// artificial pairs follow them in the same (tail, head) order.
struct AugmentedGraph {
  MixedGraph base;
  MixedGraph signed_graph;
  /// artificial[k] is the vertex replacing base directed edge k.
  std::vector<VertexId> artificial;
  /// edge_map[flat base index] lists the 1 or 2 corresponding signed_graph edges;
  /// for directed edges the order is {-[i,t], +[t,j]}.
  std::vector<std::vector<EdgeRef>> edge_map;
  /// origin[signed_graph edge id] is the base edge it came from.
  std::vector<EdgeRef> origin;

  std::size_t original_vertex_count() const { return base.vertex_count(); }
  bool is_artificial(VertexId v) const { return v.index >= base.vertex_count(); }
  /// Base directed edge whose artificial vertex is v.
  EdgeRef directed_for(VertexId v) const;
};

AugmentedGraph augment(const MixedGraph& g);

/// Drop the artificial coordinates; InconsistencyError if one of them is nonzero.
ExponentVector project_exponents(const AugmentedGraph& a, const ExponentVector& v);

/// Weights on signed_graph edges -> weights on base edges. Both halves of an
/// artificial pair must agree (InconsistencyError otherwise).
template <class T>
std::vector<T> pull_back_weights(const AugmentedGraph& a, const std::vector<T>& w);

/// Weights on base edges -> weights on signed_graph edges (directed weight copied to both halves).
template <class T>
std::vector<T> push_forward_weights(const AugmentedGraph& a, const std::vector<T>& w);

/// Graph text format with a `# artificial t k = (i,j)` comment per artificial vertex.
std::string render_augmented(const AugmentedGraph& a);

// ---------------------------------------------------------------- templates

template <class T>
std::vector<T> pull_back_weights(const AugmentedGraph& a, const std::vector<T>& w) {
  if (w.size() != a.signed_graph.edge_count())
    throw PreconditionError("weight vector does not match the augmented graph");
  std::vector<T> out(a.base.edge_count());
  for (std::size_t k = 0; k < a.base.edge_count(); ++k) {
    const auto& images = a.edge_map[k];
    const auto& first = w[a.signed_graph.index_of(images.front())];
    for (const auto& img : images) {
      if (!(w[a.signed_graph.index_of(img)] == first))
        throw InconsistencyError("artificial edge pair for " +
                                 edge_label(a.base, a.base.edge_at(k)) +
                                 " carries different weights");
    }
    out[k] = first;
  }
  return out;
}

template <class T>
std::vector<T> push_forward_weights(const AugmentedGraph& a, const std::vector<T>& w) {
  if (w.size() != a.base.edge_count())
    throw PreconditionError("weight vector does not match the base graph");
  std::vector<T> out(a.signed_graph.edge_count());
  for (std::size_t k = 0; k < a.base.edge_count(); ++k)
    for (const auto& img : a.edge_map[k]) out[a.signed_graph.index_of(img)] = w[k];
  return out;
}

}  // namespace edgering
