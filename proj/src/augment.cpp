#include "edgering/augment.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace edgering {

EdgeRef AugmentedGraph::directed_for(VertexId v) const {
  if (!is_artificial(v) || v.index >= signed_graph.vertex_count())
    throw StructuralError("vertex is not artificial");
  for (std::size_t k = 0; k < artificial.size(); ++k)
    if (artificial[k] == v) return {EdgeKind::directed, k};
  throw StructuralError("vertex is not artificial");
}

AugmentedGraph augment(const MixedGraph& g) {
  const auto n = g.vertex_count();
  const auto directed = g.directed_edges();

  std::vector<std::size_t> order(directed.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return directed[a] < directed[b]; });

  AugmentedGraph a;
  a.base = g;
  a.artificial.resize(directed.size());
  a.edge_map.resize(g.edge_count());

  std::vector<SignedEdge> edges(g.signed_edges().begin(), g.signed_edges().end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    a.edge_map[k] = {EdgeRef{EdgeKind::signed_edge, k}};
    a.origin.push_back(EdgeRef{EdgeKind::signed_edge, k});
  }
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto k = order[rank];
    const auto& d = directed[k];
    VertexId t{n + rank};
    a.artificial[k] = t;
    EdgeRef ref{EdgeKind::directed, k};
    auto& images = a.edge_map[g.index_of(ref)];
    images.push_back({EdgeKind::signed_edge, edges.size()});
    edges.push_back({d.tail, t, Sign::negative});
    images.push_back({EdgeKind::signed_edge, edges.size()});
    edges.push_back({t, d.head, Sign::positive});
    a.origin.push_back(ref);
    a.origin.push_back(ref);
  }
  a.signed_graph = MixedGraph(n + directed.size(), std::move(edges));
  return a;
}

ExponentVector project_exponents(const AugmentedGraph& a, const ExponentVector& v) {
  const auto n = a.base.vertex_count();
  if (v.size() != a.signed_graph.vertex_count())
    throw PreconditionError("exponent vector does not match the augmented graph");
  for (std::size_t i = n; i < v.size(); ++i)
    if (v[i] != 0)
      throw InconsistencyError("artificial coordinate t" + std::to_string(i + 1) +
                               " is nonzero; not in the subring");
  return ExponentVector(std::vector<std::int64_t>(v.coords().begin(), v.coords().begin() + n));
}

std::string render_augmented(const AugmentedGraph& a) {
  std::ostringstream out;
  out << render_graph(a.signed_graph);
  for (std::size_t k = 0; k < a.artificial.size(); ++k) {
    const auto& d = a.base.directed_edges()[k];
    out << "# artificial t " << a.artificial[k].index + 1 << " = (" << d.tail.index + 1 << ','
        << d.head.index + 1 << ")\n";
  }
  return out.str();
}

}  // namespace edgering
