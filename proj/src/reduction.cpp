#include "edgering/oracle.hpp"

#include <algorithm>
#include <deque>

#include "edgering/augment.hpp"
#include "edgering/cycles.hpp"

namespace edgering {

// ---------------------------------------------------------------- closed walks

std::vector<std::int64_t> vertex_sums(const MixedGraph& g, const IntWeights& a) {
  if (a.size() != g.edge_count()) throw PreconditionError("weight vector does not match the graph");
  std::vector<std::int64_t> s(g.vertex_count(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto e = g.edge_at(k);
    if (e.kind == EdgeKind::directed) {
      const auto& d = g.directed_edge(e);
      s[d.tail.index] -= a[k];
      s[d.head.index] += a[k];
      continue;
    }
    const auto& se = g.signed_edge(e);
    const auto v = value(se.sign) * a[k];
    s[se.u.index] += v;
    s[se.v.index] += v;
  }
  return s;
}

namespace {

WalkDecomposition decompose_signed(const MixedGraph& g, const IntWeights& a) {
  const auto sums = vertex_sums(g, a);
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i] != 0) throw ConditionViolated(VertexId{i}, sums[i]);

  struct Occurrence {
    EdgeRef edge;
    int weight;
    int product;  // weight * sgn
  };
  std::vector<Occurrence> occ;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto e = g.edge_at(k);
    const int w = a[k] > 0 ? 1 : -1;
    for (std::int64_t c = 0; c < (a[k] < 0 ? -a[k] : a[k]); ++c)
      occ.push_back({e, w, w * value(g.sign(e))});
  }
  // End 2o sits at the first endpoint of occurrence o, end 2o+1 at the second.
  auto vertex_of = [&](std::size_t end) {
    auto [u, v] = g.endpoints(occ[end / 2].edge);
    return end % 2 == 0 ? u : v;
  };
  std::vector<std::vector<std::size_t>> plus(g.vertex_count()), minus(g.vertex_count());
  for (std::size_t end = 0; end < 2 * occ.size(); ++end)
    (occ[end / 2].product > 0 ? plus : minus)[vertex_of(end).index].push_back(end);
  std::vector<std::size_t> match(2 * occ.size());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (plus[i].size() != minus[i].size())
      throw InconsistencyError("unbalanced edge ends at vertex " + std::to_string(i + 1));
    for (std::size_t k = 0; k < plus[i].size(); ++k) {
      match[plus[i][k]] = minus[i][k];
      match[minus[i][k]] = plus[i][k];
    }
  }

  WalkDecomposition d;
  d.graph = g;
  std::vector<bool> used(occ.size(), false);
  for (std::size_t start = 0; start < occ.size(); ++start) {
    if (used[start]) continue;
    ClosedWalk w;
    std::size_t end = 2 * start;  // we leave through this end's occurrence
    for (;;) {
      const auto o = end / 2;
      used[o] = true;
      w.vertices.push_back(vertex_of(end));
      w.edges.push_back(occ[o].edge);
      w.weights.push_back(occ[o].weight);
      const auto next = match[end ^ 1];
      if (next == 2 * start) break;
      end = next;
    }
    d.walks.push_back(std::move(w));
  }
  return d;
}

}  // namespace

WalkDecomposition verify_identity_weights(const MixedGraph& g, const IntWeights& a) {
  if (a.size() != g.edge_count()) throw PreconditionError("weight vector does not match the graph");
  WalkDecomposition d;
  if (g.has_directed()) {
    const auto sums = vertex_sums(g, a);
    for (std::size_t i = 0; i < sums.size(); ++i)
      if (sums[i] != 0) throw ConditionViolated(VertexId{i}, sums[i]);
    const auto aug = augment(g);
    d = decompose_signed(aug.signed_graph, push_forward_weights(aug, a));
  } else {
    d = decompose_signed(g, a);
  }
  for (const auto& w : d.walks)
    if (!is_alternating_closed_walk(d.graph, w))
      throw InconsistencyError("decomposition produced a non-alternating walk");
  if (recombine(d) != (g.has_directed() ? push_forward_weights(augment(g), a) : a))
    throw InconsistencyError("decomposition does not reproduce the weights");
  if (!weighted_rho_sum(g, a).is_zero())
    throw InconsistencyError("zero vertex sums but nonzero weighted sum");
  return d;
}

IntWeights recombine(const WalkDecomposition& d) {
  IntWeights out(d.graph.edge_count(), 0);
  for (const auto& w : d.walks)
    for (std::size_t k = 0; k < w.edges.size(); ++k) out[d.graph.index_of(w.edges[k])] += w.weights[k];
  return out;
}

bool is_alternating_closed_walk(const MixedGraph& g, const ClosedWalk& w) {
  const auto len = w.edges.size();
  if (len == 0 || w.vertices.size() != len || w.weights.size() != len) return false;
  for (std::size_t k = 0; k < len; ++k) {
    const auto e = w.edges[k];
    if (!g.contains(e) || e.kind != EdgeKind::signed_edge) return false;
    if (w.weights[k] != 1 && w.weights[k] != -1) return false;
    auto [u, v] = g.endpoints(e);
    const auto a = w.vertices[k];
    const auto b = w.vertices[(k + 1) % len];
    if (!((u == a && v == b) || (u == b && v == a))) return false;
    const auto next = (k + 1) % len;
    if (w.weights[k] * value(g.sign(e)) == w.weights[next] * value(g.sign(w.edges[next])))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------- reduction

MixedGraph support_graph(const MixedGraph& g, const RationalWeights& w, std::vector<EdgeRef>* kept) {
  if (w.size() != g.edge_count()) throw PreconditionError("weight vector does not match the graph");
  std::vector<SignedEdge> s;
  std::vector<DirectedEdge> d;
  if (kept) kept->clear();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    const auto e = g.edge_at(k);
    if (e.kind == EdgeKind::signed_edge)
      s.push_back(g.signed_edge(e));
    else
      d.push_back(g.directed_edge(e));
    if (kept) kept->push_back(e);
  }
  return MixedGraph(g.vertex_count(), std::move(s), std::move(d));
}

bool is_forest_or_odd_unicyclic(const MixedGraph& g) {
  const auto label = component_labels(g);
  const auto comps = components(g);
  std::vector<std::size_t> edges(comps.size(), 0);
  for (auto e : g.edges()) ++edges[label[g.endpoints(e).first.index]];
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (edges[c] > comps[c].size()) return false;
  for (const auto& c : enumerate_cycles(g))
    if (!c.is_odd()) return false;
  return true;
}

namespace {

std::vector<EdgeRef> around(const CycleDesc& c, VertexId from) {
  const auto len = c.length();
  std::size_t k0 = 0;
  while (c.vertices[k0] != from) ++k0;
  std::vector<EdgeRef> out;
  for (std::size_t s = 0; s < len; ++s) out.push_back(c.edges[(k0 + s) % len]);
  return out;
}

// Shortest path from the vertex set of `a` to that of `b`; interior avoids both.
std::optional<std::vector<EdgeRef>> bridge(const MixedGraph& h, const CycleDesc& a,
                                           const CycleDesc& b, VertexId& from, VertexId& to) {
  std::vector<std::optional<EdgeRef>> via(h.vertex_count());
  std::vector<bool> seen(h.vertex_count(), false);
  std::deque<VertexId> q;
  for (auto v : a.vertices) {
    seen[v.index] = true;
    q.push_back(v);
  }
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (b.contains(u)) {
      to = u;
      std::vector<EdgeRef> path;
      for (auto v = u; !a.contains(v);) {
        auto e = *via[v.index];
        path.push_back(e);
        auto [x, y] = h.endpoints(e);
        v = x == v ? y : x;
        from = v;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& inc : h.incident(u)) {
      if (seen[inc.other.index]) continue;
      seen[inc.other.index] = true;
      via[inc.other.index] = inc.edge;
      q.push_back(inc.other);
    }
  }
  return std::nullopt;
}

// A reducing closed walk of h as an edge sequence, searched in the order:
// even cycle, two odd cycles with a common vertex, two odd cycles joined by a path.
std::optional<std::vector<EdgeRef>> reducing_walk(const MixedGraph& h) {
  const auto cycles = enumerate_cycles(h);
  for (const auto& c : cycles)
    if (!c.is_odd()) return c.edges;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& a = cycles[i];
      const auto& b = cycles[j];
      for (auto v : a.vertices) {
        if (!b.contains(v)) continue;
        // Without even cycles two odd cycles meet in exactly one vertex.
        auto w = around(a, v);
        auto rest = around(b, v);
        w.insert(w.end(), rest.begin(), rest.end());
        return w;
      }
    }
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      VertexId from, to;
      auto p = bridge(h, cycles[i], cycles[j], from, to);
      if (!p) continue;
      auto w = around(cycles[i], from);
      w.insert(w.end(), p->begin(), p->end());
      auto back = around(cycles[j], to);
      w.insert(w.end(), back.begin(), back.end());
      w.insert(w.end(), p->rbegin(), p->rend());
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

Reduction reduce_to_forest_unicyclic(const MixedGraph& g, const RationalWeights& a) {
  if (g.has_directed()) throw DomainError("reduction is defined for signed graphs");
  if (a.size() != g.edge_count()) throw PreconditionError("weight vector does not match the graph");
  for (const auto& x : a)
    if (x <= 0) throw PreconditionError("reduction needs strictly positive weights");

  const auto target = weighted_rho_sum(g, a);
  Reduction r;
  r.weights = a;
  for (;;) {
    std::vector<EdgeRef> kept;
    const auto h = support_graph(g, r.weights, &kept);
    const auto walk = reducing_walk(h);
    if (!walk) break;

    // c_e = sgn(e) Σ (-1)^position over the occurrences of e.
    std::vector<Rational> c(g.edge_count(), Rational(0));
    for (std::size_t k = 0; k < walk->size(); ++k) {
      const auto e = (*walk)[k];
      const auto orig = g.index_of(kept[h.index_of(e)]);
      c[orig] += (k % 2 == 0 ? 1 : -1) * value(h.sign(e));
    }
    if (std::none_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; }))
      for (auto& x : c) x = -x;

    // Smallest a_e / |c_e| over c_e < 0; ties go to the lowest edge index.
    std::optional<Rational> t;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= 0) continue;
      Rational ratio = r.weights[k] / -c[k];
      if (!t || ratio < *t) t = ratio;
    }
    if (!t) throw InconsistencyError("reducing walk has all-zero weights");
    for (std::size_t k = 0; k < c.size(); ++k) {
      r.weights[k] += *t * c[k];
      if (r.weights[k] < 0) throw InconsistencyError("reduction produced a negative weight");
    }
    ++r.steps;
    if (weighted_rho_sum(g, r.weights) != target)
      throw InconsistencyError("reduction changed the weighted sum");
  }
  return r;
}

}  // namespace edgering
