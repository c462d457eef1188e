#include "edgering/cycles.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "edgering/errors.hpp"

namespace edgering {

bool CycleDesc::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int CycleDesc::signature(VertexId v) const {
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k] == v) return signatures.empty() ? 0 : signatures[k];
  return 0;
}

VertexId CycleDesc::min_vertex() const {
  return *std::min_element(vertices.begin(), vertices.end());
}

namespace {

bool joins(const MixedGraph& g, EdgeRef e, VertexId a, VertexId b) {
  auto [u, v] = g.endpoints(e);
  return (u == a && v == b) || (u == b && v == a);
}

}  // namespace

CycleDesc make_cycle(const MixedGraph& g, std::vector<VertexId> vertices,
                     std::vector<EdgeRef> edges) {
  CycleDesc c;
  c.vertices = std::move(vertices);
  c.edges = std::move(edges);
  if (!is_simple_cycle(g, c)) throw StructuralError("edge sequence is not a simple cycle");
  bool all_signed = true;
  for (auto e : c.edges) {
    if (e.kind == EdgeKind::signed_edge)
      ++c.signed_count;
    else
      all_signed = false;
  }
  if (all_signed) {
    const auto len = c.edges.size();
    c.signatures.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
      const int in = value(g.sign(c.edges[(k + len - 1) % len]));
      const int out = value(g.sign(c.edges[k]));
      c.signatures[k] = (in + out) / 2;
    }
  }
  return c;
}

bool is_simple_cycle(const MixedGraph& g, const CycleDesc& c) {
  const auto len = c.edges.size();
  if (len == 0 || c.vertices.size() != len) return false;
  for (auto e : c.edges)
    if (!g.contains(e)) return false;
  auto sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto sorted_edges = c.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
    return false;
  for (std::size_t k = 0; k < len; ++k)
    if (!joins(g, c.edges[k], c.vertices[k], c.vertices[(k + 1) % len])) return false;
  return true;
}

std::map<VertexId, int> signatures(const MixedGraph& g, const CycleDesc& c) {
  for (auto e : c.edges)
    if (e.kind == EdgeKind::directed)
      throw DomainError("signatures are defined on signed cycles; use the augmented cycle");
  auto full = c.has_signatures() ? c : make_cycle(g, c.vertices, c.edges);
  std::map<VertexId, int> out;
  for (std::size_t k = 0; k < full.vertices.size(); ++k) out[full.vertices[k]] = full.signatures[k];
  return out;
}

namespace {

// Backtracking over simple paths starting at the smallest vertex of the
// cycle. A vertex is only entered when the start is still reachable from it
// through unused vertices, so every explored path extends to a cycle.
class CycleEnumerator {
 public:
  CycleEnumerator(const MixedGraph& g, std::size_t cap, bool odd_only)
      : g_(g), cap_(cap), odd_only_(odd_only), on_path_(g.vertex_count(), false) {}

  std::vector<CycleDesc> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      start_ = VertexId{s};
      for (const auto& inc : g_.incident(start_))
        if (inc.other == start_) emit({start_}, {inc.edge});
      path_ = {start_};
      path_edges_.clear();
      on_path_[s] = true;
      extend(start_);
      on_path_[s] = false;
    }
    std::sort(out_.begin(), out_.end(), [this](const CycleDesc& a, const CycleDesc& b) {
      return key(a) < key(b);
    });
    return std::move(out_);
  }

 private:
  using Key = std::tuple<std::vector<VertexId>, std::vector<VertexId>, std::vector<std::size_t>>;

  Key key(const CycleDesc& c) const {
    auto sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> e;
    for (auto r : c.edges) e.push_back(g_.index_of(r));
    return {sorted, c.vertices, e};
  }

  void extend(VertexId u) {
    for (const auto& inc : g_.incident(u)) {
      const auto w = inc.other;
      if (w == u) continue;
      if (!path_edges_.empty() && inc.edge == path_edges_.back()) continue;
      if (w == start_) {
        if (path_edges_.empty()) continue;
        // Each cycle is seen in both orientations; keep one.
        if (path_edges_.size() == 1) {
          if (!(g_.index_of(path_edges_.front()) < g_.index_of(inc.edge))) continue;
        } else if (!(path_[1] < path_.back())) {
          continue;
        }
        auto edges = path_edges_;
        edges.push_back(inc.edge);
        emit(path_, std::move(edges));
        continue;
      }
      if (w < start_ || on_path_[w.index]) continue;
      if (!can_return(w, inc.edge)) continue;
      on_path_[w.index] = true;
      path_.push_back(w);
      path_edges_.push_back(inc.edge);
      extend(w);
      path_edges_.pop_back();
      path_.pop_back();
      on_path_[w.index] = false;
    }
  }

  // Is start_ reachable from w without touching the current path? The edge
  // that enters w cannot close a 2-cycle on its own.
  bool can_return(VertexId w, EdgeRef entering) {
    std::vector<bool> seen(g_.vertex_count(), false);
    std::queue<VertexId> q;
    q.push(w);
    seen[w.index] = true;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (const auto& inc : g_.incident(v)) {
        const auto x = inc.other;
        if (x == start_) {
          if (v == w && inc.edge == entering && path_.size() == 1) continue;
          return true;
        }
        if (x < start_ || seen[x.index] || on_path_[x.index]) continue;
        seen[x.index] = true;
        q.push(x);
      }
    }
    return false;
  }

  void emit(std::vector<VertexId> vertices, std::vector<EdgeRef> edges) {
    std::size_t signed_count = 0;
    for (auto e : edges)
      if (e.kind == EdgeKind::signed_edge) ++signed_count;
    if (odd_only_ && signed_count % 2 == 0) return;
    if (out_.size() >= cap_) throw CapacityError("--cycle-cap", cap_);
    out_.push_back(make_cycle(g_, std::move(vertices), std::move(edges)));
  }

  const MixedGraph& g_;
  std::size_t cap_;
  bool odd_only_;
  VertexId start_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
  std::vector<EdgeRef> path_edges_;
  std::vector<CycleDesc> out_;
};

}  // namespace

std::vector<CycleDesc> enumerate_cycles(const MixedGraph& g, std::size_t cap) {
  return CycleEnumerator(g, cap, false).run();
}

std::vector<CycleDesc> enumerate_odd_cycles(const MixedGraph& g, std::size_t cap) {
  return CycleEnumerator(g, cap, true).run();
}

std::vector<CyclePair> disjoint_odd_pairs(const MixedGraph& g, std::size_t cap) {
  auto cycles = enumerate_odd_cycles(g, cap);
  auto label = component_labels(g);
  std::vector<CyclePair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto& a = cycles[i];
      const auto& b = cycles[j];
      bool disjoint = std::none_of(a.vertices.begin(), a.vertices.end(),
                                   [&](VertexId v) { return b.contains(v); });
      bool same = label[a.vertices.front().index] == label[b.vertices.front().index];
      if (disjoint && same) out.push_back({a, b, same, disjoint});
    }
  }
  return out;
}

CycleDesc to_augmented(const AugmentedGraph& a, const CycleDesc& c) {
  std::vector<VertexId> vertices;
  std::vector<EdgeRef> edges;
  const auto len = c.edges.size();
  for (std::size_t k = 0; k < len; ++k) {
    const auto from = c.vertices[k];
    const auto e = c.edges[k];
    vertices.push_back(from);
    const auto& images = a.edge_map[a.base.index_of(e)];
    if (e.kind == EdgeKind::signed_edge) {
      edges.push_back(images.front());
      continue;
    }
    const auto& d = a.base.directed_edge(e);
    const auto t = a.artificial[e.id];
    if (from == d.tail) {
      edges.push_back(images[0]);  // -[tail, t]
      vertices.push_back(t);
      edges.push_back(images[1]);  // +[t, head]
    } else {
      edges.push_back(images[1]);
      vertices.push_back(t);
      edges.push_back(images[0]);
    }
  }
  return make_cycle(a.signed_graph, std::move(vertices), std::move(edges));
}

CycleDesc from_augmented(const AugmentedGraph& a, const CycleDesc& c) {
  const auto len = c.edges.size();
  // Rotate so that the sequence starts at an original vertex.
  std::size_t start = 0;
  while (start < len && a.is_artificial(c.vertices[start])) ++start;
  if (start == len) throw StructuralError("cycle has no original vertex");
  std::vector<VertexId> vertices;
  std::vector<EdgeRef> edges;
  for (std::size_t step = 0; step < len; ++step) {
    const auto k = (start + step) % len;
    const auto v = c.vertices[k];
    if (a.is_artificial(v)) continue;
    vertices.push_back(v);
    const auto origin = a.origin[c.edges[k].id];
    edges.push_back(origin);
  }
  // Restore the canonical rotation: smallest vertex first.
  auto it = std::min_element(vertices.begin(), vertices.end());
  auto shift = static_cast<std::size_t>(it - vertices.begin());
  std::rotate(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(shift), vertices.end());
  std::rotate(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(shift), edges.end());
  return make_cycle(a.base, std::move(vertices), std::move(edges));
}

}  // namespace edgering
