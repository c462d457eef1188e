#include "edgering/altpath.hpp"

#include <algorithm>
#include <deque>

#include "edgering/errors.hpp"

namespace edgering {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t state_of(VertexId v, Sign last) {
  return v.index * 2 + (last == Sign::positive ? 1 : 0);
}

bool joins(const MixedGraph& g, EdgeRef e, VertexId a, VertexId b) {
  auto [u, v] = g.endpoints(e);
  return (u == a && v == b) || (u == b && v == a);
}

void require_signed(const MixedGraph& g) {
  if (g.has_directed())
    throw DomainError("alternating walks are searched in signed graphs; augment first");
}

void require_pair(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2) {
  if (!is_simple_cycle(g, c1) || !is_simple_cycle(g, c2))
    throw PreconditionError("cycles do not belong to the graph");
  if (!c1.is_odd() || !c2.is_odd()) throw PreconditionError("cycles must be odd");
  for (auto v : c1.vertices)
    if (c2.contains(v)) throw PreconditionError("cycles share a vertex");
  auto label = component_labels(g);
  if (label[c1.vertices.front().index] != label[c2.vertices.front().index])
    throw PreconditionError("cycles lie in different components");
}

}  // namespace

std::optional<AltWalk> alternating_reachable(const MixedGraph& g, std::span<const Endpoint> sources,
                                             std::span<const Endpoint> targets) {
  require_signed(g);
  const auto states = g.vertex_count() * 2;
  std::vector<bool> is_target(states, false);
  for (const auto& t : targets) is_target[state_of(t.vertex, t.sign)] = true;

  struct Parent {
    std::size_t state = kNone;
    EdgeRef edge;
  };
  std::vector<bool> seen(states, false);
  std::vector<Parent> parent(states);
  std::deque<std::size_t> queue;
  for (const auto& s : sources) {
    // "last sign" of an empty walk that must continue with s.sign
    auto st = state_of(s.vertex, opposite(s.sign));
    if (!seen[st]) {
      seen[st] = true;
      queue.push_back(st);
    }
  }

  auto rebuild = [&](std::size_t from, EdgeRef last_edge, std::size_t to) {
    std::vector<EdgeRef> edges{last_edge};
    std::vector<VertexId> vertices{VertexId{to / 2}};
    for (auto st = from;; st = parent[st].state) {
      vertices.push_back(VertexId{st / 2});
      if (parent[st].state == kNone) break;
      edges.push_back(parent[st].edge);
    }
    std::reverse(edges.begin(), edges.end());
    std::reverse(vertices.begin(), vertices.end());
    AltWalk w{std::move(vertices), std::move(edges), Sign::positive, Sign::positive};
    w.first_sign = g.sign(w.edges.front());
    w.last_sign = g.sign(w.edges.back());
    return w;
  };

  while (!queue.empty()) {
    const auto st = queue.front();
    queue.pop_front();
    const VertexId u{st / 2};
    const Sign need = opposite(st % 2 == 1 ? Sign::positive : Sign::negative);
    for (const auto& inc : g.incident(u)) {
      const Sign s = g.sign(inc.edge);
      if (s != need) continue;
      const auto next = state_of(inc.other, s);
      if (is_target[next]) return rebuild(st, inc.edge, next);
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = {st, inc.edge};
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<Endpoint> cycle_endpoints(const CycleDesc& c, std::size_t endpoint_limit) {
  if (!c.has_signatures()) throw DomainError("cycle has no signatures; use the augmented cycle");
  std::vector<Endpoint> out;
  for (std::size_t k = 0; k < c.vertices.size(); ++k) {
    const auto v = c.vertices[k];
    if (v.index >= endpoint_limit) continue;
    const int sig = c.signatures[k];
    if (sig != 0) {
      out.push_back({v, sign_of(sig)});
    } else {
      out.push_back({v, Sign::positive});
      out.push_back({v, Sign::negative});
    }
  }
  return out;
}

std::optional<AltWalk> cycles_alternating_connected(const MixedGraph& g, const CycleDesc& c1,
                                                    const CycleDesc& c2,
                                                    std::optional<std::size_t> endpoint_limit) {
  require_signed(g);
  require_pair(g, c1, c2);
  const auto limit = endpoint_limit.value_or(g.vertex_count());
  const auto sources = cycle_endpoints(c1, limit);
  const auto targets = cycle_endpoints(c2, limit);
  return alternating_reachable(g, sources, targets);
}

AltWalk collapse_walk(const AugmentedGraph& a, const AltWalk& w) {
  AltWalk out;
  out.first_sign = w.first_sign;
  out.last_sign = w.last_sign;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const auto v = w.vertices[k];
    const auto origin = a.origin[w.edges[k].id];
    if (a.is_artificial(v)) {
      // second half of an artificial pair; the directed edge was already emitted
      continue;
    }
    out.vertices.push_back(v);
    out.edges.push_back(origin);
  }
  if (a.is_artificial(w.vertices.front()) || a.is_artificial(w.vertices.back()))
    throw PreconditionError("walk ends at an artificial vertex");
  out.vertices.push_back(w.vertices.back());
  return out;
}

std::optional<AltWalk> generalized_alternating_connected(const MixedGraph& g, const CycleDesc& c1,
                                                         const CycleDesc& c2,
                                                         const AugmentedGraph& a) {
  if (!(a.base == g)) throw PreconditionError("augmented graph was built from another graph");
  require_pair(g, c1, c2);
  const auto t1 = to_augmented(a, c1);
  const auto t2 = to_augmented(a, c2);
  auto w = cycles_alternating_connected(a.signed_graph, t1, t2, g.vertex_count());
  if (!w) return std::nullopt;
  return collapse_walk(a, *w);
}

bool is_alternating_walk(const MixedGraph& g, const AltWalk& w) {
  if (w.edges.empty() || w.vertices.size() != w.edges.size() + 1) return false;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    if (!g.contains(w.edges[k]) || w.edges[k].kind != EdgeKind::signed_edge) return false;
    if (!joins(g, w.edges[k], w.vertices[k], w.vertices[k + 1])) return false;
    if (k > 0 && g.sign(w.edges[k]) == g.sign(w.edges[k - 1])) return false;
  }
  return g.sign(w.edges.front()) == w.first_sign && g.sign(w.edges.back()) == w.last_sign;
}

bool is_generalized_alternating(const MixedGraph& g, const AltWalk& w) {
  if (w.edges.empty() || w.vertices.size() != w.edges.size() + 1) return false;

  enum class Step { plus, minus, forward, backward };
  std::vector<Step> steps;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const auto e = w.edges[k];
    if (!g.contains(e) || !joins(g, e, w.vertices[k], w.vertices[k + 1])) return false;
    if (e.kind == EdgeKind::signed_edge) {
      steps.push_back(g.sign(e) == Sign::positive ? Step::plus : Step::minus);
    } else {
      const auto& d = g.directed_edge(e);
      steps.push_back(d.tail == w.vertices[k] ? Step::forward : Step::backward);
    }
  }
  auto is_signed = [](Step s) { return s == Step::plus || s == Step::minus; };

  // signed subsequence alternates
  std::optional<Step> previous;
  for (auto s : steps) {
    if (!is_signed(s)) continue;
    if (previous && *previous == s) return false;
    previous = s;
  }
  // sign rules next to directed edges
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (is_signed(steps[k])) continue;
    const bool fwd = steps[k] == Step::forward;
    if (k > 0 && is_signed(steps[k - 1]) && steps[k - 1] != (fwd ? Step::plus : Step::minus))
      return false;
    if (k + 1 < steps.size() && is_signed(steps[k + 1]) &&
        steps[k + 1] != (fwd ? Step::minus : Step::plus))
      return false;
  }
  // parity between pairs of directed edges
  for (std::size_t p = 0; p < steps.size(); ++p) {
    if (is_signed(steps[p])) continue;
    std::size_t between = 0;
    for (std::size_t q = p + 1; q < steps.size(); ++q) {
      if (is_signed(steps[q])) {
        ++between;
        continue;
      }
      const bool same = steps[p] == steps[q];
      if (same && between % 2 != 0) return false;
      if (!same && between % 2 != 1) return false;
    }
  }

  auto opening = [](Step s) {
    return s == Step::plus || s == Step::backward ? Sign::positive : Sign::negative;
  };
  auto closing = [](Step s) {
    return s == Step::plus || s == Step::forward ? Sign::positive : Sign::negative;
  };
  return opening(steps.front()) == w.first_sign && closing(steps.back()) == w.last_sign;
}

ExponentVector walk_rho_sum(const MixedGraph& g, const AltWalk& w) {
  ExponentVector sum(g.vertex_count());
  for (auto e : w.edges) sum += rho(g, e);
  return sum;
}

}  // namespace edgering
