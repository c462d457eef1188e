#include "edgering/normality.hpp"

#include <algorithm>
#include <deque>

#include "edgering/augment.hpp"
#include "edgering/errors.hpp"

namespace edgering {

namespace {

std::size_t position(const CycleDesc& c, VertexId v) {
  for (std::size_t k = 0; k < c.vertices.size(); ++k)
    if (c.vertices[k] == v) return k;
  throw PreconditionError("vertex " + std::to_string(v.index + 1) + " is not on the cycle");
}

ExponentVector signature_vector(std::size_t n, const CycleDesc& c1, const CycleDesc& c2) {
  ExponentVector m(n);
  for (const auto* c : {&c1, &c2})
    for (std::size_t k = 0; k < c->vertices.size(); ++k) m[c->vertices[k].index] += c->signatures[k];
  return m;
}

void sort_and_collect(NormalityReport& r) {
  std::stable_sort(r.exceptional_pairs.begin(), r.exceptional_pairs.end(),
                   [](const ExceptionalPair& a, const ExceptionalPair& b) {
                     return std::pair(a.pair.c1.min_vertex(), a.pair.c2.min_vertex()) <
                            std::pair(b.pair.c1.min_vertex(), b.pair.c2.min_vertex());
                   });
  for (const auto& p : r.exceptional_pairs)
    if (std::find(r.generators.begin(), r.generators.end(), p.m_pi) == r.generators.end())
      r.generators.push_back(p.m_pi);
  r.normal = r.exceptional_pairs.empty();
}

// Shortest path (any signs) from `from` to `to`.
std::vector<EdgeRef> shortest_path(const MixedGraph& g, VertexId from, VertexId to) {
  std::vector<std::optional<EdgeRef>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> q{from};
  seen[from.index] = true;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (u == to) break;
    for (const auto& inc : g.incident(u)) {
      if (seen[inc.other.index]) continue;
      seen[inc.other.index] = true;
      via[inc.other.index] = inc.edge;
      q.push_back(inc.other);
    }
  }
  if (!seen[to.index]) throw PreconditionError("vertices lie in different components");
  std::vector<EdgeRef> path;
  for (auto v = to; v != from;) {
    auto e = *via[v.index];
    path.push_back(e);
    auto [a, b] = g.endpoints(e);
    v = a == v ? b : a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Edges followed from `start` into the cycle until a vertex whose signature
// equals the sign the walk has at `start`. Returns the edges (outward order)
// and the final vertex.
std::pair<std::vector<EdgeRef>, VertexId> extend_into(const MixedGraph& g, const CycleDesc& c,
                                                      VertexId start, Sign s) {
  std::vector<EdgeRef> out;
  auto cur = start;
  const auto len = c.length();
  for (std::size_t step = 0; step <= len; ++step) {
    const auto k = position(c, cur);
    const int sig = c.signatures[k];
    if (sig != 0) {
      if (sign_of(sig) != s)
        throw PreconditionError("walk leaves the cycle with the wrong sign at vertex " +
                                std::to_string(cur.index + 1));
      return {out, cur};
    }
    const auto forward = c.edges[k];
    const auto backward = c.edges[(k + len - 1) % len];
    const auto e = g.sign(forward) == opposite(s) ? forward : backward;
    out.push_back(e);
    cur = g.sign(forward) == opposite(s) ? c.vertices[(k + 1) % len] : c.vertices[(k + len - 1) % len];
    s = opposite(s);
  }
  throw InconsistencyError("odd cycle has no vertex of nonzero signature");
}

ExceptionalPair make_pair(CycleDesc c1, CycleDesc c2, ExponentVector m) {
  ExceptionalPair p;
  p.pair = CyclePair{std::move(c1), std::move(c2), true, true};
  p.half_rho_pi = m;
  p.m_pi = std::move(m);
  return p;
}

}  // namespace

ExponentVector pair_monomial(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2) {
  if (!g.has_directed()) {
    auto a = c1.has_signatures() ? c1 : make_cycle(g, c1.vertices, c1.edges);
    auto b = c2.has_signatures() ? c2 : make_cycle(g, c2.vertices, c2.edges);
    return signature_vector(g.vertex_count(), a, b);
  }
  const auto a = augment(g);
  return project_exponents(a, signature_vector(a.signed_graph.vertex_count(), to_augmented(a, c1),
                                               to_augmented(a, c2)));
}

NormalityReport odd_cycle_condition(const MixedGraph& g, std::size_t cycle_cap) {
  if (g.has_directed())
    throw DomainError("odd cycle condition needs a signed graph; use the generalized condition");
  NormalityReport r;
  r.graph_kind = GraphKind::signed_graph;
  const auto pairs = disjoint_odd_pairs(g, cycle_cap);
  r.checked_pairs = pairs.size();
  for (const auto& p : pairs) {
    if (cycles_alternating_connected(g, p.c1, p.c2)) continue;
    r.exceptional_pairs.push_back(
        make_pair(p.c1, p.c2, signature_vector(g.vertex_count(), p.c1, p.c2)));
  }
  sort_and_collect(r);
  return r;
}

NormalityReport generalized_odd_cycle_condition(const MixedGraph& g, std::size_t cycle_cap) {
  if (!g.has_directed()) return odd_cycle_condition(g, cycle_cap);
  const auto a = augment(g);
  const auto n = g.vertex_count();
  NormalityReport r;
  r.graph_kind = GraphKind::mixed;
  const auto pairs = disjoint_odd_pairs(a.signed_graph, cycle_cap);
  r.checked_pairs = pairs.size();
  for (const auto& p : pairs) {
    if (cycles_alternating_connected(a.signed_graph, p.c1, p.c2, n)) continue;
    auto m = project_exponents(a, signature_vector(a.signed_graph.vertex_count(), p.c1, p.c2));
    r.exceptional_pairs.push_back(
        make_pair(from_augmented(a, p.c1), from_augmented(a, p.c2), std::move(m)));
  }
  sort_and_collect(r);
  return r;
}

NormalityReport decide(const MixedGraph& g, std::size_t cycle_cap) {
  return g.has_directed() ? generalized_odd_cycle_condition(g, cycle_cap)
                          : odd_cycle_condition(g, cycle_cap);
}

std::vector<ExponentVector> normalization_generators(const MixedGraph& g, std::size_t cycle_cap) {
  return decide(g, cycle_cap).generators;
}

IntWeights product_construction(const MixedGraph& g, const CycleDesc& c, VertexId skip) {
  if (!c.has_signatures()) throw DomainError("product construction needs a signed cycle");
  const auto len = c.length();
  const auto k0 = position(c, skip);
  if (c.signatures[k0] == 0) throw PreconditionError("skipped vertex has zero signature");
  IntWeights w(g.edge_count(), 0);
  bool open = false;
  for (std::size_t step = 1; step < len; ++step) {
    const auto k = (k0 + step) % len;
    if (c.signatures[k] != 0) open = !open;
    if (open) w[g.index_of(c.edges[k])] += 1;
  }
  if (open) throw InconsistencyError("cycle has an even number of nonzero signatures");
  return w;
}

IntWeights express_pair_product(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2,
                                const AltWalk& w) {
  if (g.has_directed()) throw DomainError("express_pair_product needs a signed graph");
  if (c1 == c2) throw PreconditionError("the two cycles coincide");
  if (!is_alternating_walk(g, w)) throw PreconditionError("walk is not alternating");
  if (!c1.contains(w.vertices.front()) || !c2.contains(w.vertices.back()))
    throw PreconditionError("walk does not run from the first cycle to the second");

  auto [head, i_end] = extend_into(g, c1, w.vertices.front(), w.first_sign);
  auto [tail, j_end] = extend_into(g, c2, w.vertices.back(), w.last_sign);

  IntWeights weights(g.edge_count(), 0);
  for (auto e : head) weights[g.index_of(e)] += 1;
  for (auto e : w.edges) weights[g.index_of(e)] += 1;
  for (auto e : tail) weights[g.index_of(e)] += 1;
  const auto p1 = product_construction(g, c1, i_end);
  const auto p2 = product_construction(g, c2, j_end);
  for (std::size_t k = 0; k < weights.size(); ++k) weights[k] += p1[k] + p2[k];

  if (weighted_rho_sum(g, weights) != signature_vector(g.vertex_count(), c1, c2))
    throw InconsistencyError("pair product weights do not sum to M_Pi");
  return weights;
}

Witness make_witness(const MixedGraph& g, const ExceptionalPair& p) {
  Witness out;
  out.pair = p;
  out.half_weights.assign(g.edge_count(), Rational(0));
  out.doubled_weights.assign(g.edge_count(), 0);
  for (const auto* c : {&p.pair.c1, &p.pair.c2}) {
    for (auto e : c->edges) {
      out.half_weights[g.index_of(e)] = Rational(1, 2);
      out.doubled_weights[g.index_of(e)] = 1;
    }
  }

  // Lattice certificate, built on the signed (possibly augmented) graph.
  const auto a = augment(g);
  const auto& s = a.signed_graph;
  const auto c1 = to_augmented(a, p.pair.c1);
  const auto c2 = to_augmented(a, p.pair.c2);
  auto first_nonzero = [](const CycleDesc& c) {
    for (std::size_t k = 0; k < c.vertices.size(); ++k)
      if (c.signatures[k] != 0) return k;
    throw InconsistencyError("odd cycle has no vertex of nonzero signature");
  };
  const auto ki = first_nonzero(c1);
  const auto kj = first_nonzero(c2);
  const auto i = c1.vertices[ki];
  const auto j = c2.vertices[kj];

  std::vector<EdgeRef> walk;
  auto path = shortest_path(s, i, j);
  const bool same_sign = c1.signatures[ki] == c2.signatures[kj];
  if ((path.size() % 2 == 1) != same_sign) {
    // fix the parity by going once around c1 first
    for (std::size_t step = 0; step < c1.length(); ++step)
      walk.push_back(c1.edges[(ki + step) % c1.length()]);
  }
  walk.insert(walk.end(), path.begin(), path.end());

  IntWeights lw(s.edge_count(), 0);
  int effective = c1.signatures[ki];
  for (auto e : walk) {
    lw[s.index_of(e)] += effective * value(s.sign(e));
    effective = -effective;
  }
  const auto q1 = product_construction(s, c1, i);
  const auto q2 = product_construction(s, c2, j);
  for (std::size_t k = 0; k < lw.size(); ++k) lw[k] += q1[k] + q2[k];
  out.lattice_weights = pull_back_weights(a, lw);

  if (!check_witness(g, out)) throw InconsistencyError("witness certificates do not re-evaluate");
  return out;
}

std::optional<Witness> non_normality_witness(const MixedGraph& g, std::size_t cycle_cap) {
  const auto r = decide(g, cycle_cap);
  if (r.normal) return std::nullopt;
  return make_witness(g, r.exceptional_pairs.front());
}

bool check_witness(const MixedGraph& g, const Witness& w) {
  const auto& m = w.pair.m_pi;
  if (w.half_weights.size() != g.edge_count() || w.lattice_weights.size() != g.edge_count() ||
      w.doubled_weights.size() != g.edge_count())
    return false;
  for (const auto& q : w.half_weights)
    if (q < 0 || q > 1 || Rational(2 * q).get_den() != 1) return false;
  for (auto d : w.doubled_weights)
    if (d < 0) return false;
  if (!equals(weighted_rho_sum(g, w.half_weights), m)) return false;
  if (weighted_rho_sum(g, w.lattice_weights) != m) return false;
  if (weighted_rho_sum(g, w.doubled_weights) != 2 * m) return false;
  return pair_monomial(g, w.pair.pair.c1, w.pair.pair.c2) == m;
}

// ---------------------------------------------------------------- JSON

using nlohmann::json;

json exponents_to_json(const ExponentVector& v) { return json(v.coords()); }

ExponentVector exponents_from_json(const json& j) {
  return ExponentVector(j.get<std::vector<std::int64_t>>());
}

namespace {

json edge_to_json(const MixedGraph& g, EdgeRef e) {
  return {{"index", g.index_of(e)}, {"label", edge_label(g, e)}};
}

EdgeRef edge_from_json(const MixedGraph& g, const json& j) {
  const auto k = j.at("index").get<std::size_t>();
  if (k >= g.edge_count()) throw ParseError(0, "edge index out of range");
  return g.edge_at(k);
}

json pair_to_json(const MixedGraph& g, const ExceptionalPair& p) {
  return {{"c1", cycle_to_json(g, p.pair.c1)},
          {"c2", cycle_to_json(g, p.pair.c2)},
          {"m_pi", exponents_to_json(p.m_pi)},
          {"half_rho_pi", exponents_to_json(p.half_rho_pi)},
          {"monomial", render_monomial(p.m_pi)}};
}

ExceptionalPair pair_from_json(const MixedGraph& g, const json& j) {
  ExceptionalPair p;
  p.pair = CyclePair{cycle_from_json(g, j.at("c1")), cycle_from_json(g, j.at("c2")), true, true};
  p.m_pi = exponents_from_json(j.at("m_pi"));
  p.half_rho_pi = exponents_from_json(j.at("half_rho_pi"));
  return p;
}

template <class T, class F>
json sparse_weights(const MixedGraph& g, const std::vector<T>& w, F encode) {
  json out = json::array();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    out.push_back({{"index", k}, {"label", edge_label(g, g.edge_at(k))}, {"weight", encode(w[k])}});
  }
  return out;
}

template <class T, class F>
std::vector<T> dense_weights(const MixedGraph& g, const json& j, F decode) {
  std::vector<T> out(g.edge_count(), T(0));
  for (const auto& item : j) {
    const auto k = item.at("index").get<std::size_t>();
    if (k >= g.edge_count()) throw ParseError(0, "edge index out of range");
    out[k] = decode(item.at("weight"));
  }
  return out;
}

}  // namespace

json cycle_to_json(const MixedGraph& g, const CycleDesc& c) {
  json vs = json::array();
  for (auto v : c.vertices) vs.push_back(v.index + 1);
  json es = json::array();
  for (auto e : c.edges) es.push_back(edge_to_json(g, e));
  return {{"vertices", vs},
          {"edges", es},
          {"signed_count", c.signed_count},
          {"signatures", c.signatures}};
}

CycleDesc cycle_from_json(const MixedGraph& g, const json& j) {
  std::vector<VertexId> vs;
  for (const auto& v : j.at("vertices")) {
    const auto i = v.get<std::size_t>();
    if (i == 0 || i > g.vertex_count()) throw ParseError(0, "vertex out of range");
    vs.push_back(VertexId{i - 1});
  }
  std::vector<EdgeRef> es;
  for (const auto& e : j.at("edges")) es.push_back(edge_from_json(g, e));
  return make_cycle(g, std::move(vs), std::move(es));
}

json walk_to_json(const MixedGraph& g, const AltWalk& w) {
  json vs = json::array();
  for (auto v : w.vertices) vs.push_back(v.index + 1);
  json es = json::array();
  for (auto e : w.edges) es.push_back(edge_to_json(g, e));
  return {{"vertices", vs},
          {"edges", es},
          {"first_sign", value(w.first_sign)},
          {"last_sign", value(w.last_sign)}};
}

json report_to_json(const MixedGraph& g, const NormalityReport& r) {
  json pairs = json::array();
  for (const auto& p : r.exceptional_pairs) pairs.push_back(pair_to_json(g, p));
  json gens = json::array();
  for (const auto& m : r.generators)
    gens.push_back({{"exponents", exponents_to_json(m)}, {"monomial", render_monomial(m)}});
  return {{"normal", r.normal},
          {"graph_kind", r.graph_kind == GraphKind::mixed ? "mixed" : "signed"},
          {"checked_pairs", r.checked_pairs},
          {"exceptional_pairs", pairs},
          {"generators", gens}};
}

NormalityReport report_from_json(const MixedGraph& g, const json& j) {
  NormalityReport r;
  r.normal = j.at("normal").get<bool>();
  r.graph_kind = j.at("graph_kind").get<std::string>() == "mixed" ? GraphKind::mixed
                                                                   : GraphKind::signed_graph;
  r.checked_pairs = j.at("checked_pairs").get<std::size_t>();
  for (const auto& p : j.at("exceptional_pairs")) r.exceptional_pairs.push_back(pair_from_json(g, p));
  for (const auto& m : j.at("generators")) r.generators.push_back(exponents_from_json(m.at("exponents")));
  return r;
}

json witness_to_json(const MixedGraph& g, const Witness& w) {
  auto q = [](const Rational& x) { return to_string(x); };
  auto z = [](std::int64_t x) { return x; };
  return {{"pair", pair_to_json(g, w.pair)},
          {"half_weights", sparse_weights(g, w.half_weights, q)},
          {"lattice_weights", sparse_weights(g, w.lattice_weights, z)},
          {"doubled_weights", sparse_weights(g, w.doubled_weights, z)}};
}

Witness witness_from_json(const MixedGraph& g, const json& j) {
  Witness w;
  w.pair = pair_from_json(g, j.at("pair"));
  w.half_weights = dense_weights<Rational>(
      g, j.at("half_weights"), [](const json& x) { return parse_rational(x.get<std::string>()); });
  w.lattice_weights = dense_weights<std::int64_t>(
      g, j.at("lattice_weights"), [](const json& x) { return x.get<std::int64_t>(); });
  w.doubled_weights = dense_weights<std::int64_t>(
      g, j.at("doubled_weights"), [](const json& x) { return x.get<std::int64_t>(); });
  return w;
}

}  // namespace edgering
