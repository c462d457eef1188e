#include <random>
#include <set>

#include "doctest.h"
#include "edgering/altpath.hpp"
#include "edgering/errors.hpp"
#include "edgering/generate.hpp"
#include "support.hpp"

using namespace edgering;
using namespace edgering::testing;

namespace {

// Length of the shortest alternating walk by layered reachability, or 0.
std::size_t shortest_by_layers(const MixedGraph& g, const std::vector<Endpoint>& sources,
                               const std::vector<Endpoint>& targets) {
  std::set<std::pair<std::size_t, int>> layer, want;
  for (const auto& t : targets) want.insert({t.vertex.index, value(t.sign)});
  for (const auto& s : sources)
    for (const auto& inc : g.incident(s.vertex))
      if (g.sign(inc.edge) == s.sign) layer.insert({inc.other.index, value(s.sign)});
  for (std::size_t len = 1; len <= 2 * g.vertex_count() + 1; ++len) {
    for (const auto& st : layer)
      if (want.count(st)) return len;
    std::set<std::pair<std::size_t, int>> next;
    for (auto [u, s] : layer)
      for (const auto& inc : g.incident(VertexId{u}))
        if (value(g.sign(inc.edge)) == -s) next.insert({inc.other.index, -s});
    layer = std::move(next);
  }
  return 0;
}

// Does some simple path with alternating signs join a vertex of c1 to one of c2?
bool simple_alternating_path(const MixedGraph& g, const CycleDesc& c1, const CycleDesc& c2) {
  std::vector<bool> on(g.vertex_count(), false);
  std::function<bool(VertexId, int)> dfs = [&](VertexId u, int last) {
    for (const auto& inc : g.incident(u)) {
      const int s = value(g.sign(inc.edge));
      if (s == last || on[inc.other.index]) continue;
      if (c2.contains(inc.other)) return true;
      on[inc.other.index] = true;
      const bool hit = dfs(inc.other, s);
      on[inc.other.index] = false;
      if (hit) return true;
    }
    return false;
  };
  for (auto start : c1.vertices) {
    on[start.index] = true;
    const bool hit = dfs(start, 0);
    on[start.index] = false;
    if (hit) return true;
  }
  return false;
}

// The walk in the augmented graph that a mixed-graph walk stands for.
AltWalk expand(const AugmentedGraph& a, const AltWalk& w) {
  AltWalk out;
  out.vertices.push_back(w.vertices.front());
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const auto e = w.edges[k];
    const auto& images = a.edge_map[a.base.index_of(e)];
    if (e.kind == EdgeKind::signed_edge) {
      out.edges.push_back(images[0]);
    } else {
      const auto t = a.artificial[e.id];
      const bool forward = a.base.directed_edge(e).tail == w.vertices[k];
      out.edges.push_back(forward ? images[0] : images[1]);
      out.vertices.push_back(t);
      out.edges.push_back(forward ? images[1] : images[0]);
    }
    out.vertices.push_back(w.vertices[k + 1]);
  }
  out.first_sign = a.signed_graph.sign(out.edges.front());
  out.last_sign = a.signed_graph.sign(out.edges.back());
  return out;
}

}  // namespace

TEST_CASE("Figure 1 endpoints") {
  const std::vector<Endpoint> from{{v(1), Sign::positive}}, to{{v(3), Sign::negative}};
  const auto h = alternating_reachable(figure1_h(), from, to);
  REQUIRE(h);
  CHECK(h->edges == std::vector<EdgeRef>{signed_ref(1), signed_ref(2)});
  CHECK(h->vertices == std::vector<VertexId>{v(1), v(2), v(3)});
  CHECK_FALSE(alternating_reachable(figure1_g(), from, to));
}

TEST_CASE("a single edge is alternating") {
  const std::vector<Endpoint> from{{v(1), Sign::positive}}, to{{v(2), Sign::positive}};
  const auto w = alternating_reachable(graph(2, {"+12"}), from, to);
  REQUIRE(w);
  CHECK(w->length() == 1);
}

TEST_CASE("alternating_reachable refuses mixed graphs") {
  const std::vector<Endpoint> e{{v(1), Sign::positive}};
  CHECK_THROWS_AS(alternating_reachable(graph(2, {">12"}), e, e), DomainError);
}

TEST_CASE("cycles_alternating_connected on Figure 1") {
  const auto g = figure1_g();
  const auto odd = enumerate_odd_cycles(g);
  CHECK_FALSE(cycles_alternating_connected(g, odd[0], odd[1]));

  const auto h = figure1_h();
  const auto hodd = enumerate_odd_cycles(h);
  const auto w = cycles_alternating_connected(h, hodd[0], hodd[1]);
  REQUIRE(w);
  CHECK(w->edges == std::vector<EdgeRef>{signed_ref(1), signed_ref(2)});
  CHECK(walk_rho_sum(h, *w) == ExponentVector{1, 0, -1});
}

TEST_CASE("two positive triangles joined by a positive bridge") {
  const auto g = graph(6, {"+12", "+23", "+13", "+34", "+45", "+56", "+46"});
  const auto odd = enumerate_odd_cycles(g);
  REQUIRE(odd.size() == 2);
  const auto w = cycles_alternating_connected(g, odd[0], odd[1]);
  REQUIRE(w);
  CHECK(w->edges == std::vector<EdgeRef>{signed_ref(3)});
}

TEST_CASE("preconditions of cycles_alternating_connected") {
  const auto g = graph(5, {"+12", "+23", "+13", "+34", "+45", "+35"});
  const auto odd = enumerate_odd_cycles(g);
  REQUIRE(odd.size() == 2);
  CHECK_THROWS_AS(cycles_alternating_connected(g, odd[0], odd[1]), PreconditionError);
  const auto even = enumerate_cycles(graph(4, {"+12", "+23", "+34", "+14", "+11"}));
  CHECK_THROWS_AS(cycles_alternating_connected(graph(4, {"+12", "+23", "+34", "+14", "+11"}), even[0], even[1]),
                  PreconditionError);
  const auto apart = graph(2, {"+11", "+22"});
  const auto loops = enumerate_odd_cycles(apart);
  CHECK_THROWS_AS(cycles_alternating_connected(apart, loops[0], loops[1]), PreconditionError);
}

TEST_CASE("BFS finds shortest walks, matching layered reachability") {
  RandomGraphOptions opt;
  opt.max_vertices = 6;
  opt.max_edges = 10;
  opt.mix = EdgeMix::signed_only;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::mt19937_64 rng(seed);
    const auto g = random_graph(rng, opt);
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    auto pick = [&] {
      std::vector<Endpoint> e;
      const auto count = uniform(rng, 1, 2);
      for (std::int64_t k = 0; k < count; ++k)
        e.push_back({VertexId{static_cast<std::size_t>(uniform(rng, 0, n - 1))},
                     uniform(rng, 0, 1) ? Sign::positive : Sign::negative});
      return e;
    };
    const auto sources = pick();
    const auto targets = pick();
    const auto w = alternating_reachable(g, sources, targets);
    const auto len = shortest_by_layers(g, sources, targets);
    CHECK(w.has_value() == (len > 0));
    if (!w) continue;
    CHECK(w->length() == len);
    CHECK(is_alternating_walk(g, *w));
    CHECK(std::any_of(sources.begin(), sources.end(), [&](const Endpoint& s) {
      return s.vertex == w->vertices.front() && s.sign == w->first_sign;
    }));
    CHECK(std::any_of(targets.begin(), targets.end(), [&](const Endpoint& t) {
      return t.vertex == w->vertices.back() && t.sign == w->last_sign;
    }));
  }
}

TEST_CASE("a simple alternating path always yields a connecting walk") {
  RandomGraphOptions opt;
  opt.max_vertices = 7;
  opt.max_edges = 11;
  opt.mix = EdgeMix::signed_only;
  std::size_t pairs = 0, connected = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const auto g = random_graph(seed, opt);
    for (const auto& p : disjoint_odd_pairs(g)) {
      ++pairs;
      const auto w = cycles_alternating_connected(g, p.c1, p.c2);
      if (simple_alternating_path(g, p.c1, p.c2)) CHECK(w.has_value());
      if (!w) continue;
      ++connected;
      CHECK(is_alternating_walk(g, *w));
      const auto i = w->vertices.front(), j = w->vertices.back();
      REQUIRE(p.c1.contains(i));
      REQUIRE(p.c2.contains(j));
      if (p.c1.signature(i) != 0) CHECK(value(w->first_sign) == p.c1.signature(i));
      if (p.c2.signature(j) != 0) CHECK(value(w->last_sign) == p.c2.signature(j));
    }
  }
  CHECK(pairs > 100);
  CHECK(connected > 0);
  CHECK(connected < pairs);
}

TEST_CASE("connecting walks may need to repeat vertices") {
  // No simple path from the loop at 1 to the loop at 4 alternates; the walk
  // turns around on the loop at 2.
  const auto g = graph(4, {"-33", "+11", "-22", "+24", "+12", "-13", "-44", "-34"});
  const auto c1 = make_cycle(g, {v(1)}, {signed_ref(1)});
  const auto c2 = make_cycle(g, {v(4)}, {signed_ref(6)});
  CHECK_FALSE(simple_alternating_path(g, c1, c2));
  const auto w = cycles_alternating_connected(g, c1, c2);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<VertexId>{v(1), v(2), v(2), v(4), v(4)});
}

TEST_CASE("generalized alternation equals alternation of the expanded walk") {
  RandomGraphOptions opt;
  opt.max_vertices = 5;
  opt.max_edges = 9;
  std::size_t accepted = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    std::mt19937_64 rng(seed);
    const auto g = random_graph(rng, opt);
    if (g.edge_count() == 0) continue;
    const auto a = augment(g);
    AltWalk w;
    w.vertices.push_back(VertexId{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(g.vertex_count()) - 1))});
    const auto len = uniform(rng, 1, 6);
    for (std::int64_t k = 0; k < len; ++k) {
      const auto inc = g.incident(w.vertices.back());
      if (inc.empty()) break;
      const auto& pick = inc[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(inc.size()) - 1))];
      w.edges.push_back(pick.edge);
      w.vertices.push_back(pick.other);
    }
    if (w.edges.empty()) continue;
    const auto x = expand(a, w);
    w.first_sign = x.first_sign;
    w.last_sign = x.last_sign;
    const bool direct = is_generalized_alternating(g, w);
    CHECK(direct == is_alternating_walk(a.signed_graph, x));
    accepted += direct;
    if (g.has_directed()) continue;
    CHECK(direct == is_alternating_walk(g, w));
  }
  CHECK(accepted > 100);
}

TEST_CASE("loops joined by an arc") {
  const auto g = graph(2, {"+11", "-22", ">12"});
  const auto odd = enumerate_odd_cycles(g);
  REQUIRE(odd.size() == 2);
  const auto w = generalized_alternating_connected(g, odd[0], odd[1], augment(g));
  REQUIRE(w);
  CHECK(is_generalized_alternating(g, *w));
  CHECK(w->edges == std::vector<EdgeRef>{signed_ref(0), directed_ref(0), signed_ref(1)});
}

TEST_CASE("generalized connection on signed graphs reduces to the signed search") {
  RandomGraphOptions opt;
  opt.mix = EdgeMix::signed_only;
  opt.max_vertices = 7;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_graph(seed, opt);
    const auto a = augment(g);
    for (const auto& p : disjoint_odd_pairs(g))
      CHECK(generalized_alternating_connected(g, p.c1, p.c2, a) == cycles_alternating_connected(g, p.c1, p.c2));
  }
}

TEST_CASE("generalized walks satisfy the direct rules") {
  RandomGraphOptions opt;
  opt.max_vertices = 7;
  opt.max_edges = 12;
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const auto g = random_graph(seed, opt);
    if (!g.has_directed()) continue;
    const auto a = augment(g);
    for (const auto& p : disjoint_odd_pairs(g)) {
      const auto w = generalized_alternating_connected(g, p.c1, p.c2, a);
      const auto up = cycles_alternating_connected(a.signed_graph, to_augmented(a, p.c1), to_augmented(a, p.c2),
                                                   g.vertex_count());
      CHECK(w.has_value() == up.has_value());
      if (!w) continue;
      ++found;
      CHECK(is_generalized_alternating(g, *w));
      CHECK(p.c1.contains(w->vertices.front()));
      CHECK(p.c2.contains(w->vertices.back()));
      CHECK(is_alternating_walk(a.signed_graph, expand(a, *w)));
    }
  }
  CHECK(found > 10);
}

TEST_CASE("walks into artificial vertices do not collapse") {
  const auto a = augment(graph(2, {">12"}));
  AltWalk w{{v(1), v(3)}, {a.edge_map[0][0]}, Sign::negative, Sign::negative};
  CHECK_THROWS_AS(collapse_walk(a, w), PreconditionError);
}
