#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "edgering/errors.hpp"
#include "edgering/exact.hpp"
#include "edgering/generate.hpp"
#include "edgering/normality.hpp"
#include "edgering/oracle.hpp"
#include "support.hpp"

using namespace edgering;
using namespace edgering::testing;

namespace {

// Lattice points reachable by ±ρ(e) steps inside the box |x_i| <= bound.
std::set<std::vector<std::int64_t>> lattice_box(const MixedGraph& g, std::int64_t bound) {
  std::set<std::vector<std::int64_t>> seen{std::vector<std::int64_t>(g.vertex_count(), 0)};
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : frontier)
      for (auto e : g.edges())
        for (int s : {1, -1}) {
          auto q = p;
          const auto r = rho(g, e);
          bool inside = true;
          for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] += s * r[i];
            inside = inside && q[i] <= bound && q[i] >= -bound;
          }
          if (inside && seen.insert(q).second) next.push_back(q);
        }
    frontier = std::move(next);
  }
  return seen;
}

// Least number of edge vectors (with repetition) summing to each reachable point, up to cap.
std::map<std::vector<std::int64_t>, std::int64_t> t2_levels(const MixedGraph& g, std::int64_t cap) {
  std::map<std::vector<std::int64_t>, std::int64_t> level{{std::vector<std::int64_t>(g.vertex_count(), 0), 0}};
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(g.vertex_count(), 0)};
  for (std::int64_t k = 1; k <= cap; ++k) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : frontier)
      for (auto e : g.edges()) {
        auto q = p;
        const auto r = rho(g, e);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] += r[i];
        if (level.emplace(q, k).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return level;
}

std::size_t rational_rank(const MixedGraph& g) {
  std::vector<std::vector<Rational>> rows;
  for (auto e : g.edges()) rows.push_back(to_rationals(rho(g, e)));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < g.vertex_count() && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = 0; c < g.vertex_count(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool certifies(const MixedGraph& g, const RationalWeights& w, const ExponentVector& alpha) {
  for (const auto& x : w)
    if (x < 0) return false;
  return equals(weighted_rho_sum(g, w), alpha);
}

RandomGraphOptions small(std::size_t n, std::size_t m) {
  RandomGraphOptions opt;
  opt.max_vertices = n;
  opt.max_edges = m;
  return opt;
}

}  // namespace

// ------------------------------------------------------------------ lattice

TEST_CASE("lattice examples") {
  const auto g = figure1_g();
  const auto z = lattice_member(g, {1, 0, -1});
  REQUIRE(z);
  CHECK(weighted_rho_sum(g, *z) == std::vector<Integer>{1, 0, -1});
  const auto zero = lattice_member(g, {0, 0, 0});
  REQUIRE(zero);
  for (const auto& x : *zero) CHECK(x == 0);
  CHECK_FALSE(lattice_member(graph(2, {"+12"}), {1, 0}));
  CHECK_FALSE(lattice_member(g, {1, 0, 0}));
  CHECK_THROWS_AS(lattice_member(g, {1, 0}), PreconditionError);
}

TEST_CASE("Hermite form membership matches a brute-force walk through the lattice") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = random_graph(seed, small(4, 6));
    const EdgeLattice lat(g);
    const auto box = lattice_box(g, 6);
    for (const auto& alpha : l1_window(g.vertex_count(), 3)) {
      const bool brute = box.count(alpha.coords()) > 0;
      const auto z = lat.solve(alpha);
      CHECK(z.has_value() == brute);
      if (z) CHECK(weighted_rho_sum(g, *z) == std::vector<Integer>(alpha.coords().begin(), alpha.coords().end()));
    }
  }
}

TEST_CASE("kernel is a basis of the integer relations") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(seed, small(7, 12));
    const EdgeLattice lat(g);
    CHECK(lat.rank() == rational_rank(g));
    const auto kernel = lat.kernel();
    CHECK(kernel.size() == g.edge_count() - lat.rank());
    for (const auto& k : kernel)
      CHECK(weighted_rho_sum(g, k) == std::vector<Integer>(g.vertex_count(), 0));
  }
}

// ------------------------------------------------------------------ cone

TEST_CASE("cone examples") {
  const auto g = figure1_g();
  const auto w = cone_member(g, {1, 0, -1});
  REQUIRE(w);
  CHECK(certifies(g, *w, {1, 0, -1}));
  const Rational half(1, 2);
  CHECK(*w == RationalWeights{half, 0, 0, half});
  for (auto e : g.edges()) {
    const auto one = cone_member(g, rho(g, e));
    REQUIRE(one);
    CHECK(certifies(g, *one, rho(g, e)));
  }
  CHECK_FALSE(cone_member(graph(2, {"+12"}), {-1, -1}));
  CHECK(cone_member(graph(2, {"+12"}), {2, 2}));
}

TEST_CASE("Fourier-Motzkin and simplex agree") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_graph(seed, small(5, 10));
    const auto desc = fm_cone_description(g);
    for (const auto& alpha : l1_window(g.vertex_count(), 2)) {
      const auto fm = fm_cone_member(g, alpha);
      const auto lp = simplex_cone_member(g, alpha);
      CHECK(fm.has_value() == lp.has_value());
      CHECK(desc.contains(alpha) == lp.has_value());
      if (fm) CHECK(certifies(g, *fm, alpha));
      if (lp) CHECK(certifies(g, *lp, alpha));
    }
  }
}

TEST_CASE("simplex handles graphs beyond the elimination limit") {
  RandomGraphOptions opt = small(6, 20);
  opt.min_vertices = 4;
  std::size_t tested = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_graph(seed, opt);
    if (g.edge_count() <= kFourierMotzkinEdgeLimit) continue;
    ++tested;
    IntWeights w(g.edge_count());
    std::mt19937_64 rng(seed);
    for (auto& x : w) x = uniform(rng, 0, 2);
    const auto alpha = weighted_rho_sum(g, w);
    const auto c = cone_member(g, alpha);
    REQUIRE(c);
    CHECK(certifies(g, *c, alpha));
    const auto neg = cone_member(g, -alpha);
    if (neg) CHECK(certifies(g, *neg, -alpha));
  }
  CHECK(tested > 5);
}

// ------------------------------------------------------------------ T1 / T2

TEST_CASE("T1 examples") {
  const auto g = figure1_g();
  const auto c = t1_member(g, {1, 0, -1});
  REQUIRE(c);
  CHECK(weighted_rho_sum(g, c->lattice) == std::vector<Integer>{1, 0, -1});
  CHECK(certifies(g, c->cone, {1, 0, -1}));
  CHECK_FALSE(t1_member(g, {1, 0, 0}));
  CHECK(t1_member(g, {0, 0, 0}));
}

TEST_CASE("T2 examples") {
  const auto h = figure1_h();
  const auto w = t2_member_bounded(h, {1, 0, -1}, 4);
  REQUIRE(w);
  CHECK(*w == IntWeights{0, 1, 1, 0});
  CHECK_FALSE(t2_member_bounded(figure1_g(), {1, 0, -1}, 10));
  CHECK(t2_member_bounded(figure1_g(), {0, 0, 0}, 1) == IntWeights{0, 0, 0, 0});
  CHECK(in_t1_not_t2(figure1_g(), {1, 0, -1}, 10));
  CHECK_FALSE(in_t1_not_t2(figure1_h(), {1, 0, -1}, 10));
}

TEST_CASE("bounded search matches breadth-first sums") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_graph(seed, small(4, 6));
    const auto levels = t2_levels(g, 4);
    for (const auto& alpha : l1_window(g.vertex_count(), 3)) {
      const auto w = t2_member_bounded(g, alpha, 4);
      const auto it = levels.find(alpha.coords());
      CHECK(w.has_value() == (it != levels.end()));
      if (!w) continue;
      std::int64_t total = 0;
      for (auto x : *w) {
        CHECK(x >= 0);
        total += x;
      }
      CHECK(total == it->second);
      CHECK(weighted_rho_sum(g, *w) == alpha);
    }
  }
}

TEST_CASE("bounded search reuses its memo across targets") {
  const auto g = random_graph(7, small(6, 10));
  std::vector<ExponentVector> gens;
  for (auto e : g.edges()) gens.push_back(rho(g, e));
  BoundedSearch shared(gens);
  for (const auto& alpha : l1_window(g.vertex_count(), 3)) {
    BoundedSearch fresh(gens);
    CHECK(shared.find(alpha, 8).has_value() == fresh.find(alpha, 8).has_value());
  }
}

// ------------------------------------------------------------------ windows and verdicts

TEST_CASE("window order and size") {
  const auto w = l1_window(3, 2);
  // 1 + 6 + 18 points of norm 0, 1, 2 in Z^3
  CHECK(w.size() == 25);
  CHECK(w.front().is_zero());
  for (std::size_t k = 1; k < w.size(); ++k) {
    CHECK(w[k - 1].l1_norm() <= w[k].l1_norm());
    if (w[k - 1].l1_norm() == w[k].l1_norm()) CHECK(w[k - 1] < w[k]);
  }
  CHECK(std::set<ExponentVector>(w.begin(), w.end()).size() == w.size());
}

TEST_CASE("oracle verdicts on the examples") {
  const auto g = oracle_normality(figure1_g(), 2, 6);
  CHECK_FALSE(g.normal_up_to_bounds);
  REQUIRE(g.witness);
  CHECK(*g.witness == ExponentVector{1, 0, -1});
  REQUIRE(g.multiple);
  CHECK(*g.multiple == 2);
  CHECK(weighted_rho_sum(figure1_g(), *g.multiple_weights) == ExponentVector{2, 0, -2});
  REQUIRE(g.witness_certificate);

  CHECK(oracle_normality(figure1_h(), 4, 8).normal_up_to_bounds);

  RandomGraphOptions opt = small(6, 10);
  opt.mix = EdgeMix::directed_only;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(oracle_normality(random_graph(seed, opt), 3, 6).normal_up_to_bounds);
}

TEST_CASE("generation check") {
  const auto g = figure1_g();
  const auto full = verify_generation(g, {{1, 0, -1}}, 3, 8);
  CHECK(full.all_expressible);
  CHECK(full.checked > 0);
  const auto missing = verify_generation(g, {}, 3, 8);
  CHECK_FALSE(missing.all_expressible);
  REQUIRE_FALSE(missing.inexpressible.empty());
  CHECK(missing.inexpressible.front() == ExponentVector{1, 0, -1});
  CHECK(verify_generation(figure1_h(), {}, 3, 8).all_expressible);
}

// ------------------------------------------------------------------ zero-sum weights

TEST_CASE("vertex sums") {
  const auto g = graph(3, {"+12", "+23", "+13"});
  try {
    verify_identity_weights(g, {1, -1, 0});
    FAIL("accepted");
  } catch (const ConditionViolated& e) {
    CHECK(e.vertex() == v(1));
  }
  CHECK(vertex_sums(graph(2, {"+11", ">12"}), {1, 1}) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("alternating weights on a 4-cycle form one closed walk") {
  const auto g = graph(4, {"+12", "+23", "+34", "+14"});
  const auto d = verify_identity_weights(g, {1, -1, 1, -1});
  REQUIRE(d.walks.size() == 1);
  CHECK(d.walks[0].edges.size() == 4);
  CHECK(recombine(d) == IntWeights{1, -1, 1, -1});
}

TEST_CASE("loops contribute one occurrence with both ends at the loop vertex") {
  // +11 - -11 style cancellation: +[1,1] with weight 1 against -[1,1] with weight 1.
  const auto g = graph(1, {"+11", "-11"});
  const auto d = verify_identity_weights(g, {1, 1});
  CHECK(recombine(d) == IntWeights{1, 1});
  for (const auto& w : d.walks) CHECK(is_alternating_closed_walk(d.graph, w));
}

TEST_CASE("zero-sum weights decompose") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const auto g = random_graph(rng, small(6, 12));
    const auto kernel = EdgeLattice(g).kernel();
    IntWeights w(g.edge_count(), 0);
    for (const auto& k : kernel) {
      const auto c = uniform(rng, -2, 2);
      for (std::size_t e = 0; e < w.size(); ++e) w[e] += c * to_int64(k[e]);
    }
    const auto d = verify_identity_weights(g, w);
    for (const auto& cw : d.walks) CHECK(is_alternating_closed_walk(d.graph, cw));
    const auto expect = g.has_directed() ? push_forward_weights(augment(g), w) : w;
    CHECK(recombine(d) == expect);
  }
}

// ------------------------------------------------------------------ reduction

TEST_CASE("reduction on an even 4-cycle") {
  const auto g = graph(4, {"+12", "+23", "+34", "+14"});
  const RationalWeights a{1, 2, 1, 3};
  const auto r = reduce_to_forest_unicyclic(g, a);
  CHECK(r.steps == 1);
  CHECK(weighted_rho_sum(g, r.weights) == weighted_rho_sum(g, a));
  CHECK(std::count(r.weights.begin(), r.weights.end(), Rational(0)) >= 1);
  CHECK(is_forest_or_odd_unicyclic(support_graph(g, r.weights)));
}

TEST_CASE("trees are left alone") {
  const auto g = graph(4, {"+12", "-23", "+24"});
  const RationalWeights a{Rational(1, 3), 2, Rational(5, 2)};
  const auto r = reduce_to_forest_unicyclic(g, a);
  CHECK(r.steps == 0);
  CHECK(r.weights == a);
}

TEST_CASE("two triangles sharing a vertex") {
  const auto g = graph(5, {"+12", "+23", "+13", "+34", "+45", "+35"});
  const RationalWeights a(6, Rational(1));
  CHECK_FALSE(is_forest_or_odd_unicyclic(g));
  const auto r = reduce_to_forest_unicyclic(g, a);
  CHECK(r.steps >= 1);
  CHECK(weighted_rho_sum(g, r.weights) == weighted_rho_sum(g, a));
  CHECK(is_forest_or_odd_unicyclic(support_graph(g, r.weights)));
}

TEST_CASE("disjoint triangles joined by a path") {
  const auto g = graph(7, {"+12", "+23", "+13", "+34", "+45", "+56", "+67", "+57"});
  const RationalWeights a(8, Rational(1));
  const auto r = reduce_to_forest_unicyclic(g, a);
  CHECK(r.steps >= 1);
  CHECK(weighted_rho_sum(g, r.weights) == weighted_rho_sum(g, a));
  CHECK(is_forest_or_odd_unicyclic(support_graph(g, r.weights)));
}

TEST_CASE("reduction preconditions") {
  CHECK_THROWS_AS(reduce_to_forest_unicyclic(graph(2, {">12"}), {1}), DomainError);
  CHECK_THROWS_AS(reduce_to_forest_unicyclic(graph(2, {"+12"}), {0}), PreconditionError);
}

TEST_CASE("forest or odd unicyclic") {
  CHECK(is_forest_or_odd_unicyclic(graph(3, {"+12", "+23"})));
  CHECK(is_forest_or_odd_unicyclic(graph(3, {"+12", "+23", "-13"})));
  CHECK(is_forest_or_odd_unicyclic(graph(2, {"+11", "+12"})));
  CHECK_FALSE(is_forest_or_odd_unicyclic(graph(2, {"+12", "-12"})));
  CHECK_FALSE(is_forest_or_odd_unicyclic(graph(1, {"+11", "-11"})));
}
