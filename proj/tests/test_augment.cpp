#include "doctest.h"
#include "edgering/augment.hpp"
#include "edgering/errors.hpp"
#include "edgering/generate.hpp"
#include "support.hpp"

using namespace edgering;
using namespace edgering::testing;

TEST_CASE("single directed edge becomes -[1,3] +[3,2]") {
  const auto a = augment(graph(2, {">12"}));
  CHECK(a.signed_graph == graph(3, {"-13", "+23"}));
  REQUIRE(a.artificial.size() == 1);
  CHECK(a.artificial[0] == v(3));
  CHECK(a.is_artificial(v(3)));
  CHECK_FALSE(a.is_artificial(v(2)));
  CHECK(a.directed_for(v(3)) == directed_ref(0));
  REQUIRE(a.edge_map[0].size() == 2);
  CHECK(a.signed_graph.sign(a.edge_map[0][0]) == Sign::negative);
  CHECK(a.signed_graph.sign(a.edge_map[0][1]) == Sign::positive);
}

TEST_CASE("signed graphs augment to themselves") {
  const auto g = figure1_g();
  const auto a = augment(g);
  CHECK(a.signed_graph == g);
  CHECK(a.artificial.empty());
}

TEST_CASE("antiparallel arcs") {
  const auto a = augment(graph(2, {">12", ">21"}));
  CHECK(a.signed_graph.vertex_count() == 4);
  CHECK(a.signed_graph == graph(4, {"-13", "+23", "-24", "+14"}));
}

TEST_CASE("project_exponents") {
  const auto a = augment(graph(3, {"+11", "-33", ">12"}));
  CHECK(project_exponents(a, {1, 0, -1, 0}) == ExponentVector{1, 0, -1});
  CHECK_THROWS_AS(project_exponents(a, {0, 0, 0, 1}), InconsistencyError);

  const auto b = augment(graph(2, {">12"}));
  const auto sum = rho(b.signed_graph, b.edge_map[0][0]) + rho(b.signed_graph, b.edge_map[0][1]);
  CHECK(project_exponents(b, sum) == ExponentVector{-1, 1});
}

TEST_CASE("rho of a directed edge is the projected sum of its two halves") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_graph(seed);
    const auto a = augment(g);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      ExponentVector s(a.signed_graph.vertex_count());
      for (auto img : a.edge_map[k]) s += rho(a.signed_graph, img);
      CHECK(project_exponents(a, s) == rho(g, g.edge_at(k)));
    }
  }
}

TEST_CASE("pull_back_weights") {
  const auto a = augment(graph(2, {">12"}));
  CHECK(pull_back_weights(a, std::vector<int>{3, 3}) == std::vector<int>{3});
  CHECK_THROWS_AS(pull_back_weights(a, std::vector<int>{1, 2}), InconsistencyError);
  CHECK(pull_back_weights(a, std::vector<int>{0, 0}) == std::vector<int>{0});
}

TEST_CASE("push forward then pull back is the identity") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const auto g = random_graph(rng, {});
    const auto a = augment(g);
    std::vector<std::int64_t> w;
    for (std::size_t k = 0; k < g.edge_count(); ++k) w.push_back(uniform(rng, 0, 5));
    CHECK(pull_back_weights(a, push_forward_weights(a, w)) == w);
  }
}

TEST_CASE("augmented rendering marks artificial vertices") {
  const auto text = render_augmented(augment(graph(2, {">12"})));
  CHECK(text == "vertices 3\n- 1 3\n+ 2 3\n# artificial t 3 = (1,2)\n");
  CHECK(parse_graph(text) == graph(3, {"-13", "+23"}));
}
