#include "edgering/generate.hpp"

#include <algorithm>

namespace edgering {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

MixedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  const auto n = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(opt.min_vertices),
                                                  static_cast<std::int64_t>(opt.max_vertices)));
  const auto target = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(opt.max_edges)));
  std::vector<SignedEdge> s;
  std::vector<DirectedEdge> d;
  for (std::size_t attempt = 0; s.size() + d.size() < target && attempt < 20 * target + 20; ++attempt) {
    VertexId a{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))};
    VertexId b{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))};
    bool directed = opt.mix == EdgeMix::directed_only ||
                    (opt.mix == EdgeMix::mixed && uniform(rng, 0, 2) == 0);
    if (directed) {
      if (a == b) continue;
      DirectedEdge e{a, b};
      if (std::find(d.begin(), d.end(), e) == d.end()) d.push_back(e);
      continue;
    }
    if (a == b && !opt.loops) continue;
    if (b < a) std::swap(a, b);
    SignedEdge e{a, b, uniform(rng, 0, 1) == 0 ? Sign::positive : Sign::negative};
    if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
  }
  return MixedGraph(n, std::move(s), std::move(d));
}

MixedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& opt) {
  std::mt19937_64 rng(seed);
  return random_graph(rng, opt);
}

std::vector<SignedEdge> all_signed_edges(std::size_t n) {
  std::vector<SignedEdge> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (auto s : {Sign::positive, Sign::negative}) out.push_back({VertexId{i}, VertexId{j}, s});
  return out;
}

}  // namespace edgering
