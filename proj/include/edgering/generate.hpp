#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "edgering/model.hpp"

namespace edgering {

enum class EdgeMix { signed_only, directed_only, mixed };

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
  EdgeMix mix = EdgeMix::mixed;
  bool loops = true;
};

/// Uniform integer in [lo, hi] from a mt19937_64 stream (plain modulo, so
/// results are the same on every platform).
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

MixedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt);
MixedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& opt = {});

/// Every signed edge (loops included) that can live on n vertices, in a fixed order.
std::vector<SignedEdge> all_signed_edges(std::size_t n);

}  // namespace edgering
