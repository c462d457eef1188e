#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "edgering/model.hpp"

namespace edgering::testing {

/// Graph from tokens like "+11", "-23", ">12" (1-based, single-digit vertices).
inline MixedGraph graph(std::size_t n, const std::vector<std::string>& edges) {
  std::string text = "vertices " + std::to_string(n) + "\n";
  for (const auto& e : edges) text += std::string(1, e[0]) + ' ' + e[1] + ' ' + e[2] + '\n';
  return parse_graph(text);
}

inline MixedGraph figure1_g() { return graph(3, {"+11", "+12", "+23", "-33"}); }
inline MixedGraph figure1_h() { return graph(3, {"+11", "+12", "-23", "-33"}); }

inline EdgeRef signed_ref(std::size_t id) { return {EdgeKind::signed_edge, id}; }
inline EdgeRef directed_ref(std::size_t id) { return {EdgeKind::directed, id}; }
inline VertexId v(std::size_t one_based) { return VertexId{one_based - 1}; }

/// Every signed graph on n vertices with at most max_edges edges.
inline std::vector<MixedGraph> all_signed_graphs(std::size_t n, std::size_t max_edges,
                                                 const std::vector<SignedEdge>& pool) {
  std::vector<MixedGraph> out;
  std::vector<SignedEdge> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    out.emplace_back(n, cur);
    if (cur.size() == max_edges) return;
    for (std::size_t k = next; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Runs f(i) for i in [0, count) on all cores; f must only touch slot i of its outputs.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) f(i);
    });
  for (auto& t : pool) t.join();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace edgering::testing
