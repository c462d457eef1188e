#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "edgering/exact.hpp"
#include "edgering/model.hpp"

namespace edgering {

using IntegerWeights = std::vector<Integer>;

// ---------------------------------------------------------------- lattice

/// The lattice L_G = Zρ(E). Column Hermite form A·U = H of the matrix whose
/// columns are the ρ(e); U is unimodular.
class EdgeLattice {
 public:
  explicit EdgeLattice(const MixedGraph& g);

  std::size_t rank() const { return rank_; }
  /// One integer solution of Σ z_e ρ(e) = alpha, or none.
  std::optional<IntegerWeights> solve(const ExponentVector& alpha) const;
  bool contains(const ExponentVector& alpha) const { return solve(alpha).has_value(); }
  /// Basis of the integer relations Σ z_e ρ(e) = 0.
  std::vector<IntegerWeights> kernel() const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::vector<Integer>> h_;  // n x m, column echelon
  std::vector<std::vector<Integer>> u_;  // m x m
  std::vector<std::size_t> pivot_row_;   // per pivot column
};

std::optional<IntegerWeights> lattice_member(const MixedGraph& g, const ExponentVector& alpha);

// ---------------------------------------------------------------- cone

/// Rows r with r·alpha >= 0 (inequalities) or r·alpha == 0 (equalities)
/// describing cone(ρ(E)), obtained by eliminating the weights with
/// Fourier–Motzkin (Chernikov's rule keeps the row count down).
struct ConeDescription {
  std::vector<std::vector<Rational>> equalities;
  std::vector<std::vector<Rational>> inequalities;

  bool contains(const ExponentVector& alpha) const;
};

ConeDescription fm_cone_description(const MixedGraph& g);

/// Nonnegative rational weights with ρ-sum alpha, by Fourier–Motzkin with back-substitution.
std::optional<RationalWeights> fm_cone_member(const MixedGraph& g, const ExponentVector& alpha);
/// Same question by a two-phase simplex with Bland's rule.
std::optional<RationalWeights> simplex_cone_member(const MixedGraph& g, const ExponentVector& alpha);

inline constexpr std::size_t kFourierMotzkinEdgeLimit = 12;

/// Fourier–Motzkin up to 12 edges, simplex above.
std::optional<RationalWeights> cone_member(const MixedGraph& g, const ExponentVector& alpha);

// ---------------------------------------------------------------- T1 / T2

struct T1Certificate {
  IntegerWeights lattice;
  RationalWeights cone;
};

std::optional<T1Certificate> t1_member(const MixedGraph& g, const ExponentVector& alpha);

/// Default T₂ search cap for alpha: 2·(‖alpha‖₁ + 2|E|).
std::int64_t default_coeff_cap(const MixedGraph& g, const ExponentVector& alpha);

/// Exhaustive search for nonnegative integer z with Σ z_k gens[k] = alpha and
/// Σ z_k <= cap. Returns a solution of least total, or none when there is no
/// representation within the cap.
class BoundedSearch {
 public:
  explicit BoundedSearch(std::vector<ExponentVector> gens);

  std::optional<IntWeights> find(const ExponentVector& alpha, std::int64_t cap);

 private:
  bool dfs(std::size_t k, std::vector<std::int64_t>& residual, std::int64_t budget);
  bool hopeless(std::size_t k, const std::vector<std::int64_t>& residual, std::int64_t budget) const;
  std::string key(std::size_t k, const std::vector<std::int64_t>& residual) const;

  std::vector<ExponentVector> gens_;
  std::size_t n_ = 0;
  // suffix_max_[k][i] = max(0, max over gens >= k of coordinate i); suffix_min_ likewise.
  std::vector<std::vector<std::int64_t>> suffix_max_;
  std::vector<std::vector<std::int64_t>> suffix_min_;
  std::vector<std::int64_t> suffix_l1_;  // max L1 norm of gens >= k
  std::unordered_map<std::string, std::int64_t> failed_;  // largest budget known to fail
  IntWeights counts_;
};

std::optional<IntWeights> t2_member_bounded(const MixedGraph& g, const ExponentVector& alpha,
                                            std::int64_t coeff_cap);

// ---------------------------------------------------------------- walks

/// A closed walk whose occurrence weights w satisfy: w·sgn alternates.
struct ClosedWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeRef> edges;
  std::vector<int> weights;
};

struct WalkDecomposition {
  /// The signed graph the walks live in (the input, or its augmentation).
  MixedGraph graph;
  std::vector<ClosedWalk> walks;
};

/// Thrown when the vertex sums of the weights are not all zero.
class ConditionViolated : public PreconditionError {
 public:
  ConditionViolated(VertexId v, std::int64_t sum)
      : PreconditionError("vertex sum condition violated at vertex " + std::to_string(v.index + 1) +
                          " (sum " + std::to_string(sum) + ")"),
        vertex_(v) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// Σ_e sgn(e)·a_e at every vertex, a loop counting twice. Directed edges
/// contribute -a at the tail and +a at the head.
std::vector<std::int64_t> vertex_sums(const MixedGraph& g, const IntWeights& a);

/// Splits integer weights with zero vertex sums into alternating closed
/// walks by matching +1 and -1 edge ends at every vertex. Mixed graphs are
/// decomposed in their augmentation.
WalkDecomposition verify_identity_weights(const MixedGraph& g, const IntWeights& a);

/// Per-edge sums of occurrence weights, on decomposition.graph.
IntWeights recombine(const WalkDecomposition& d);
bool is_alternating_closed_walk(const MixedGraph& g, const ClosedWalk& w);

// ---------------------------------------------------------------- reduction

struct Reduction {
  /// Weights on the input graph's edges; zero exactly on removed edges.
  RationalWeights weights;
  std::size_t steps = 0;
};

/// Repeatedly shifts weight along reducing closed walks until every
/// component of the support is a tree or has exactly one cycle, which is odd.
/// Signed graphs only; all input weights must be positive.
Reduction reduce_to_forest_unicyclic(const MixedGraph& g, const RationalWeights& a);

/// Subgraph made of the edges with nonzero weight (same vertex set).
MixedGraph support_graph(const MixedGraph& g, const RationalWeights& w,
                         std::vector<EdgeRef>* kept = nullptr);

/// True when every component is a tree or contains exactly one cycle and that cycle is odd.
bool is_forest_or_odd_unicyclic(const MixedGraph& g);

// ---------------------------------------------------------------- windows

/// All alpha in Z^n with ‖alpha‖₁ <= bound, by norm and then lexicographically.
std::vector<ExponentVector> l1_window(std::size_t n, std::int64_t bound);

struct OracleVerdict {
  bool normal_up_to_bounds = true;
  /// First alpha (window order) in T₁ with no T₂ representation within the cap.
  std::optional<ExponentVector> witness;
  std::optional<T1Certificate> witness_certificate;
  /// Least k with k·witness ∈ T₂ within the cap, and its weights.
  std::optional<std::int64_t> multiple;
  std::optional<IntWeights> multiple_weights;
  std::size_t window_size = 0;
  std::size_t t1_count = 0;
  std::int64_t degree_bound = 0;
  /// 0 means the per-alpha default was used.
  std::int64_t coeff_cap = 0;
};

inline constexpr std::int64_t kDefaultDegreeBound = 4;

/// Compares T₁ and T₂ on the window ‖alpha‖₁ <= degree_bound. coeff_cap = 0
/// selects default_coeff_cap per alpha.
OracleVerdict oracle_normality(const MixedGraph& g, std::int64_t degree_bound = kDefaultDegreeBound,
                               std::int64_t coeff_cap = 0);

/// Does alpha lie in T₁ but have no T₂ representation within the cap?
bool in_t1_not_t2(const MixedGraph& g, const ExponentVector& alpha, std::int64_t coeff_cap);

struct GenerationVerdict {
  bool all_expressible = true;
  std::vector<ExponentVector> inexpressible;
  std::size_t checked = 0;
  std::int64_t degree_bound = 0;
  std::int64_t coeff_cap = 0;
};

/// Every alpha ∈ T₁ in the window must be Σ z_e ρ(e) + Σ c_j gens[j] with
/// nonnegative integers and Σ z + Σ c <= coeff_cap (0 = per-alpha default).
GenerationVerdict verify_generation(const MixedGraph& g, const std::vector<ExponentVector>& gens,
                                    std::int64_t degree_bound = kDefaultDegreeBound,
                                    std::int64_t coeff_cap = 0);

}  // namespace edgering
