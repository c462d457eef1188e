#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgering {

/// 0-based vertex index. All text I/O is 1-based (x_1 ... x_n).
struct VertexId {
  std::size_t index = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign opposite(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr Sign sign_of(int v) { return v < 0 ? Sign::negative : Sign::positive; }
constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Undirected signed edge; endpoints are stored with u <= v. u == v is a loop.
struct SignedEdge {
  VertexId u;
  VertexId v;
  Sign sign = Sign::positive;

  bool is_loop() const { return u == v; }
  friend constexpr bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct DirectedEdge {
  VertexId tail;
  VertexId head;

  friend constexpr auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

enum class EdgeKind : std::uint8_t { signed_edge = 0, directed = 1 };

/// Index into the signed or the directed edge list of a graph.
struct EdgeRef {
  EdgeKind kind = EdgeKind::signed_edge;
  std::size_t id = 0;

  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Exponent vector of a Laurent monomial in x_1..x_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : coords_(n, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> c) : coords_(c) {}
  explicit ExponentVector(std::vector<std::int64_t> c) : coords_(std::move(c)) {}

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  std::int64_t l1_norm() const;
  /// Sum of coordinates, i.e. the total degree of the monomial.
  std::int64_t total_degree() const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  ExponentVector& operator*=(std::int64_t k);

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(std::int64_t k, ExponentVector a) { return a *= k; }
  friend ExponentVector operator-(ExponentVector a) { return a *= -1; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Mixed signed, directed graph. Immutable after construction.
///
/// Edges are addressed by EdgeRef; a flat index numbers signed edges first
/// and directed edges after them, which is the layout used by every weight
/// vector in the library.
class MixedGraph {
 public:
  struct Incidence {
    EdgeRef edge;
    VertexId other;
  };

  MixedGraph() = default;
  /// Throws StructuralError on out-of-range endpoints, directed loops and duplicates.
  MixedGraph(std::size_t n, std::vector<SignedEdge> signed_edges,
             std::vector<DirectedEdge> directed_edges = {});

  std::size_t vertex_count() const { return n_; }
  std::span<const SignedEdge> signed_edges() const { return signed_; }
  std::span<const DirectedEdge> directed_edges() const { return directed_; }
  std::size_t edge_count() const { return signed_.size() + directed_.size(); }
  bool has_directed() const { return !directed_.empty(); }

  bool contains(EdgeRef e) const;
  std::size_t index_of(EdgeRef e) const;
  EdgeRef edge_at(std::size_t flat) const;
  std::vector<EdgeRef> edges() const;

  const SignedEdge& signed_edge(EdgeRef e) const;
  const DirectedEdge& directed_edge(EdgeRef e) const;
  /// (u, v) for signed edges, (tail, head) for directed ones.
  std::pair<VertexId, VertexId> endpoints(EdgeRef e) const;
  /// Sign of a signed edge; DomainError for a directed one.
  Sign sign(EdgeRef e) const;

  /// Edges touching v, in flat edge order. A loop is listed once.
  std::span<const Incidence> incident(VertexId v) const;

  std::optional<EdgeRef> find_signed(VertexId a, VertexId b, Sign s) const;
  std::optional<EdgeRef> find_directed(VertexId tail, VertexId head) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.signed_ == b.signed_ && a.directed_ == b.directed_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SignedEdge> signed_;
  std::vector<DirectedEdge> directed_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Exponent vector of the monomial attached to an edge.
ExponentVector rho(const MixedGraph& g, EdgeRef e);

/// Component index of every vertex; directed edges count as undirected links.
/// Components are numbered in order of their smallest vertex.
std::vector<std::size_t> component_labels(const MixedGraph& g);
std::vector<std::vector<VertexId>> components(const MixedGraph& g);

/// Line format (`vertices N`, `+ i j`, `- i j`, `> i j`) or its JSON mirror.
MixedGraph parse_graph(std::string_view text);
/// One Laurent monomial per line, e.g. `x1*x2`, `x3^-2`, `x1^-1*x4`.
MixedGraph parse_monomials(std::string_view text);

std::string render_graph(const MixedGraph& g);
std::string render_graph_json(const MixedGraph& g);
std::string render_monomials(const MixedGraph& g);

/// `x1*x3^-1`; the zero vector renders as `1`.
std::string render_monomial(const ExponentVector& v);
/// `+[1,2]`, `-[3,3]` for signed edges, `(1,2)` for directed ones. 1-based.
std::string edge_label(const MixedGraph& g, EdgeRef e);

}  // namespace edgering
