#include "edgering/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "edgering/errors.hpp"
#include "json.hpp"

namespace edgering {

// ---------------------------------------------------------------- ExponentVector

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::int64_t ExponentVector::l1_norm() const {
  std::int64_t s = 0;
  for (auto c : coords_) s += c < 0 ? -c : c;
  return s;
}

std::int64_t ExponentVector::total_degree() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.size() != size()) throw StructuralError("exponent vectors of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.size() != size()) throw StructuralError("exponent vectors of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ExponentVector& ExponentVector::operator*=(std::int64_t k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

// ---------------------------------------------------------------- MixedGraph

MixedGraph::MixedGraph(std::size_t n, std::vector<SignedEdge> signed_edges,
                       std::vector<DirectedEdge> directed_edges)
    : n_(n), signed_(std::move(signed_edges)), directed_(std::move(directed_edges)) {
  std::set<std::tuple<std::size_t, std::size_t, int>> seen_signed;
  for (auto& e : signed_) {
    if (e.u.index >= n_ || e.v.index >= n_)
      throw StructuralError("signed edge endpoint out of range");
    if (e.v < e.u) std::swap(e.u, e.v);
    if (!seen_signed.emplace(e.u.index, e.v.index, value(e.sign)).second)
      throw StructuralError("duplicate signed edge");
  }
  std::set<DirectedEdge> seen_directed;
  for (const auto& d : directed_) {
    if (d.tail.index >= n_ || d.head.index >= n_)
      throw StructuralError("directed edge endpoint out of range");
    if (d.tail == d.head) throw StructuralError("directed loops are not allowed");
    if (!seen_directed.insert(d).second) throw StructuralError("duplicate directed edge");
  }

  adjacency_.resize(n_);
  for (std::size_t k = 0; k < signed_.size(); ++k) {
    const auto& e = signed_[k];
    EdgeRef ref{EdgeKind::signed_edge, k};
    adjacency_[e.u.index].push_back({ref, e.v});
    if (!e.is_loop()) adjacency_[e.v.index].push_back({ref, e.u});
  }
  for (std::size_t k = 0; k < directed_.size(); ++k) {
    const auto& d = directed_[k];
    EdgeRef ref{EdgeKind::directed, k};
    adjacency_[d.tail.index].push_back({ref, d.head});
    adjacency_[d.head.index].push_back({ref, d.tail});
  }
}

bool MixedGraph::contains(EdgeRef e) const {
  return e.kind == EdgeKind::signed_edge ? e.id < signed_.size() : e.id < directed_.size();
}

std::size_t MixedGraph::index_of(EdgeRef e) const {
  if (!contains(e)) throw StructuralError("unknown edge reference");
  return e.kind == EdgeKind::signed_edge ? e.id : signed_.size() + e.id;
}

EdgeRef MixedGraph::edge_at(std::size_t flat) const {
  if (flat < signed_.size()) return {EdgeKind::signed_edge, flat};
  if (flat < edge_count()) return {EdgeKind::directed, flat - signed_.size()};
  throw StructuralError("edge index out of range");
}

std::vector<EdgeRef> MixedGraph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(edge_count());
  for (std::size_t k = 0; k < edge_count(); ++k) out.push_back(edge_at(k));
  return out;
}

const SignedEdge& MixedGraph::signed_edge(EdgeRef e) const {
  if (e.kind != EdgeKind::signed_edge || e.id >= signed_.size())
    throw StructuralError("not a signed edge of this graph");
  return signed_[e.id];
}

const DirectedEdge& MixedGraph::directed_edge(EdgeRef e) const {
  if (e.kind != EdgeKind::directed || e.id >= directed_.size())
    throw StructuralError("not a directed edge of this graph");
  return directed_[e.id];
}

std::pair<VertexId, VertexId> MixedGraph::endpoints(EdgeRef e) const {
  if (e.kind == EdgeKind::signed_edge) {
    const auto& s = signed_edge(e);
    return {s.u, s.v};
  }
  const auto& d = directed_edge(e);
  return {d.tail, d.head};
}

Sign MixedGraph::sign(EdgeRef e) const {
  if (e.kind == EdgeKind::directed) throw DomainError("directed edges carry no sign");
  return signed_edge(e).sign;
}

std::span<const MixedGraph::Incidence> MixedGraph::incident(VertexId v) const {
  if (v.index >= n_) throw StructuralError("vertex out of range");
  return adjacency_[v.index];
}

std::optional<EdgeRef> MixedGraph::find_signed(VertexId a, VertexId b, Sign s) const {
  if (b < a) std::swap(a, b);
  for (std::size_t k = 0; k < signed_.size(); ++k)
    if (signed_[k].u == a && signed_[k].v == b && signed_[k].sign == s)
      return EdgeRef{EdgeKind::signed_edge, k};
  return std::nullopt;
}

std::optional<EdgeRef> MixedGraph::find_directed(VertexId tail, VertexId head) const {
  for (std::size_t k = 0; k < directed_.size(); ++k)
    if (directed_[k].tail == tail && directed_[k].head == head)
      return EdgeRef{EdgeKind::directed, k};
  return std::nullopt;
}

ExponentVector rho(const MixedGraph& g, EdgeRef e) {
  ExponentVector out(g.vertex_count());
  if (e.kind == EdgeKind::signed_edge) {
    const auto& s = g.signed_edge(e);
    out[s.u.index] += value(s.sign);
    out[s.v.index] += value(s.sign);
  } else {
    const auto& d = g.directed_edge(e);
    out[d.head.index] += 1;
    out[d.tail.index] -= 1;
  }
  return out;
}

std::vector<std::size_t> component_labels(const MixedGraph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != unset) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (const auto& inc : g.incident(VertexId{v})) {
        if (label[inc.other.index] == unset) {
          label[inc.other.index] = next;
          q.push(inc.other.index);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> components(const MixedGraph& g) {
  auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<VertexId>> out(count);
  for (std::size_t v = 0; v < label.size(); ++v) out[label[v]].push_back(VertexId{v});
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    auto b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <class T>
std::optional<T> parse_int(std::string_view s) {
  T v{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_vertices_header(std::string_view line, std::size_t lineno) {
  auto t = tokens(line);
  if (t.empty() || t[0] != "vertices") return std::nullopt;
  if (t.size() != 2) throw ParseError(lineno, "expected `vertices N`");
  auto n = parse_int<long long>(t[1]);
  if (!n || *n < 0) throw ParseError(lineno, "invalid vertex count `" + std::string(t[1]) + "`");
  return static_cast<std::size_t>(*n);
}

MixedGraph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON graph: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("vertices")) throw ParseError(0, "JSON graph needs `vertices`");
    auto n_signed = j.at("vertices").get<long long>();
    if (n_signed < 0) throw ParseError(0, "negative vertex count");
    auto n = static_cast<std::size_t>(n_signed);
    auto vertex = [n](long long i) {
      if (i < 1 || static_cast<std::size_t>(i) > n)
        throw ParseError(0, "vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n));
      return VertexId{static_cast<std::size_t>(i - 1)};
    };
    std::vector<SignedEdge> s;
    std::vector<DirectedEdge> d;
    if (j.contains("signed")) {
      for (const auto& e : j.at("signed")) {
        if (!e.is_array() || e.size() != 3) throw ParseError(0, "signed edge must be [i, j, s]");
        auto sg = e[2].get<long long>();
        if (sg != 1 && sg != -1) throw ParseError(0, "edge sign must be 1 or -1");
        s.push_back({vertex(e[0].get<long long>()), vertex(e[1].get<long long>()), sign_of(int(sg))});
      }
    }
    if (j.contains("directed")) {
      for (const auto& e : j.at("directed")) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "directed edge must be [i, j]");
        d.push_back({vertex(e[0].get<long long>()), vertex(e[1].get<long long>())});
      }
    }
    return MixedGraph(n, std::move(s), std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed JSON graph: ") + e.what());
  } catch (const StructuralError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') return graph_from_json(body);

  std::optional<std::size_t> n;
  std::vector<SignedEdge> s;
  std::vector<DirectedEdge> d;
  std::set<std::tuple<std::size_t, std::size_t, int>> seen_signed;
  std::set<DirectedEdge> seen_directed;

  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    auto line = strip_comment(lines[k]);
    if (line.empty()) continue;
    if (!n) {
      n = parse_vertices_header(line, lineno);
      if (!n) throw ParseError(lineno, "expected `vertices N` header before edges");
      continue;
    }
    auto t = tokens(line);
    if (t.size() != 3 || (t[0] != "+" && t[0] != "-" && t[0] != ">"))
      throw ParseError(lineno, "malformed edge line `" + std::string(line) + "`");
    auto a = parse_int<long long>(t[1]);
    auto b = parse_int<long long>(t[2]);
    if (!a || !b) throw ParseError(lineno, "vertex indices must be integers");
    for (auto x : {*a, *b})
      if (x < 1 || static_cast<std::size_t>(x) > *n)
        throw ParseError(lineno, "vertex " + std::to_string(x) + " out of range 1.." +
                                     std::to_string(*n));
    VertexId u{static_cast<std::size_t>(*a - 1)}, v{static_cast<std::size_t>(*b - 1)};
    if (t[0] == ">") {
      if (u == v) throw ParseError(lineno, "directed loops are not allowed");
      if (!seen_directed.insert({u, v}).second) throw ParseError(lineno, "duplicate directed edge");
      d.push_back({u, v});
    } else {
      Sign sg = t[0] == "+" ? Sign::positive : Sign::negative;
      auto key = std::make_tuple(std::min(u, v).index, std::max(u, v).index, value(sg));
      if (!seen_signed.insert(key).second) throw ParseError(lineno, "duplicate signed edge");
      s.push_back({u, v, sg});
    }
  }
  if (!n) throw ParseError(0, "missing `vertices N` header");
  return MixedGraph(*n, std::move(s), std::move(d));
}

MixedGraph parse_monomials(std::string_view text) {
  std::size_t n = 0;
  std::vector<SignedEdge> s;
  std::vector<DirectedEdge> d;
  std::set<std::tuple<std::size_t, std::size_t, int>> seen_signed;
  std::set<DirectedEdge> seen_directed;

  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    auto line = strip_comment(lines[k]);
    if (line.empty()) continue;
    if (auto header = parse_vertices_header(line, lineno)) {
      n = std::max(n, *header);
      continue;
    }
    std::string compact;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    std::map<std::size_t, long long> exps;
    std::string_view rest = compact;
    while (true) {
      auto star = rest.find('*');
      auto factor = rest.substr(0, star);
      if (factor.size() < 2 || factor[0] != 'x')
        throw ParseError(lineno, "malformed factor `" + std::string(factor) + "`");
      auto caret = factor.find('^');
      auto idx = parse_int<long long>(factor.substr(1, caret == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : caret - 1));
      if (!idx || *idx < 1) throw ParseError(lineno, "malformed variable in `" + std::string(factor) + "`");
      long long e = 1;
      if (caret != std::string_view::npos) {
        auto pe = parse_int<long long>(factor.substr(caret + 1));
        if (!pe) throw ParseError(lineno, "malformed exponent in `" + std::string(factor) + "`");
        e = *pe;
      }
      exps[static_cast<std::size_t>(*idx - 1)] += e;
      if (star == std::string_view::npos) break;
      rest = rest.substr(star + 1);
    }
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });

    auto unsupported = [&] {
      return UnsupportedGenerator(lineno, "`" + std::string(line) +
                                              "` is not a quadratic monomial generator");
    };
    for (const auto& [i, e] : exps) n = std::max(n, i + 1);
    if (exps.size() == 1) {
      auto [i, e] = *exps.begin();
      if (e != 2 && e != -2) throw unsupported();
      auto key = std::make_tuple(i, i, e > 0 ? 1 : -1);
      if (!seen_signed.insert(key).second) throw ParseError(lineno, "duplicate generator");
      s.push_back({VertexId{i}, VertexId{i}, sign_of(int(e))});
    } else if (exps.size() == 2) {
      auto [i, ei] = *exps.begin();
      auto [j, ej] = *std::next(exps.begin());
      if (ei == ej && (ei == 1 || ei == -1)) {
        auto key = std::make_tuple(i, j, int(ei));
        if (!seen_signed.insert(key).second) throw ParseError(lineno, "duplicate generator");
        s.push_back({VertexId{i}, VertexId{j}, sign_of(int(ei))});
      } else if (ei == -1 && ej == 1) {
        if (!seen_directed.insert({VertexId{i}, VertexId{j}}).second)
          throw ParseError(lineno, "duplicate generator");
        d.push_back({VertexId{i}, VertexId{j}});
      } else if (ei == 1 && ej == -1) {
        if (!seen_directed.insert({VertexId{j}, VertexId{i}}).second)
          throw ParseError(lineno, "duplicate generator");
        d.push_back({VertexId{j}, VertexId{i}});
      } else {
        throw unsupported();
      }
    } else {
      throw unsupported();
    }
  }
  return MixedGraph(n, std::move(s), std::move(d));
}

// ---------------------------------------------------------------- rendering

std::string render_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.signed_edges())
    out << sign_char(e.sign) << ' ' << e.u.index + 1 << ' ' << e.v.index + 1 << '\n';
  for (const auto& d : g.directed_edges())
    out << "> " << d.tail.index + 1 << ' ' << d.head.index + 1 << '\n';
  return out.str();
}

std::string render_graph_json(const MixedGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["signed"] = nlohmann::json::array();
  j["directed"] = nlohmann::json::array();
  for (const auto& e : g.signed_edges())
    j["signed"].push_back({e.u.index + 1, e.v.index + 1, value(e.sign)});
  for (const auto& d : g.directed_edges()) j["directed"].push_back({d.tail.index + 1, d.head.index + 1});
  return j.dump() + "\n";
}

std::string render_monomial(const ExponentVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (v[i] != 1) out += '^' + std::to_string(v[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_monomials(const MixedGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (auto e : g.edges()) out += render_monomial(rho(g, e)) + '\n';
  return out;
}

std::string edge_label(const MixedGraph& g, EdgeRef e) {
  auto [a, b] = g.endpoints(e);
  auto pair = std::to_string(a.index + 1) + ',' + std::to_string(b.index + 1);
  if (e.kind == EdgeKind::directed) return '(' + pair + ')';
  return std::string(1, sign_char(g.sign(e))) + '[' + pair + ']';
}

}  // namespace edgering
