#include "edgering/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "edgering/augment.hpp"
#include "edgering/crosscheck.hpp"
#include "edgering/generate.hpp"

namespace edgering {

using nlohmann::json;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::decide, "decide"},   {Command::normalize, "normalize"}, {Command::witness, "witness"},
    {Command::cycles, "cycles"},   {Command::connect, "connect"},     {Command::augment, "augment"},
    {Command::oracle, "oracle"},   {Command::verify, "verify"},
};

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

MixedGraph load_graph(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input_path) {
    std::ifstream f(*cfg.input_path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot open " + *cfg.input_path);
    text = read_all(f);
  } else if (cfg.seed) {
    return seeded_graph(*cfg.seed);
  } else {
    text = read_all(in);
  }
  return cfg.monomials ? parse_monomials(text) : parse_graph(text);
}

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string s = "[";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(vs[k].index + 1);
  }
  return s + "]";
}

std::string edge_list(const MixedGraph& g, const std::vector<EdgeRef>& es) {
  std::string s;
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (k) s += ' ';
    s += edge_label(g, es[k]);
  }
  return s;
}

std::string describe_cycle(const MixedGraph& g, const CycleDesc& c) {
  std::string s = vertex_list(c.vertices) + ' ' + edge_list(g, c.edges);
  s += c.is_odd() ? " odd" : " even";
  if (c.has_signatures()) {
    s += " sig=(";
    for (std::size_t k = 0; k < c.signatures.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c.signatures[k]);
    }
    s += ')';
  }
  return s;
}

template <class T, class F>
std::string weight_list(const MixedGraph& g, const std::vector<T>& w, F show) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    if (!s.empty()) s += ' ';
    s += edge_label(g, g.edge_at(k)) + '=' + show(w[k]);
  }
  return s.empty() ? "(none)" : s;
}

std::string show_int(std::int64_t x) { return std::to_string(x); }
std::string show_integer(const Integer& x) { return x.get_str(); }
std::string show_rational(const Rational& x) { return to_string(x); }

std::string cap_text(std::int64_t cap) {
  return cap > 0 ? std::to_string(cap) : "default 2*(|alpha|_1 + 2|E|)";
}

std::string walk_text(const MixedGraph& g, const AltWalk& w) {
  std::string s = std::to_string(w.vertices.front().index + 1);
  for (std::size_t k = 0; k < w.edges.size(); ++k)
    s += ' ' + edge_label(g, w.edges[k]) + ' ' + std::to_string(w.vertices[k + 1].index + 1);
  return s;
}

json weights_json(const MixedGraph& g, const IntWeights& w) {
  json out = json::array();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0)
      out.push_back({{"index", k}, {"label", edge_label(g, g.edge_at(k))}, {"weight", w[k]}});
  return out;
}

template <class T, class F>
json exact_weights_json(const MixedGraph& g, const std::vector<T>& w, F show) {
  json out = json::array();
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0)
      out.push_back({{"index", k}, {"label", edge_label(g, g.edge_at(k))}, {"weight", show(w[k])}});
  return out;
}

json oracle_json(const MixedGraph& g, const OracleVerdict& v) {
  json j = {{"verdict", v.normal_up_to_bounds ? "normal-up-to-bounds" : "not-normal"},
            {"degree_bound", v.degree_bound},
            {"coeff_cap", v.coeff_cap},
            {"window_size", v.window_size},
            {"t1_count", v.t1_count},
            {"witness", nullptr},
            {"multiple", nullptr}};
  if (v.witness) {
    j["witness"] = {{"exponents", exponents_to_json(*v.witness)},
                    {"monomial", render_monomial(*v.witness)}};
    if (v.witness_certificate) {
      j["witness"]["lattice_weights"] =
          exact_weights_json(g, v.witness_certificate->lattice, show_integer);
      j["witness"]["cone_weights"] = exact_weights_json(g, v.witness_certificate->cone, show_rational);
    }
  }
  if (v.multiple)
    j["multiple"] = {{"k", *v.multiple}, {"weights", weights_json(g, *v.multiple_weights)}};
  return j;
}

void print_oracle(std::ostream& out, const MixedGraph& g, const OracleVerdict& v) {
  out << (v.normal_up_to_bounds ? "normal-up-to-bounds" : "not-normal") << '\n';
  if (v.witness) {
    out << "witness: " << render_monomial(*v.witness) << " (in T1, no T2 representation within cap)\n";
    if (v.witness_certificate) {
      out << "lattice weights: " << weight_list(g, v.witness_certificate->lattice, show_integer) << '\n';
      out << "cone weights: " << weight_list(g, v.witness_certificate->cone, show_rational) << '\n';
    }
    if (v.multiple)
      out << "multiple: " << *v.multiple << " * witness in T2: "
          << weight_list(g, *v.multiple_weights, show_int) << '\n';
    else
      out << "multiple: none within cap\n";
  }
  out << "degree bound: " << v.degree_bound << '\n';
  out << "coeff cap: " << cap_text(v.coeff_cap) << '\n';
  out << "window: " << v.window_size << " points, " << v.t1_count << " T1 points examined\n";
}

void print_decision(std::ostream& out, const MixedGraph& g, const NormalityReport& r) {
  out << (r.normal ? "NORMAL" : "NOT NORMAL") << '\n';
  if (r.normal) return;
  out << "generators:";
  for (const auto& m : r.generators) out << ' ' << render_monomial(m);
  out << '\n';
  for (const auto& p : r.exceptional_pairs)
    out << "exceptional pair: " << describe_cycle(g, p.pair.c1) << " | "
        << describe_cycle(g, p.pair.c2) << " -> " << render_monomial(p.m_pi) << '\n';
}

int cmd_decide(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto r = decide(g, cfg.cycle_cap);
  if (cfg.json) {
    DecideDocument d{g, r, {}};
    for (const auto& p : r.exceptional_pairs) d.certificates.push_back(make_witness(g, p));
    out << render_json(decide_document_to_json(d));
  } else {
    print_decision(out, g, r);
  }
  return kExitOk;
}

int cmd_normalize(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto gens = normalization_generators(g, cfg.cycle_cap);
  if (cfg.json) {
    json j = json::array();
    for (const auto& m : gens) j.push_back({{"exponents", exponents_to_json(m)}, {"monomial", render_monomial(m)}});
    out << render_json(j);
  } else {
    for (const auto& m : gens) out << render_monomial(m) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto w = non_normality_witness(g, cfg.cycle_cap);
  if (cfg.json) {
    out << render_json(w ? witness_to_json(g, *w) : json(nullptr));
    return kExitOk;
  }
  if (!w) {
    out << "NONE\n";
    return kExitOk;
  }
  out << "monomial: " << render_monomial(w->pair.m_pi) << '\n';
  out << "pair: " << describe_cycle(g, w->pair.pair.c1) << " | " << describe_cycle(g, w->pair.pair.c2)
      << '\n';
  out << "half weights: " << weight_list(g, w->half_weights, show_rational) << '\n';
  out << "lattice weights: " << weight_list(g, w->lattice_weights, show_int) << '\n';
  out << "doubled weights: " << weight_list(g, w->doubled_weights, show_int) << '\n';
  return kExitOk;
}

int cmd_cycles(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto cs = cfg.odd_only ? enumerate_odd_cycles(g, cfg.cycle_cap) : enumerate_cycles(g, cfg.cycle_cap);
  if (cfg.json) {
    json j = json::array();
    for (const auto& c : cs) j.push_back(cycle_to_json(g, c));
    out << render_json(j);
  } else {
    for (const auto& c : cs) out << describe_cycle(g, c) << '\n';
  }
  return kExitOk;
}

int cmd_connect(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  if (cfg.cycle1.empty() || cfg.cycle2.empty())
    throw PreconditionError("connect needs --cycle1 and --cycle2");
  const auto c1 = find_cycle(g, cfg.cycle1, cfg.cycle_cap);
  const auto c2 = find_cycle(g, cfg.cycle2, cfg.cycle_cap);
  std::optional<AltWalk> w;
  if (g.has_directed())
    w = generalized_alternating_connected(g, c1, c2, augment(g));
  else
    w = cycles_alternating_connected(g, c1, c2);
  if (cfg.json) {
    out << render_json({{"connected", w.has_value()}, {"walk", w ? walk_to_json(g, *w) : json(nullptr)}});
  } else {
    out << (w ? "walk: " + walk_text(g, *w) : std::string("NONE")) << '\n';
  }
  return kExitOk;
}

int cmd_augment(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto a = augment(g);
  if (cfg.json) {
    json art = json::array();
    for (std::size_t k = 0; k < a.artificial.size(); ++k) {
      const auto& d = g.directed_edges()[k];
      art.push_back({{"vertex", a.artificial[k].index + 1}, {"edge", {d.tail.index + 1, d.head.index + 1}}});
    }
    out << render_json({{"graph", json::parse(render_graph_json(a.signed_graph))}, {"artificial", art}});
  } else {
    out << render_augmented(a);
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto v = oracle_normality(g, cfg.degree_bound, cfg.coeff_cap);
  if (cfg.json)
    out << render_json(oracle_json(g, v));
  else
    print_oracle(out, g, v);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const MixedGraph& g, std::ostream& out) {
  const auto x = crosscheck(g, cfg.degree_bound, cfg.coeff_cap, cfg.cycle_cap);
  const bool ok = x.agreement != Agreement::disagree;
  if (cfg.json) {
    json j = {{"result", ok ? "AGREE" : "DISAGREE"},
              {"beyond_window", x.agreement == Agreement::agree_beyond_window},
              {"reason", x.reason},
              {"graph", json::parse(render_graph_json(g))},
              {"report", report_to_json(g, x.report)},
              {"oracle", oracle_json(g, x.oracle)},
              {"generation", nullptr}};
    if (x.generation) {
      json bad = json::array();
      for (const auto& m : x.generation->inexpressible) bad.push_back(render_monomial(m));
      j["generation"] = {{"checked", x.generation->checked}, {"inexpressible", bad}};
    }
    out << render_json(j);
  } else {
    out << (ok ? "AGREE" : "DISAGREE") << '\n';
    if (!x.reason.empty()) out << "reason: " << x.reason << '\n';
    out << "decide: " << (x.report.normal ? "NORMAL" : "NOT NORMAL") << '\n';
    out << "oracle: " << (x.oracle.normal_up_to_bounds ? "normal-up-to-bounds" : "not-normal");
    if (x.oracle.witness) out << " (witness " << render_monomial(*x.oracle.witness) << ')';
    out << '\n';
    if (x.generation)
      out << "generation: " << x.generation->checked - x.generation->inexpressible.size() << " of "
          << x.generation->checked << " window elements expressible\n";
    for (const auto& m : x.beyond_window)
      out << "beyond window: " << render_monomial(m) << " confirmed in T1 and not in T2 within cap\n";
  }
  return ok ? kExitOk : kExitFinding;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

std::vector<std::size_t> parse_vertex_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(cur, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != cur.size() || v == 0) throw ParseError(0, "invalid vertex `" + cur + "`");
    out.push_back(static_cast<std::size_t>(v));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t')
      flush();
    else
      cur += ch;
  }
  flush();
  if (out.empty()) throw ParseError(0, "empty vertex list");
  return out;
}

MixedGraph seeded_graph(std::uint64_t seed) {
  RandomGraphOptions opt;
  opt.max_vertices = 8;
  opt.max_edges = 12;
  opt.mix = EdgeMix::mixed;
  return random_graph(seed, opt);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

json decide_document_to_json(const DecideDocument& d) {
  json certs = json::array();
  for (const auto& w : d.certificates) certs.push_back(witness_to_json(d.graph, w));
  return {{"graph", json::parse(render_graph_json(d.graph))},
          {"report", report_to_json(d.graph, d.report)},
          {"certificates", certs}};
}

DecideDocument decide_document_from_json(const json& j) {
  DecideDocument d;
  d.graph = parse_graph(j.at("graph").dump());
  d.report = report_from_json(d.graph, j.at("report"));
  for (const auto& w : j.at("certificates")) d.certificates.push_back(witness_from_json(d.graph, w));
  return d;
}

CycleDesc find_cycle(const MixedGraph& g, const std::vector<std::size_t>& vertices,
                     std::size_t cycle_cap) {
  std::vector<VertexId> want;
  for (auto v : vertices) {
    if (v == 0 || v > g.vertex_count())
      throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    want.push_back(VertexId{v - 1});
  }
  auto same_cyclic = [&](const std::vector<VertexId>& have) {
    if (have.size() != want.size()) return false;
    const auto len = have.size();
    for (std::size_t shift = 0; shift < len; ++shift) {
      bool fwd = true, bwd = true;
      for (std::size_t k = 0; k < len; ++k) {
        fwd = fwd && have[(shift + k) % len] == want[k];
        bwd = bwd && have[(shift + len - k) % len] == want[k];
      }
      if (fwd || bwd) return true;
    }
    return false;
  };
  std::optional<CycleDesc> even;
  for (const auto& c : enumerate_cycles(g, cycle_cap)) {
    if (!same_cyclic(c.vertices)) continue;
    if (c.is_odd()) return c;
    if (!even) even = c;
  }
  if (even) return *even;
  throw PreconditionError("no cycle through " + vertex_list(want));
}

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.cycle_cap == 0 || cfg.degree_bound < 0 || cfg.coeff_cap < 0)
      throw PreconditionError("caps must be positive");
    const auto g = load_graph(cfg, in);
    switch (cfg.command) {
      case Command::decide: return cmd_decide(cfg, g, out);
      case Command::normalize: return cmd_normalize(cfg, g, out);
      case Command::witness: return cmd_witness(cfg, g, out);
      case Command::cycles: return cmd_cycles(cfg, g, out);
      case Command::connect: return cmd_connect(cfg, g, out);
      case Command::augment: return cmd_augment(cfg, g, out);
      case Command::oracle: return cmd_oracle(cfg, g, out);
      case Command::verify: return cmd_verify(cfg, g, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edgering
