#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgering/cycles.hpp"
#include "edgering/normality.hpp"
#include "edgering/oracle.hpp"
#include "json.hpp"

namespace edgering {

enum class Command { decide, normalize, witness, cycles, connect, augment, oracle, verify };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::decide;
  /// Read from this file; stdin when empty (unless `seed` picks a random graph).
  std::optional<std::string> input_path;
  bool monomials = false;
  bool json = false;
  std::size_t cycle_cap = kDefaultCycleCap;
  std::int64_t degree_bound = kDefaultDegreeBound;
  /// 0 selects the per-alpha default cap.
  std::int64_t coeff_cap = 0;
  std::optional<std::uint64_t> seed;
  bool odd_only = false;
  /// 1-based vertex sequences for `connect`.
  std::vector<std::size_t> cycle1;
  std::vector<std::size_t> cycle2;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. Errors are reported on `err` and mapped to exit code 2.
int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// `1,2,3` or `1 2 3`.
std::vector<std::size_t> parse_vertex_list(std::string_view text);

/// The random graph behind `--seed` without an input file.
MixedGraph seeded_graph(std::uint64_t seed);

/// The `decide --json` document.
struct DecideDocument {
  MixedGraph graph;
  NormalityReport report;
  std::vector<Witness> certificates;
};

nlohmann::json decide_document_to_json(const DecideDocument& d);
DecideDocument decide_document_from_json(const nlohmann::json& j);
/// Pretty-printed with a trailing newline; the exact bytes `decide --json` prints.
std::string render_json(const nlohmann::json& j);

/// Finds the cycle of g that visits `vertices` (1-based) in this cyclic order
/// in either direction; odd cycles are preferred when parallel edges give several.
CycleDesc find_cycle(const MixedGraph& g, const std::vector<std::size_t>& vertices,
                     std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace edgering
