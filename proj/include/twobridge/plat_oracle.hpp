#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

inline constexpr int kDefaultOracleBudget = 22;

enum class StrandPair : std::uint8_t { Lower12, Upper23 };

struct TwistRegion {
  StrandPair pair;
  int count;
  int handedness;  // +1 right-hand, -1 left-hand crossings
};

// Standard alternating 4-plat: region i of the positive additive CF acts on
// strands (1,2) when i is odd, (2,3) when i is even; the plat closure caps
// strands (1,4) and (2,3) at both ends.
struct PlatDiagram {
  std::vector<TwistRegion> regions;
  std::vector<std::uint8_t> crossing_strand;  // 0 = strands (1,2), 1 = (2,3)
  int crossing_count = 0;
};

// Bit i resolves crossing i: 0 keeps the two strands running through,
// 1 closes them off left and opens a new arc right.
struct KauffmanState {
  std::uint64_t bits = 0;
  int length = 0;
};

// One vertex per state circle, one edge per crossing band; loops allowed.
struct StateGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

struct OracleResult {
  long long gamma_unoriented = 0;
  long long crosscap = 0;
  std::uint64_t minimal_state_count = 0;
  bool some_minimal_nonorientable = false;
  int max_circles = 0;
};

struct OracleBudgetExceeded : std::runtime_error {
  OracleBudgetExceeded(int required_budget, int budget);
  int required;
};

// pre: odd length, all entries positive.
PlatDiagram build_diagram(const AdditiveCF& cf);

int count_state_circles(const PlatDiagram& d, const KauffmanState& s);

StateGraph state_graph(const PlatDiagram& d, const KauffmanState& s);

// Bipartite (loops count as odd cycles) iff the state surface is 2-sided.
bool is_orientable_state(const StateGraph& g);

// Every cycle has even length >= 4: no loops, no parallel edges, bipartite.
bool cycle_condition(const StateGraph& g);

// Everything one exhaustive 2^c sweep can tell about a diagram.
struct SweepStats {
  int crossing_count = 0;
  int max_circles = 0;
  std::uint64_t minimal_state_count = 0;
  bool some_minimal_nonorientable = false;
  bool all_minimal_cycle_condition = true;
  bool any_minimal_cycle_condition = false;
  std::uint64_t orientable_state_count = 0;
  std::vector<long long> orientable_complexities;  // beta_1 of each 2-sided state
  std::vector<std::uint64_t> minimal_states;       // capped at 2^16 entries
};

SweepStats sweep_states(const PlatDiagram& d, int budget = kDefaultOracleBudget,
                        bool orientable_census = true);

// Exhausts all 2^c states; Gamma = 1 + c - max|x|; crosscap = Gamma if some
// minimal state is nonorientable, else Gamma + 1.
OracleResult oracle_invariants(const PlatDiagram& d, int budget = kDefaultOracleBudget);

// True iff [some minimal state's graph satisfies the cycle condition]
// <=> [crosscap = genus + 1]. pre: canonical fraction with c >= 3.
bool theorem11_crosscheck(const Fraction& f, int budget = kDefaultOracleBudget);

std::string to_json(const OracleResult& result);

}  // namespace twobridge
