#include "twobridge/plat_oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>

#include "twobridge/invariants.hpp"

namespace twobridge {

OracleBudgetExceeded::OracleBudgetExceeded(int required_budget, int budget)
    : std::runtime_error("state sweep needs budget " + std::to_string(required_budget) +
                         " but the configured budget is " + std::to_string(budget)),
      required(required_budget) {}

PlatDiagram build_diagram(const AdditiveCF& cf) {
  if (!is_positive_additive(cf))
    throw std::invalid_argument("build_diagram expects an odd-length all-positive additive CF");
  PlatDiagram d;
  long long total = 0;
  for (std::size_t i = 0; i < cf.coeffs.size(); ++i) {
    bool lower = i % 2 == 0;
    total += cf.coeffs[i];
    if (total > 1 << 28) throw std::overflow_error("diagram too large to lay out");
    int count = static_cast<int>(cf.coeffs[i]);
    // Figure-1 handedness: odd regions (1-based) are right-handed for a_i > 0,
    // even regions left-handed.
    d.regions.push_back({lower ? StrandPair::Lower12 : StrandPair::Upper23, count, lower ? 1 : -1});
    for (int n = 0; n < count; ++n) d.crossing_strand.push_back(lower ? 0 : 1);
  }
  d.crossing_count = static_cast<int>(d.crossing_strand.size());
  return d;
}

namespace {

// Union-find over arc nodes; node 0 spans strands (1,4) at the left caps,
// node 1 spans (2,3), and each closed-off resolution opens one fresh node.
struct ArcTracker {
  std::vector<int> parent;

  void reset(int capacity) {
    parent.resize(capacity);
    for (int i = 0; i < capacity; ++i) parent[i] = i;
  }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

struct StateScratch {
  ArcTracker arcs;
  std::vector<std::pair<int, int>> raw_edges;  // pre-resolution endpoints
  std::vector<int> vertex_id;
  std::vector<int> color;
  std::vector<int> queue;
  std::vector<int> degree;
  std::vector<int> neighbors;  // circles x edge-count matrix, flat
  int vertex_capacity = 0;

  // Resolves the state: returns the circle count and leaves raw_edges filled.
  int resolve(const PlatDiagram& d, std::uint64_t bits) {
    int c = d.crossing_count;
    arcs.reset(c + 2);
    raw_edges.clear();
    std::array<int, 4> cur = {0, 1, 1, 0};
    int next_node = 2;
    for (int i = 0; i < c; ++i) {
      int s = d.crossing_strand[i];
      if ((bits >> i) & 1) {
        arcs.unite(cur[s], cur[s + 1]);
        int fresh = next_node++;
        raw_edges.emplace_back(cur[s], fresh);
        cur[s] = cur[s + 1] = fresh;
      } else {
        raw_edges.emplace_back(cur[s], cur[s + 1]);
      }
    }
    arcs.unite(cur[0], cur[3]);
    arcs.unite(cur[1], cur[2]);

    vertex_id.assign(next_node, -1);
    int circles = 0;
    for (int v = 0; v < next_node; ++v) {
      int r = arcs.find(v);
      if (vertex_id[r] < 0) vertex_id[r] = circles++;
    }
    vertex_capacity = next_node;
    return circles;
  }

  int edge_vertex(int raw) { return vertex_id[arcs.find(raw)]; }

  bool bipartite(int circles) {
    int stride = static_cast<int>(raw_edges.size());
    degree.assign(circles, 0);
    neighbors.resize(static_cast<std::size_t>(circles) * std::max(stride, 1));
    for (auto [a, b] : raw_edges) {
      int u = edge_vertex(a), v = edge_vertex(b);
      if (u == v) return false;  // loop: odd cycle
      neighbors[u * stride + degree[u]++] = v;
      neighbors[v * stride + degree[v]++] = u;
    }
    color.assign(circles, -1);
    for (int s = 0; s < circles; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      queue.assign(1, s);
      while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int k = 0; k < degree[u]; ++k) {
          int v = neighbors[u * stride + k];
          if (color[v] == -1) {
            color[v] = 1 - color[u];
            queue.push_back(v);
          } else if (color[v] == color[u]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool simple_and_bipartite(int circles) {
    if (!bipartite(circles)) return false;
    std::size_t n = raw_edges.size();
    for (std::size_t i = 0; i < n; ++i) {
      int ui = edge_vertex(raw_edges[i].first), vi = edge_vertex(raw_edges[i].second);
      if (ui > vi) std::swap(ui, vi);
      for (std::size_t j = i + 1; j < n; ++j) {
        int uj = edge_vertex(raw_edges[j].first), vj = edge_vertex(raw_edges[j].second);
        if (uj > vj) std::swap(uj, vj);
        if (ui == uj && vi == vj) return false;  // parallel edges: 2-cycle
      }
    }
    return true;
  }
};

constexpr std::uint64_t kMinimalStateCap = 1u << 16;

}  // namespace

int count_state_circles(const PlatDiagram& d, const KauffmanState& s) {
  if (s.length != d.crossing_count)
    throw std::invalid_argument("state length does not match the diagram");
  StateScratch scratch;
  return scratch.resolve(d, s.bits);
}

StateGraph state_graph(const PlatDiagram& d, const KauffmanState& s) {
  if (s.length != d.crossing_count)
    throw std::invalid_argument("state length does not match the diagram");
  StateScratch scratch;
  StateGraph g;
  g.vertex_count = scratch.resolve(d, s.bits);
  for (auto [a, b] : scratch.raw_edges)
    g.edges.emplace_back(scratch.edge_vertex(a), scratch.edge_vertex(b));
  return g;
}

bool is_orientable_state(const StateGraph& g) {
  std::vector<std::vector<int>> adjacency(g.vertex_count);
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<int> color(g.vertex_count, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adjacency[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool cycle_condition(const StateGraph& g) {
  if (!is_orientable_state(g)) return false;
  auto norm = [](std::pair<int, int> e) {
    return e.first <= e.second ? e : std::pair<int, int>{e.second, e.first};
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto e : g.edges) edges.push_back(norm(e));
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

SweepStats sweep_states(const PlatDiagram& d, int budget, bool orientable_census) {
  int c = d.crossing_count;
  if (c < 1) throw std::invalid_argument("sweep_states expects at least one crossing");
  if (budget > 62) budget = 62;  // bitmask width
  if (c > budget) throw OracleBudgetExceeded(c, budget);
  SweepStats stats;
  stats.crossing_count = c;
  StateScratch scratch;
  std::uint64_t total = std::uint64_t{1} << c;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    int circles = scratch.resolve(d, bits);
    if (circles > stats.max_circles) {
      stats.max_circles = circles;
      stats.minimal_state_count = 0;
      stats.some_minimal_nonorientable = false;
      stats.all_minimal_cycle_condition = true;
      stats.any_minimal_cycle_condition = false;
      stats.minimal_states.clear();
    }
    bool minimal = circles == stats.max_circles;
    if (!orientable_census && !minimal) continue;
    bool orientable = scratch.bipartite(circles);
    if (orientable_census && orientable) {
      ++stats.orientable_state_count;
      stats.orientable_complexities.push_back(1 + c - circles);
    }
    if (minimal) {
      ++stats.minimal_state_count;
      if (!orientable) stats.some_minimal_nonorientable = true;
      bool condition = orientable && scratch.simple_and_bipartite(circles);
      stats.all_minimal_cycle_condition = stats.all_minimal_cycle_condition && condition;
      stats.any_minimal_cycle_condition = stats.any_minimal_cycle_condition || condition;
      if (stats.minimal_states.size() < kMinimalStateCap) stats.minimal_states.push_back(bits);
    }
  }
  std::sort(stats.orientable_complexities.begin(), stats.orientable_complexities.end());
  return stats;
}

OracleResult oracle_invariants(const PlatDiagram& d, int budget) {
  SweepStats stats = sweep_states(d, budget, /*orientable_census=*/false);
  OracleResult result;
  result.max_circles = stats.max_circles;
  result.gamma_unoriented = 1 + stats.crossing_count - stats.max_circles;
  result.minimal_state_count = stats.minimal_state_count;
  result.some_minimal_nonorientable = stats.some_minimal_nonorientable;
  result.crosscap =
      stats.some_minimal_nonorientable ? result.gamma_unoriented : result.gamma_unoriented + 1;
  return result;
}

bool theorem11_crosscheck(const Fraction& f, int budget) {
  if (!is_canonical(f)) throw std::invalid_argument("theorem11_crosscheck expects 0 < p < q");
  PlatDiagram d = build_diagram(to_positive_additive(f));
  if (d.crossing_count < 3)
    throw std::invalid_argument("theorem11_crosscheck needs at least 3 crossings (no Hopf summand)");
  SweepStats stats = sweep_states(d, budget, /*orientable_census=*/false);
  bool excess = !stats.some_minimal_nonorientable;  // crosscap = genus + 1
  return stats.any_minimal_cycle_condition == excess;
}

std::string to_json(const OracleResult& r) {
  std::ostringstream out;
  out << "{\"gamma_unoriented\":" << r.gamma_unoriented << ",\"crosscap\":" << r.crosscap
      << ",\"minimal_state_count\":" << r.minimal_state_count
      << ",\"some_minimal_nonorientable\":" << (r.some_minimal_nonorientable ? "true" : "false")
      << ",\"max_circles\":" << r.max_circles << "}";
  return out.str();
}

}  // namespace twobridge
