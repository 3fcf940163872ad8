#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twobridge/invariants.hpp"
#include "twobridge/plat_oracle.hpp"

using namespace twobridge;

namespace {

AdditiveCF add(std::vector<long long> v) { return AdditiveCF{std::move(v)}; }

KauffmanState state(const PlatDiagram& d, std::uint64_t bits) {
  return KauffmanState{bits, d.crossing_count};
}

}  // namespace

TEST_CASE("diagram layout") {
  PlatDiagram trefoil = build_diagram(add({3}));
  CHECK(trefoil.crossing_count == 3);
  CHECK(trefoil.regions.size() == 1);
  CHECK(trefoil.regions[0].pair == StrandPair::Lower12);

  PlatDiagram big = build_diagram(add({3, 1, 2, 3, 2}));
  CHECK(big.crossing_count == 11);
  CHECK(big.regions.size() == 5);
  CHECK(big.regions[1].pair == StrandPair::Upper23);
  CHECK(big.regions[1].handedness == -1);

  PlatDiagram fig8 = build_diagram(add({2, 1, 1}));
  CHECK(fig8.crossing_count == 4);

  CHECK_THROWS_AS(build_diagram(add({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(build_diagram(add({3, -1, 3})), std::invalid_argument);
}

TEST_CASE("state circle counts") {
  PlatDiagram trefoil = build_diagram(add({3}));
  int a = count_state_circles(trefoil, state(trefoil, 0));
  int b = count_state_circles(trefoil, state(trefoil, 0b111));
  CHECK(std::min(a, b) == 2);
  CHECK(std::max(a, b) == 3);
  CHECK(a + b == trefoil.crossing_count + 2);  // checkerboard identity

  PlatDiagram one = build_diagram(add({1}));
  CHECK(count_state_circles(one, state(one, 0)) + count_state_circles(one, state(one, 1)) == 3);

  CHECK_THROWS_AS(count_state_circles(trefoil, KauffmanState{0, 2}), std::invalid_argument);
}

TEST_CASE("state graphs") {
  PlatDiagram trefoil = build_diagram(add({3}));
  StateGraph through = state_graph(trefoil, state(trefoil, 0));
  CHECK(through.vertex_count == 2);
  CHECK(through.edges.size() == 3);
  for (auto [u, v] : through.edges) CHECK(u != v);  // three parallel edges

  PlatDiagram one = build_diagram(add({1}));
  std::uint64_t two_circle_bits =
      count_state_circles(one, state(one, 0)) == 2 ? 0 : 1;
  StateGraph g = state_graph(one, state(one, two_circle_bits));
  CHECK(g.vertex_count == 2);
  CHECK(g.edges.size() == 1);
}

TEST_CASE("orientability and the cycle condition") {
  StateGraph parallel3{2, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK(is_orientable_state(parallel3));
  CHECK_FALSE(cycle_condition(parallel3));  // 2-cycles

  StateGraph loop{1, {{0, 0}}};
  CHECK_FALSE(is_orientable_state(loop));
  CHECK_FALSE(cycle_condition(loop));

  StateGraph tree{4, {{0, 1}, {1, 2}, {1, 3}}};
  CHECK(is_orientable_state(tree));
  CHECK(cycle_condition(tree));

  StateGraph square{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  CHECK(is_orientable_state(square));
  CHECK(cycle_condition(square));

  StateGraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_FALSE(is_orientable_state(triangle));
}

TEST_CASE("oracle invariants") {
  OracleResult trefoil = oracle_invariants(build_diagram(add({3})));
  CHECK(trefoil.gamma_unoriented == 1);
  CHECK(trefoil.crosscap == 1);
  CHECK(trefoil.some_minimal_nonorientable);
  CHECK(trefoil.minimal_state_count == 1);

  OracleResult fig8 = oracle_invariants(build_diagram(add({2, 1, 1})));
  CHECK(fig8.gamma_unoriented == 2);
  CHECK(fig8.crosscap == 2);

  OracleResult t44 = oracle_invariants(build_diagram(add({3, 1, 3})));  // 4/15
  CHECK(t44.gamma_unoriented == 2);
  CHECK(t44.crosscap == 3);
  CHECK(t44.minimal_state_count == 1);
  CHECK_FALSE(t44.some_minimal_nonorientable);

  OracleResult big = oracle_invariants(build_diagram(add({3, 1, 2, 3, 2})));  // 23/85
  CHECK(big.max_circles == 8);
  CHECK(big.gamma_unoriented == 4);
  CHECK(big.crosscap == 4);

  OracleResult hopf = oracle_invariants(build_diagram(add({2})));
  CHECK(hopf.gamma_unoriented == 1);
  CHECK(hopf.crosscap == 2);
}

TEST_CASE("budget refusal") {
  AdditiveCF wide{{23}};
  try {
    oracle_invariants(build_diagram(wide));
    FAIL("expected OracleBudgetExceeded");
  } catch (const OracleBudgetExceeded& e) {
    CHECK(e.required == 23);
  }
  CHECK_NOTHROW(oracle_invariants(build_diagram(wide), 23));
}

TEST_CASE("theorem 1.1 crosscheck") {
  CHECK(theorem11_crosscheck(make_fraction(4, 15)));
  CHECK(theorem11_crosscheck(make_fraction(1, 3)));
  CHECK(theorem11_crosscheck(make_fraction(23, 85)));
  CHECK_THROWS_AS(theorem11_crosscheck(make_fraction(1, 2)), std::invalid_argument);
}

TEST_CASE("sweeps expose orientable states") {
  // q odd: the one orientable state matches the even form; q even: two
  SweepStats trefoil = sweep_states(build_diagram(add({3})));
  CHECK(trefoil.orientable_state_count == 1);
  CHECK(trefoil.orientable_complexities == std::vector<long long>{2});

  SweepStats hopf = sweep_states(build_diagram(add({2})));
  CHECK(hopf.orientable_state_count == 2);
  CHECK(hopf.orientable_complexities == std::vector<long long>{1, 1});
}

TEST_CASE("oracle result serialization") {
  OracleResult r;
  r.gamma_unoriented = 2;
  r.crosscap = 3;
  r.minimal_state_count = 1;
  r.some_minimal_nonorientable = false;
  r.max_circles = 5;
  CHECK(to_json(r) ==
        "{\"gamma_unoriented\":2,\"crosscap\":3,\"minimal_state_count\":1,"
        "\"some_minimal_nonorientable\":false,\"max_circles\":5}");
}
