#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twobridge {
namespace verify {

struct CheckResult {
  std::string name;
  std::string range;
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

struct Options {
  int max_c = 16;        // census / formula sweeps
  int oracle_max_c = 12;  // exhaustive state sweeps, <= budget
  int budget = 22;
};

// cf-core
CheckResult check_cf_roundtrip(const Options&);
CheckResult check_cf_rewrite_vs_direct_expansion(const Options&);
CheckResult check_cf_even_form(const Options&);
CheckResult check_cf_crossing_agreement(const Options&);
CheckResult check_cf_mirror_reversal(const Options&);
CheckResult check_conversion_goldens(const Options&);

// invariants
CheckResult check_formula_vs_reduction(const Options&);
CheckResult check_wz_mirror(const Options&);
CheckResult check_crosscap_dichotomy(const Options&);

// diagram oracle (also recomputes the averages by brute force)
CheckResult check_oracle_sweep(const Options&);

// census
CheckResult check_census_goldens(const Options&);
CheckResult check_bijection_g(const Options&);
CheckResult check_bijection_gP(const Options&);
CheckResult check_census_cardinalities(const Options&);
CheckResult check_palindrome_cardinalities(const Options&);
CheckResult check_delta_tables(const Options&);
CheckResult check_E_families(const Options&);

// formulas
CheckResult check_closed_vs_census(const Options&);
CheckResult check_count_identities(const Options&);
CheckResult check_average_formula(const Options&);
CheckResult check_E_recursion_vs_enumeration(const Options&);
CheckResult check_roots_and_coefficients(const Options&);
CheckResult check_closed_numeric_vs_exact(const Options&);
CheckResult check_asymptotics(const Options&);

std::vector<CheckResult> run_all(const Options&);

// Prints one line per check; returns true when everything passed.
bool report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace verify
}  // namespace twobridge
