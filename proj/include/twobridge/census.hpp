#pragma once

#include <functional>
#include <vector>

#include "twobridge/fraction.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {
namespace census {

using Tuple = std::vector<int>;

// Crossing number of a signed tuple with |entries| >= 2: sum of |b_i| minus
// one per adjacent same-sign pair.
long long tuple_crossing(const Tuple& t);

// Parity of the continuant denominator; exact for the tuple sizes the census
// ever enumerates (guarded).
bool tuple_is_knot(const Tuple& t);

bool is_palindrome(const Tuple& t);

WZCount tuple_wz(const Tuple& t);

// Streams every tuple (b_1..b_k), b_i >= 2, with sum(b) - (k-1) = c, in
// lexicographic order.
void for_each_composition(int c, const std::function<void(const Tuple&)>& fn);

// K(c): tuples of entries >= 2 with crossing number c that evaluate to a
// knot (odd denominator); lexicographically sorted.
std::vector<Tuple> enumerate_K(int c);
void for_each_K(int c, const std::function<void(const Tuple&)>& fn);

// Palindromic subset, enumerated directly from half-tuples. Empty for even c.
std::vector<Tuple> enumerate_KP(int c);

enum class GCase { F1, F2, F3, F4 };
enum class GPCase { P1, P2, P3, P4 };

// Partition of K(c) by ending: (...,2,2) -> F1, (...,>=3,2) -> F2,
// (...,3) -> F3, (...,>=4) -> F4.
GCase g_case(const Tuple& t);
GPCase gp_case(const Tuple& t);

// The Jacobsthal bijection g = f1 u f2 u f3 u f4 : K(c) -> K(c-2) u K(c-1)
// u K(c-2). pre: c >= 5.
Tuple apply_g(const Tuple& t);
Tuple apply_g_inverse(const Tuple& image, GCase which);

// Palindrome-preserving variant gP = p1 u p2 u p3 u p4, with the short-tuple
// special cases p2(2,b,2), p3(3,b,3) and p4 on singletons. pre: palindromic,
// c >= 7.
Tuple apply_gP(const Tuple& t);

struct DeltaWZ {
  long long dw = 0;
  long long dz = 0;
};

DeltaWZ delta_wz_of_g(const Tuple& t);
DeltaWZ delta_wz_of_gP(const Tuple& t);

struct CensusTotals {
  int c = 0;
  Int count;              // |K(c)|
  Int w_sum;              // W(c)
  Int z_sum;              // Z(c)
  Int palindromic_count;  // |K^P(c)|
  Int wp_sum;             // W^P(c)
  Int zp_sum;             // Z^P(c)
};

CensusTotals census_totals(int c);

// E(c): signed even tuples with |e_i| >= 4 and the sign-delta crossing
// formula; knots have even length, links odd; E(0) = {()}.
struct EFamilies {
  std::vector<Tuple> all;               // E(c)
  std::vector<Tuple> knots;             // K^E(c)
  std::vector<Tuple> links;             // L^E(c)
  std::vector<Tuple> knot_palindromes;  // K^EP(c)
};

EFamilies enumerate_E_families(int c);

}  // namespace census
}  // namespace twobridge
