#pragma once

#include <string>
#include <vector>

#include "twobridge/fraction.hpp"

namespace twobridge {

// Additive continued fraction p/q = 1/(a1 + 1/(a2 + ...)), nonzero entries.
// The positive additive refinement has odd length and all entries > 0.
struct AdditiveCF {
  std::vector<long long> coeffs;
};

// Subtractive continued fraction p/q = 1/(b1 - 1/(b2 - ...)), |b_i| >= 2.
// Positive refinement: all b_i >= 2. Even refinement: all b_i even.
struct SubtractiveCF {
  std::vector<long long> coeffs;
};

bool is_positive_additive(const AdditiveCF& cf);
bool is_positive_subtractive(const SubtractiveCF& cf);
bool is_even_subtractive(const SubtractiveCF& cf);

// Empty list evaluates to 0/1. Throws std::domain_error naming the offending
// prefix if a nested denominator vanishes.
Fraction eval_additive(const AdditiveCF& cf);

// |b_i| >= 2 guarantees nonzero nested denominators (asserted).
Fraction eval_subtractive(const SubtractiveCF& cf);

// Unique odd-length all-positive additive form of p/q in (0,1).
AdditiveCF to_positive_additive(const Fraction& f);

// [a1,...,a_{2k+1}]+ = [a1+1, 2^[a2-1], a3+2, ..., a_{2k+1}+1]-.
// Length-1 input maps to itself.
SubtractiveCF to_positive_subtractive(const Fraction& f);

// All-even subtractive form, pre: q odd. Evaluates to p/q if p is even,
// else to (p-q)/q. Expansion: on x with |x| > 1, emit the unique even e
// with |x - e| < 1 and recurse on 1/(e - x); x is never an odd integer and
// the denominator strictly decreases.
SubtractiveCF to_even_subtractive(const Fraction& f);

// Sum of |b_i| minus one per adjacent same-sign pair; equals sum(b_i) - (k-1)
// for all-positive input.
long long crossing_number(const SubtractiveCF& cf);

// String forms used on the CLI: "add:[3,1,2,3,2]", "sub:[4,4,2,2,3]",
// "even:[2,-2]".
std::string format_additive(const AdditiveCF& cf);
std::string format_subtractive(const SubtractiveCF& cf);
std::string format_even_subtractive(const SubtractiveCF& cf);

// Accepts "p/q" or a tagged CF form and yields the evaluated fraction.
Fraction parse_fraction_or_cf(const std::string& text);

}  // namespace twobridge
