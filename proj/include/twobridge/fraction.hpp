#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace twobridge {

using Int = mpz_class;

// Exact reduced rational p/q. mpq_class keeps gcd(|p|,q)=1 and q>0 after
// canonicalization; every constructor below canonicalizes.
using Fraction = mpq_class;

// A knot if and only if the canonical denominator q is odd.
enum class LinkClass { Knot, TwoComponentLink };

Fraction make_fraction(Int num, Int den);

// Parses "p/q" with optional sign. Throws std::invalid_argument on malformed
// input or zero denominator.
Fraction parse_fraction(const std::string& text);

// Always emits "p/q", including a unit denominator.
std::string fraction_to_string(const Fraction& f);

// 0 < p < q, reduced.
bool is_canonical(const Fraction& f);

// Maps a nonzero non-integer fraction to its 0 < p < q representative via
// p mod q. Schubert: L(p/q) = L((p mod q)/q). Integers are rejected: they do
// not name a 2-bridge link.
Fraction normalize_canonical(const Fraction& f);

// pre: canonical.
LinkClass classify(const Fraction& f);

// Schubert's criterion: q = q' and (p = p' or pp' = 1 mod q).
// pre: both canonical.
bool schubert_equivalent(const Fraction& a, const Fraction& b);

}  // namespace twobridge
