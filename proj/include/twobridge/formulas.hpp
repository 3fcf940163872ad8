#pragma once

#include <array>
#include <complex>

#include "twobridge/fraction.hpp"

namespace twobridge {
namespace formulas {

// j(n) = (2^n - (-1)^n)/3; satisfies j(n) = j(n-1) + 2 j(n-2).
Int jacobsthal(long n);

// Number of 2-bridge knots with crossing number c, mirrors counted
// separately. Three cases by c mod 4; c = 3 falls under c = 3 mod 4.
Int ernst_sumners(int c);

// W(c) = c 2^(c-4) for c >= 4.
Int closed_W(int c);

// Z(c) = (3c-8)/27 2^(c-4) + 14/27 (-1)^c - 2/3 (-1)^c [c = 1 mod 3], c >= 6.
Int closed_Z(int c);

// Palindromic totals: zero for even c; stored initials for odd c in {3,5,7,9};
// the closed forms of the d = (c-1)/2 recursion for odd c >= 11.
Int closed_WP(int c);
Int closed_ZP(int c);

// Error term of the average unoriented genus, c >= 11, exact rational.
mpq_class epsilon1(int c);

// (W - Z + W^P - Z^P) / (2 |K_c|) from the closed totals, exact, c >= 3.
mpq_class average_unoriented(int c);

// Same value via census enumeration (cost 2^(c-2)); test oracle.
mpq_class average_unoriented_census(int c);

// c/3 + 1/9 + epsilon1(c), c >= 11.
mpq_class average_unoriented_eps1(int c);

struct ECounts {
  Int e_count;    // |E(c)|
  Int delta;      // |K^E(c)| - |L^E(c)|
  Int ke_count;   // |K^E(c)|
  Int kep_count;  // |K^EP(c)|
};

// Exact dynamic programming on |E(c)| = |E(c-2)|+|E(c-3)|+|E(c-4)|,
// Delta(c) = Delta(c-2)-Delta(c-3)-Delta(c-4) (initials c = 4..7), and
// |K^EP(c)| = |K^EP(c-4)|+|K^EP(c-6)|+|K^EP(c-8)| (initials c = 7..14).
ECounts recursive_E_counts(int c);

// (|K^E(c)| + |K^EP(c)|)/2, the number of c-crossing 2-bridge knots with
// crosscap = genus + 1.
Int crosscap_excess_count(int c);

// crosscap_excess_count / |K_c|, exact, c >= 7.
mpq_class epsilon2(int c);

// average_unoriented + epsilon2, exact, c >= 7.
mpq_class average_crosscap(int c);

// Roots of x^4-x^2-x-1 and x^4-x^2+x+1 from the explicit radicals, plus the
// coefficients of the closed-form solutions of the |E| and Delta recursions
// recovered from the c = 4..7 initial data.
struct ClosedFormConstants {
  double alpha;
  double beta;
  std::complex<double> omega;
  std::array<std::complex<double>, 4> x;
  std::array<std::complex<double>, 4> y;
  std::array<std::complex<double>, 4> u;
  std::array<std::complex<double>, 4> v;
};

const ClosedFormConstants& closed_form_constants();

// Floating-point root/coefficient form of crosscap_excess_count; documented
// as approximate.
double crosscap_excess_closed_numeric(int c);

// crosscap_excess_closed_numeric / |K_c| as a double.
double epsilon2_closed_numeric(int c);

}  // namespace formulas
}  // namespace twobridge
