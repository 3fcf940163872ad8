#pragma once

#include <optional>
#include <span>
#include <string>

#include "twobridge/contfrac.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

// w = (#maximal runs of 2's) + (#entries >= 3) in the positive subtractive
// form; z = #runs of 3's whose left and right neighbors both exist and
// equal 2. Unoriented genus is w - z.
struct WZCount {
  long long w = 0;
  long long z = 0;
};

WZCount compute_wz(std::span<const long long> positive_subtractive);
WZCount compute_wz(std::span<const int> positive_subtractive);
WZCount compute_wz(const SubtractiveCF& cf);

long long unoriented_genus(const SubtractiveCF& cf);

// Independent route: strip a trailing entry >= 3, or collapse a trailing
// block of 2's into b_j - 1 (b_j >= 3), each step adding 1, until the
// single-twist-region base case.
long long unoriented_genus_by_reduction(const SubtractiveCF& cf);

// True iff every |e_i| >= 4, i.e. crosscap = genus + 1 for a knot with more
// than two crossings.
bool crosscap_condition_even_form(const SubtractiveCF& even_cf);

// pre: canonical knot fraction (q odd, q >= 3). Links go to the oracle.
long long crosscap_knot(const Fraction& f);

enum class Method { Formula, Reduction, Oracle };

struct InvariantReport {
  Fraction fraction;
  long long crossing_number = 0;
  LinkClass link_class = LinkClass::Knot;
  long long w = 0;
  long long z = 0;
  long long unoriented_genus = 0;
  std::optional<long long> crosscap;
  Method method = Method::Formula;
};

std::string method_name(Method m);

// Flat JSON record with keys fraction, crossing_number, components, w, z,
// unoriented_genus, crosscap, method.
std::string to_json(const InvariantReport& report);

}  // namespace twobridge
