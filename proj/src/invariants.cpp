#include "twobridge/invariants.hpp"

#include <sstream>

namespace twobridge {

namespace {

template <typename T>
WZCount wz_impl(std::span<const T> b) {
  if (b.empty()) throw std::invalid_argument("compute_wz expects a nonempty tuple");
  WZCount out;
  std::size_t k = b.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i] < 2) throw std::invalid_argument("compute_wz expects coefficients >= 2");
    if (b[i] == 2 && (i == 0 || b[i - 1] != 2)) ++out.w;
    if (b[i] >= 3) ++out.w;
  }
  // maximal runs of 3's with a 2 on both sides
  for (std::size_t i = 0; i < k;) {
    if (b[i] != 3) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < k && b[j + 1] == 3) ++j;
    if (i > 0 && j + 1 < k && b[i - 1] == 2 && b[j + 1] == 2) ++out.z;
    i = j + 1;
  }
  return out;
}

}  // namespace

WZCount compute_wz(std::span<const long long> b) { return wz_impl(b); }
WZCount compute_wz(std::span<const int> b) { return wz_impl(b); }

WZCount compute_wz(const SubtractiveCF& cf) {
  return compute_wz(std::span<const long long>(cf.coeffs));
}

long long unoriented_genus(const SubtractiveCF& cf) {
  WZCount wz = compute_wz(cf);
  return wz.w - wz.z;
}

long long unoriented_genus_by_reduction(const SubtractiveCF& cf) {
  if (cf.coeffs.empty() || !is_positive_subtractive(cf))
    throw std::invalid_argument("reduction expects a nonempty positive subtractive CF");
  std::vector<long long> b = cf.coeffs;
  long long genus = 0;
  while (true) {
    std::size_t k = b.size();
    std::size_t j = k;  // one past the last entry >= 3
    while (j > 0 && b[j - 1] == 2) --j;
    if (k == 1 || j == 0) {
      // single twist region, or a (2,q) torus link: annulus or Moebius band
      return genus + 1;
    }
    if (j == k) {
      b.pop_back();  // trailing entry >= 3
    } else {
      b.resize(j);  // collapse the trailing 2's into b_j - 1 (still >= 2)
      b.back() -= 1;
    }
    ++genus;
  }
}

bool crosscap_condition_even_form(const SubtractiveCF& even_cf) {
  if (!is_even_subtractive(even_cf))
    throw std::invalid_argument("crosscap_condition_even_form expects an even subtractive CF");
  for (long long e : even_cf.coeffs)
    if (e == 2 || e == -2) return false;
  return true;
}

long long crosscap_knot(const Fraction& f) {
  if (classify(f) != LinkClass::Knot)
    throw std::invalid_argument("crosscap_knot expects a knot (q odd); links go to the oracle");
  SubtractiveCF pos = to_positive_subtractive(f);
  long long genus = unoriented_genus(pos);
  SubtractiveCF even = to_even_subtractive(f);
  return crosscap_condition_even_form(even) ? genus + 1 : genus;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Reduction: return "reduction";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::string to_json(const InvariantReport& r) {
  std::ostringstream out;
  out << "{\"fraction\":\"" << fraction_to_string(r.fraction) << "\""
      << ",\"crossing_number\":" << r.crossing_number
      << ",\"components\":" << (r.link_class == LinkClass::Knot ? 1 : 2) << ",\"w\":" << r.w
      << ",\"z\":" << r.z << ",\"unoriented_genus\":" << r.unoriented_genus << ",\"crosscap\":";
  if (r.crosscap)
    out << *r.crosscap;
  else
    out << "null";
  out << ",\"method\":\"" << method_name(r.method) << "\"}";
  return out.str();
}

}  // namespace twobridge
