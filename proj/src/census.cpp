#include "twobridge/census.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace twobridge {
namespace census {

long long tuple_crossing(const Tuple& t) {
  long long c = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t[i]) < 2) throw std::invalid_argument("tuple entries need |b_i| >= 2");
    c += std::abs(t[i]);
    if (i > 0 && (t[i - 1] > 0) == (t[i] > 0)) --c;
  }
  return c;
}

bool tuple_is_knot(const Tuple& t) {
  // denominator of [b_1,...,b_k]_- via the continuant recurrence
  // (n, d) <- (d, b_i d - n), processed right to left
  if (tuple_crossing(t) > 60) throw std::overflow_error("tuple too large for int64 continuants");
  long long n = 0, d = 1;
  for (std::size_t i = t.size(); i-- > 0;) {
    long long nd = t[i] * d - n;
    n = d;
    d = nd;
  }
  return std::llabs(d) % 2 == 1;
}

bool is_palindrome(const Tuple& t) { return std::equal(t.begin(), t.end(), t.rbegin()); }

WZCount tuple_wz(const Tuple& t) { return compute_wz(std::span<const int>(t)); }

void for_each_composition(int c, const std::function<void(const Tuple&)>& fn) {
  if (c < 2) return;
  Tuple cur;
  // parts b_i - 1 >= 1 composing c - 1
  auto rec = [&](auto&& self, int rem) -> void {
    for (int part = 1; part <= rem; ++part) {
      cur.push_back(part + 1);
      if (part == rem)
        fn(cur);
      else
        self(self, rem - part);
      cur.pop_back();
    }
  };
  rec(rec, c - 1);
}

void for_each_K(int c, const std::function<void(const Tuple&)>& fn) {
  for_each_composition(c, [&](const Tuple& t) {
    if (tuple_is_knot(t)) fn(t);
  });
}

std::vector<Tuple> enumerate_K(int c) {
  std::vector<Tuple> out;
  for_each_K(c, [&](const Tuple& t) { out.push_back(t); });
  assert(std::is_sorted(out.begin(), out.end()));
  return out;
}

std::vector<Tuple> enumerate_KP(int c) {
  // a palindrome is its first half, an optional middle entry, and the mirror
  std::vector<Tuple> out;
  if (c < 2) return out;
  auto emit = [&](const Tuple& half, int middle) {
    Tuple t = half;
    if (middle) t.push_back(middle);
    t.insert(t.end(), half.rbegin(), half.rend());
    if (tuple_crossing(t) == c && tuple_is_knot(t)) out.push_back(t);
  };
  // even length 2m: sum(t) = c + 2m - 1 must be even
  for (int m = 1; 2 * m <= c; ++m) {
    int total = c + 2 * m - 1;
    if (total % 2 != 0) continue;
    int half_sum = total / 2;
    if (half_sum < 2 * m) break;
    Tuple half;
    auto rec = [&](auto&& self, int rem, int slots) -> void {
      if (slots == 0) {
        if (rem == 0) emit(half, 0);
        return;
      }
      for (int b = 2; b <= rem - 2 * (slots - 1); ++b) {
        half.push_back(b);
        self(self, rem - b, slots - 1);
        half.pop_back();
      }
    };
    rec(rec, half_sum, m);
  }
  // odd length 2m + 1 with middle entry >= 2
  for (int m = 0; 2 * m + 1 <= c; ++m) {
    Tuple half;
    auto rec = [&](auto&& self, int sum_so_far, int slots) -> void {
      if (slots == 0) {
        int middle = c + 2 * m - 2 * sum_so_far;
        if (middle >= 2) emit(half, middle);
        return;
      }
      int budget = (c + 2 * m - 2) / 2 - sum_so_far;  // leave middle >= 2
      for (int b = 2; b <= budget - 2 * (slots - 1); ++b) {
        half.push_back(b);
        self(self, sum_so_far + b, slots - 1);
        half.pop_back();
      }
    };
    rec(rec, 0, m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GCase g_case(const Tuple& t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  std::size_t k = t.size();
  if (t[k - 1] == 2) {
    if (k >= 2 && t[k - 2] == 2) return GCase::F1;
    if (k >= 2 && t[k - 2] >= 3) return GCase::F2;
    throw std::invalid_argument("singleton (2) is the Hopf link, not in any K(c)");
  }
  return t[k - 1] == 3 ? GCase::F3 : GCase::F4;
}

Tuple apply_g(const Tuple& t) {
  if (tuple_crossing(t) < 5) throw std::invalid_argument("apply_g needs crossing number >= 5");
  Tuple out = t;
  switch (g_case(t)) {
    case GCase::F1:  // strip trailing 2,2
      out.pop_back();
      out.pop_back();
      break;
    case GCase::F2:  // decrement before the trailing 2
      out[out.size() - 2] -= 1;
      break;
    case GCase::F3:  // merge the trailing 3
      out.pop_back();
      out.back() += 1;
      break;
    case GCase::F4:  // b_k - 2
      out.back() -= 2;
      break;
  }
  return out;
}

Tuple apply_g_inverse(const Tuple& image, GCase which) {
  Tuple out = image;
  switch (which) {
    case GCase::F1:
      out.push_back(2);
      out.push_back(2);
      break;
    case GCase::F2:
      if (out.size() < 2 || out.back() != 2) throw std::invalid_argument("f2 image ends with 2");
      out[out.size() - 2] += 1;
      break;
    case GCase::F3:
      out.back() -= 1;
      out.push_back(3);
      break;
    case GCase::F4:
      out.back() += 2;
      break;
  }
  return out;
}

GPCase gp_case(const Tuple& t) {
  switch (g_case(t)) {
    case GCase::F1: return GPCase::P1;
    case GCase::F2: return GPCase::P2;
    case GCase::F3: return GPCase::P3;
    case GCase::F4: return GPCase::P4;
  }
  throw std::logic_error("unreachable");
}

Tuple apply_gP(const Tuple& t) {
  if (!is_palindrome(t)) throw std::invalid_argument("apply_gP expects a palindrome");
  if (tuple_crossing(t) < 7) throw std::invalid_argument("apply_gP needs crossing number >= 7");
  std::size_t k = t.size();
  Tuple out;
  switch (gp_case(t)) {
    case GPCase::P1:  // strip 2,2 from both ends
      out.assign(t.begin() + 2, t.end() - 2);
      break;
    case GPCase::P2:
      out = t;
      if (k >= 4) {
        out[1] -= 1;
        out[k - 2] -= 1;
      } else {  // (2, b, 2) with b >= 4
        out[1] -= 2;
      }
      break;
    case GPCase::P3:
      if (k >= 4) {
        out.assign(t.begin() + 1, t.end() - 1);
        out.front() += 1;
        out.back() += 1;
      } else {  // (3, b, 3) -> (b + 2)
        out.assign(1, t[1] + 2);
      }
      break;
    case GPCase::P4:
      out = t;
      if (k >= 2) {
        out.front() -= 2;
        out.back() -= 2;
      } else {  // singleton (b), b >= 7
        out[0] -= 4;
      }
      break;
  }
  return out;
}

DeltaWZ delta_wz_of_g(const Tuple& t) {
  WZCount before = tuple_wz(t);
  WZCount after = tuple_wz(apply_g(t));
  return {before.w - after.w, before.z - after.z};
}

DeltaWZ delta_wz_of_gP(const Tuple& t) {
  WZCount before = tuple_wz(t);
  WZCount after = tuple_wz(apply_gP(t));
  return {before.w - after.w, before.z - after.z};
}

CensusTotals census_totals(int c) {
  CensusTotals totals;
  totals.c = c;
  totals.count = totals.w_sum = totals.z_sum = 0;
  totals.palindromic_count = totals.wp_sum = totals.zp_sum = 0;
  for_each_K(c, [&](const Tuple& t) {
    WZCount wz = tuple_wz(t);
    totals.count += 1;
    totals.w_sum += static_cast<long>(wz.w);
    totals.z_sum += static_cast<long>(wz.z);
    if (is_palindrome(t)) {
      totals.palindromic_count += 1;
      totals.wp_sum += static_cast<long>(wz.w);
      totals.zp_sum += static_cast<long>(wz.z);
    }
  });
  return totals;
}

EFamilies enumerate_E_families(int c) {
  EFamilies out;
  if (c < 0) throw std::invalid_argument("enumerate_E_families expects c >= 0");
  if (c == 0) {
    out.all.push_back({});
    out.knots.push_back({});
    out.knot_palindromes.push_back({});
    return out;
  }
  Tuple cur;
  auto rec = [&](auto&& self, int rem) -> void {
    // candidate next entries in ascending (lexicographic) order
    int prev_sign = cur.empty() ? 0 : (cur.back() > 0 ? 1 : -1);
    auto try_entry = [&](int value) {
      int sign = value > 0 ? 1 : -1;
      int cost = std::abs(value) - (sign == prev_sign ? 1 : 0);
      if (cost > rem) return;
      cur.push_back(value);
      if (cost == rem)
        out.all.push_back(cur);
      else
        self(self, rem - cost);
      cur.pop_back();
    };
    int max_mag = rem + 1;
    for (int mag = max_mag - max_mag % 2; mag >= 4; mag -= 2) try_entry(-mag);
    for (int mag = 4; mag <= max_mag; mag += 2) try_entry(mag);
  };
  rec(rec, c);
  std::sort(out.all.begin(), out.all.end());
  for (const Tuple& t : out.all) {
    if (t.size() % 2 == 0) {
      out.knots.push_back(t);
      if (is_palindrome(t)) out.knot_palindromes.push_back(t);
    } else {
      out.links.push_back(t);
    }
  }
  return out;
}

}  // namespace census
}  // namespace twobridge
