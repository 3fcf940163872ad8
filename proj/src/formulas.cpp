#include "twobridge/formulas.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "twobridge/census.hpp"

namespace twobridge {
namespace formulas {

namespace {

Int pow2(long e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

Int exact_div(const Int& num, long den, const char* what) {
  if (!mpz_divisible_ui_p(num.get_mpz_t(), den))
    throw std::logic_error(std::string(what) + " failed integrality");
  return num / den;
}

}  // namespace

Int jacobsthal(long n) {
  if (n < 0) throw std::invalid_argument("jacobsthal expects n >= 0");
  return exact_div(pow2(n) - sign_pow(n), 3, "jacobsthal");
}

Int ernst_sumners(int c) {
  if (c < 3) throw std::invalid_argument("ernst_sumners expects c >= 3");
  if (c % 2 == 0) return exact_div(pow2(c - 2) - 1, 3, "ernst_sumners even");
  Int v = pow2(c - 2) + pow2((c - 1) / 2);
  if (c % 4 == 3) v += 2;
  return exact_div(v, 3, "ernst_sumners odd");
}

Int closed_W(int c) {
  if (c < 4) throw std::invalid_argument("closed_W is valid for c >= 4");
  return Int(c) * pow2(c - 4);
}

Int closed_Z(int c) {
  if (c < 6) throw std::invalid_argument("closed_Z is valid for c >= 6");
  // 27 Z(c) = (3c-8) 2^(c-4) + 14 (-1)^c - 18 (-1)^c [c = 1 mod 3]
  Int v = Int(3 * c - 8) * pow2(c - 4) + 14 * sign_pow(c);
  if (c % 3 == 1) v -= 18 * sign_pow(c);
  return exact_div(v, 27, "closed_Z");
}

namespace {

// W^P and Z^P initial values below the c >= 11 range of the closed forms.
const std::map<int, long> kStoredWP = {{3, 2}, {5, 2}, {7, 14}, {9, 34}};
const std::map<int, long> kStoredZP = {{3, 0}, {5, 0}, {7, 2}, {9, 4}};

}  // namespace

Int closed_WP(int c) {
  if (c < 3) throw std::invalid_argument("closed_WP is valid for c >= 3");
  if (c % 2 == 0) return 0;
  if (c < 11) return Int(kStoredWP.at(c));
  long d = (c - 1) / 2;
  // 3 W^P(c) = (1+3d) 2^(d-1) - 2 (-1)^d
  return exact_div(Int(1 + 3 * d) * pow2(d - 1) - 2 * sign_pow(d), 3, "closed_WP");
}

Int closed_ZP(int c) {
  if (c < 3) throw std::invalid_argument("closed_ZP is valid for c >= 3");
  if (c % 2 == 0) return 0;
  if (c < 11) return Int(kStoredZP.at(c));
  long d = (c - 1) / 2;
  // 27 Z^P(c) = (3d+1) 2^(d-1) - 14 (-1)^d + 18 (-1)^d ([d=1 mod 3] + 3 [d=2 mod 3])
  Int v = Int(3 * d + 1) * pow2(d - 1) - 14 * sign_pow(d);
  if (d % 3 == 1) v += 18 * sign_pow(d);
  if (d % 3 == 2) v += 54 * sign_pow(d);
  return exact_div(v, 27, "closed_ZP");
}

mpq_class epsilon1(int c) {
  if (c < 11) throw std::invalid_argument("epsilon1 closed form is valid for c >= 11");
  if (c % 2 == 0) {
    Int num = c - 2 + (c % 3 == 1 ? 3 : 0);
    mpq_class v(num, 3 * (pow2(c - 2) - 1));
    v.canonicalize();
    return v;
  }
  long d = (c - 1) / 2;
  Int num, den;
  if (c % 4 == 1) {
    num = -(pow2(d + 1) + 4 + (d % 3 == 2 ? 18 : 0));
    den = 9 * (pow2(c - 2) + pow2(d));
  } else {
    num = -pow2(d + 1) - 12 * d - 8 + 18 * ((d % 3 == 1 ? 1 : 0) + 2 * (d % 3 == 2 ? 1 : 0));
    den = 9 * (pow2(c - 2) + pow2(d) + 2);
  }
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

namespace {

// Totals below the closed-form validity ranges: W(3), Z(3..5).
Int total_W(int c) { return c == 3 ? Int(2) : closed_W(c); }
Int total_Z(int c) { return c < 6 ? Int(0) : closed_Z(c); }

}  // namespace

mpq_class average_unoriented(int c) {
  if (c < 3) throw std::invalid_argument("average_unoriented expects c >= 3");
  Int num = total_W(c) - total_Z(c) + closed_WP(c) - closed_ZP(c);
  mpq_class v(num, 2 * ernst_sumners(c));
  v.canonicalize();
  return v;
}

mpq_class average_unoriented_census(int c) {
  census::CensusTotals totals = census::census_totals(c);
  Int knots = (totals.count + totals.palindromic_count) / 2;
  if (knots != ernst_sumners(c)) throw std::logic_error("census |K_c| disagrees with Ernst-Sumners");
  mpq_class v(totals.w_sum - totals.z_sum + totals.wp_sum - totals.zp_sum, 2 * knots);
  v.canonicalize();
  return v;
}

mpq_class average_unoriented_eps1(int c) {
  mpq_class v = mpq_class(c, 3) + mpq_class(1, 9) + epsilon1(c);
  v.canonicalize();
  return v;
}

ECounts recursive_E_counts(int c) {
  if (c < 4) throw std::invalid_argument("recursive_E_counts expects c >= 4");
  // Table-five initials |E(4..7)| and Delta(4..7); Table-six |K^EP(7..14)|.
  static const long kE0[4] = {2, 0, 2, 2};
  static const long kDelta0[4] = {-2, 0, -2, 2};
  static const long kKEP0[8] = {2, 0, 0, 0, 2, 0, 2, 0};
  std::vector<Int> e(c + 1, 0), delta(c + 1, 0), kep(c + 1, 0);
  for (int i = 4; i <= c && i <= 7; ++i) {
    e[i] = kE0[i - 4];
    delta[i] = kDelta0[i - 4];
  }
  for (int i = 8; i <= c; ++i) {
    e[i] = e[i - 2] + e[i - 3] + e[i - 4];
    delta[i] = delta[i - 2] - delta[i - 3] - delta[i - 4];
  }
  for (int i = 7; i <= c && i <= 14; ++i) kep[i] = kKEP0[i - 7];
  for (int i = 15; i <= c; ++i) kep[i] = kep[i - 4] + kep[i - 6] + kep[i - 8];
  ECounts out;
  out.e_count = e[c];
  out.delta = delta[c];
  out.ke_count = exact_div(e[c] + delta[c], 2, "K^E count");
  out.kep_count = kep[c];
  return out;
}

Int crosscap_excess_count(int c) {
  ECounts counts = recursive_E_counts(c);
  return exact_div(counts.ke_count + counts.kep_count, 2, "crosscap excess count");
}

mpq_class epsilon2(int c) {
  if (c < 7) throw std::invalid_argument("epsilon2 expects c >= 7");
  mpq_class v(crosscap_excess_count(c), ernst_sumners(c));
  v.canonicalize();
  return v;
}

mpq_class average_crosscap(int c) {
  if (c < 7) throw std::invalid_argument("average_crosscap expects c >= 7");
  mpq_class v = average_unoriented(c) + epsilon2(c);
  v.canonicalize();
  return v;
}

namespace {

using cplx = std::complex<double>;

// Solves the 4x4 system A coeff = rhs by Gaussian elimination with partial
// pivoting; well conditioned for these Vandermonde matrices.
std::array<cplx, 4> solve4(std::array<std::array<cplx, 4>, 4> a, std::array<cplx, 4> rhs) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < 4; ++r) {
      cplx factor = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= factor * a[col][k];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::array<cplx, 4> x{};
  for (int r = 3; r >= 0; --r) {
    cplx acc = rhs[r];
    for (int k = r + 1; k < 4; ++k) acc -= a[r][k] * x[k];
    x[r] = acc / a[r][r];
  }
  return x;
}

ClosedFormConstants compute_constants() {
  ClosedFormConstants k;
  k.alpha = std::cbrt((29.0 + 3.0 * std::sqrt(93.0)) / 2.0);
  k.beta = -std::cbrt((25.0 + 3.0 * std::sqrt(69.0)) / 2.0);
  k.omega = std::polar(1.0, M_PI / 3.0);
  k.x[0] = -1.0;
  k.x[1] = (1.0 + k.alpha + 1.0 / k.alpha) / 3.0;
  k.x[2] = (1.0 - k.alpha * k.omega - (1.0 / k.alpha) / k.omega) / 3.0;
  k.x[3] = std::conj(k.x[2]);
  k.y[0] = -1.0;
  k.y[1] = (1.0 + k.beta + 1.0 / k.beta) / 3.0;
  k.y[2] = (1.0 - k.beta * k.omega - (1.0 / k.beta) / k.omega) / 3.0;
  k.y[3] = std::conj(k.y[2]);

  // sum_i u_i x_i^t = |E(4+t)| and sum_i v_i y_i^t = Delta(4+t) for t = 0..3
  std::array<std::array<cplx, 4>, 4> xv{}, yv{};
  for (int t = 0; t < 4; ++t)
    for (int i = 0; i < 4; ++i) {
      xv[t][i] = std::pow(k.x[i], t);
      yv[t][i] = std::pow(k.y[i], t);
    }
  k.u = solve4(xv, {2.0, 0.0, 2.0, 2.0});
  k.v = solve4(yv, {-2.0, 0.0, -2.0, 2.0});
  return k;
}

}  // namespace

const ClosedFormConstants& closed_form_constants() {
  static const ClosedFormConstants k = compute_constants();
  return k;
}

double crosscap_excess_closed_numeric(int c) {
  if (c < 7) throw std::invalid_argument("closed numeric form expects c >= 7");
  const ClosedFormConstants& k = closed_form_constants();
  double parity = c % 2 == 1 ? 1.0 : 0.0;
  cplx total = 0.0;
  for (int i = 0; i < 4; ++i) {
    total += k.u[i] * std::pow(k.x[i], (c - 7) / 2.0) *
             (std::pow(k.x[i], (c - 1) / 2.0) + 2.0 * parity);
    total += k.v[i] * std::pow(k.y[i], c - 4.0);
  }
  return total.real() / 4.0;
}

double epsilon2_closed_numeric(int c) {
  return crosscap_excess_closed_numeric(c) / ernst_sumners(c).get_d();
}

}  // namespace formulas
}  // namespace twobridge
