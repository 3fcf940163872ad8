#include "twobridge/contfrac.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

namespace twobridge {

namespace {

long long checked_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw std::overflow_error(std::string(what) + " exceeds the supported coefficient range");
  return v.get_si();
}

std::string coeff_list(const std::vector<long long>& coeffs, std::size_t count) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out << ',';
    out << coeffs[i];
  }
  out << ']';
  return out.str();
}

std::vector<long long> parse_coeff_list(const std::string& body) {
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::invalid_argument("expected [a,b,...], got \"" + body + "\"");
  std::vector<long long> out;
  std::string inner = body.substr(1, body.size() - 2);
  if (inner.empty()) return out;
  std::istringstream in(inner);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad coefficient \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

}  // namespace

bool is_positive_additive(const AdditiveCF& cf) {
  if (cf.coeffs.empty() || cf.coeffs.size() % 2 == 0) return false;
  for (long long a : cf.coeffs)
    if (a <= 0) return false;
  return true;
}

bool is_positive_subtractive(const SubtractiveCF& cf) {
  for (long long b : cf.coeffs)
    if (b < 2) return false;
  return true;
}

bool is_even_subtractive(const SubtractiveCF& cf) {
  for (long long b : cf.coeffs)
    if (b % 2 != 0 || std::llabs(b) < 2) return false;
  return true;
}

Fraction eval_additive(const AdditiveCF& cf) {
  // p/q = 1/(a1 + 1/(a2 + ...)), evaluated inside out
  Fraction tail(0);
  for (std::size_t i = cf.coeffs.size(); i-- > 0;) {
    Fraction denom = Fraction(static_cast<long>(cf.coeffs[i])) + tail;
    if (denom == 0)
      throw std::domain_error("division by zero evaluating additive CF: prefix " +
                              coeff_list(cf.coeffs, i + 1) + " nests to zero");
    tail = 1 / denom;
  }
  return tail;
}

Fraction eval_subtractive(const SubtractiveCF& cf) {
  Fraction tail(0);
  for (std::size_t i = cf.coeffs.size(); i-- > 0;) {
    if (std::llabs(cf.coeffs[i]) < 2)
      throw std::invalid_argument("subtractive CF needs |b_i| >= 2, got " +
                                  std::to_string(cf.coeffs[i]));
    Fraction denom = Fraction(static_cast<long>(cf.coeffs[i])) - tail;
    assert(denom != 0);  // |b_i| >= 2 and |tail| < 1
    tail = 1 / denom;
  }
  return tail;
}

AdditiveCF to_positive_additive(const Fraction& f) {
  if (!is_canonical(f))
    throw std::invalid_argument("to_positive_additive expects 0 < p/q < 1, got " +
                                fraction_to_string(f));
  AdditiveCF out;
  Int p = f.get_num(), q = f.get_den();
  while (p != 0) {
    Int a = q / p;
    Int r = q - a * p;
    out.coeffs.push_back(checked_ll(a, "additive coefficient"));
    q = p;
    p = r;
  }
  if (out.coeffs.size() % 2 == 0) {
    // [.., a_k] = [.., a_k - 1, 1]; the canonical expansion ends with a_k >= 2
    out.coeffs.back() -= 1;
    out.coeffs.push_back(1);
  }
  assert(is_positive_additive(out));
  return out;
}

SubtractiveCF to_positive_subtractive(const Fraction& f) {
  AdditiveCF add = to_positive_additive(f);
  const auto& a = add.coeffs;
  SubtractiveCF out;
  if (a.size() == 1) {
    out.coeffs = a;
    return out;
  }
  out.coeffs.push_back(a[0] + 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (i % 2 == 1) {
      for (long long n = 0; n < a[i] - 1; ++n) out.coeffs.push_back(2);
    } else {
      out.coeffs.push_back(a[i] + (i + 1 == a.size() ? 1 : 2));
    }
  }
  assert(is_positive_subtractive(out));
  return out;
}

SubtractiveCF to_even_subtractive(const Fraction& f) {
  if (!is_canonical(f))
    throw std::invalid_argument("to_even_subtractive expects 0 < p/q < 1, got " +
                                fraction_to_string(f));
  if (mpz_even_p(f.get_den().get_mpz_t()))
    throw std::invalid_argument("even subtractive form requires q odd (knot), got " +
                                fraction_to_string(f));
  Int p = f.get_num();
  if (mpz_odd_p(p.get_mpz_t())) p -= f.get_den();
  SubtractiveCF out;
  Fraction x = make_fraction(f.get_den(), p);
  while (true) {
    if (x.get_den() == 1) {
      assert(mpz_even_p(x.get_num().get_mpz_t()));
      out.coeffs.push_back(checked_ll(x.get_num(), "even coefficient"));
      break;
    }
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (mpz_odd_p(fl.get_mpz_t())) fl += 1;
    out.coeffs.push_back(checked_ll(fl, "even coefficient"));
    x = 1 / (Fraction(fl) - x);
  }
  assert(is_even_subtractive(out));
  return out;
}

long long crossing_number(const SubtractiveCF& cf) {
  long long total = 0;
  for (std::size_t i = 0; i < cf.coeffs.size(); ++i) {
    long long b = cf.coeffs[i];
    if (std::llabs(b) < 2)
      throw std::invalid_argument("crossing_number needs |b_i| >= 2");
    if (__builtin_add_overflow(total, std::llabs(b), &total))
      throw std::overflow_error("crossing number exceeds the supported range");
    if (i > 0 && (cf.coeffs[i - 1] > 0) == (b > 0)) --total;
  }
  return total;
}

std::string format_additive(const AdditiveCF& cf) {
  return "add:" + coeff_list(cf.coeffs, cf.coeffs.size());
}

std::string format_subtractive(const SubtractiveCF& cf) {
  return "sub:" + coeff_list(cf.coeffs, cf.coeffs.size());
}

std::string format_even_subtractive(const SubtractiveCF& cf) {
  return "even:" + coeff_list(cf.coeffs, cf.coeffs.size());
}

Fraction parse_fraction_or_cf(const std::string& text) {
  if (text.rfind("add:", 0) == 0) {
    AdditiveCF cf{parse_coeff_list(text.substr(4))};
    for (long long a : cf.coeffs)
      if (a == 0) throw std::invalid_argument("additive CF coefficients must be nonzero");
    return eval_additive(cf);
  }
  if (text.rfind("sub:", 0) == 0) {
    return eval_subtractive(SubtractiveCF{parse_coeff_list(text.substr(4))});
  }
  if (text.rfind("even:", 0) == 0) {
    SubtractiveCF cf{parse_coeff_list(text.substr(5))};
    if (!is_even_subtractive(cf))
      throw std::invalid_argument("even CF needs even coefficients with |e_i| >= 2");
    return eval_subtractive(cf);
  }
  return parse_fraction(text);
}

}  // namespace twobridge
