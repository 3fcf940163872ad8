#include "twobridge/fraction.hpp"

#include <sstream>

namespace twobridge {

Fraction make_fraction(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  Fraction f(std::move(num), std::move(den));
  f.canonicalize();
  return f;
}

Fraction parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("expected \"p/q\", got \"" + text + "\"");
  Int num, den;
  if (num.set_str(text.substr(0, slash), 10) != 0)
    throw std::invalid_argument("bad numerator in \"" + text + "\"");
  if (den.set_str(text.substr(slash + 1), 10) != 0)
    throw std::invalid_argument("bad denominator in \"" + text + "\"");
  return make_fraction(std::move(num), std::move(den));
}

std::string fraction_to_string(const Fraction& f) {
  std::ostringstream out;
  out << f.get_num() << "/" << f.get_den();
  return out.str();
}

bool is_canonical(const Fraction& f) {
  return f.get_num() > 0 && f.get_num() < f.get_den();
}

Fraction normalize_canonical(const Fraction& f) {
  if (f == 0) throw std::invalid_argument("0 does not name a 2-bridge link");
  Int q = f.get_den();
  if (q == 1)
    throw std::invalid_argument("integer fraction " + fraction_to_string(f) +
                                " does not name a 2-bridge link");
  Int p;
  mpz_mod(p.get_mpz_t(), f.get_num().get_mpz_t(), q.get_mpz_t());
  // p != 0 because f is reduced with q > 1
  return make_fraction(std::move(p), std::move(q));
}

LinkClass classify(const Fraction& f) {
  if (!is_canonical(f))
    throw std::invalid_argument("classify expects 0 < p < q, got " + fraction_to_string(f));
  return mpz_odd_p(f.get_den().get_mpz_t()) ? LinkClass::Knot : LinkClass::TwoComponentLink;
}

bool schubert_equivalent(const Fraction& a, const Fraction& b) {
  if (!is_canonical(a) || !is_canonical(b))
    throw std::invalid_argument("schubert_equivalent expects canonical fractions");
  if (a.get_den() != b.get_den()) return false;
  if (a.get_num() == b.get_num()) return true;
  Int prod = a.get_num() * b.get_num();
  Int r;
  mpz_mod(r.get_mpz_t(), prod.get_mpz_t(), a.get_den().get_mpz_t());
  return r == 1;
}

}  // namespace twobridge
