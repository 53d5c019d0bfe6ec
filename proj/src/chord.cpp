#include "chordcubic/chord.hpp"

namespace chordcubic {

TernaryForm<Rational> normalize_form(const TernaryForm<Rational>& f) {
  mpz_class lcm = 1, content = 0;
  for (const Rational& c : f.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  for (const Rational& c : f.coefficients()) {
    mpz_class n = c.numerator() * (lcm / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  if (content == 0) return f;
  Rational scale = make_rational(lcm, content);
  for (const Rational& c : f.coefficients()) {
    if (!c.is_zero()) {
      if (c.sign() < 0) scale = -scale;
      break;
    }
  }
  return f.scaled(scale);
}

TernaryForm<Fp> normalize_form(const TernaryForm<Fp>& f) {
  for (const Fp& c : f.coefficients()) {
    if (!c.is_zero()) return f.scaled(c.inv());
  }
  return f;
}

}  // namespace chordcubic
