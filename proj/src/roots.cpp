#include "chordcubic/roots.hpp"

#include <algorithm>

namespace chordcubic {

namespace {

template <FieldElement S>
std::vector<S> trim_leading_zeros(std::vector<S> c) {
  auto it = std::find_if(c.begin(), c.end(), [](const S& s) { return !s.is_zero(); });
  if (it == c.end()) throw Error(ErrorKind::degenerate_line, "zero polynomial has no finite root set");
  c.erase(c.begin(), it);
  return c;
}

template <FieldElement S>
S horner(const std::vector<S>& c, const S& r) {
  S acc = r.lift(0);
  for (const S& k : c) acc = acc * r + k;
  return acc;
}

/// Divides by (X - r), assuming r is a root.
template <FieldElement S>
std::vector<S> deflate(const std::vector<S>& c, const S& r) {
  std::vector<S> q;
  S acc = r.lift(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    acc = acc * r + c[i];
    q.push_back(acc);
  }
  return q;
}

template <FieldElement S>
unsigned strip_root(std::vector<S>& c, const S& r) {
  unsigned m = 0;
  while (c.size() > 1 && horner(c, r).is_zero()) {
    c = deflate(c, r);
    ++m;
  }
  return m;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  constexpr unsigned long kTrialLimit = 1000000;
  for (unsigned long d = 2; d <= kTrialLimit && mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      factors.emplace_back(mpz_class(d), e);
    }
  }
  if (n > 1) {
    if (n > mpz_class(kTrialLimit) * kTrialLimit && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw Error(ErrorKind::out_of_range, "coefficient too large to factor by trial division");
    }
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, e] : factors) {
    std::size_t count = divisors.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

std::vector<std::pair<Fp, unsigned>> roots_in_field(const std::vector<Fp>& coeffs) {
  std::vector<Fp> c = trim_leading_zeros(coeffs);
  std::vector<std::pair<Fp, unsigned>> out;
  const PrimeField field = c.front().field();
  for (std::uint32_t v = 0; v < field.modulus() && c.size() > 1; ++v) {
    Fp r = field(v);
    if (unsigned m = strip_root(c, r)) out.emplace_back(r, m);
  }
  return out;
}

std::vector<std::pair<Rational, unsigned>> roots_in_field(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = trim_leading_zeros(coeffs);
  std::vector<std::pair<Rational, unsigned>> out;
  if (unsigned m = strip_root(c, Rational(0))) out.emplace_back(Rational(0), m);
  if (c.size() <= 1) return out;

  // Clear denominators so the root theorem applies to integer coefficients.
  mpz_class lcm = 1;
  for (const Rational& k : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.denominator().get_mpz_t());
  auto integer = [&](const Rational& k) { return mpz_class(k.numerator() * (lcm / k.denominator())); };

  const auto numerators = positive_divisors(integer(c.back()));
  const auto denominators = positive_divisors(integer(c.front()));
  for (const mpz_class& d : denominators) {
    for (const mpz_class& n : numerators) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {-1, 1}) {
        if (c.size() <= 1) break;
        Rational r = make_rational(mpz_class(n * sign), d);
        if (unsigned m = strip_root(c, r)) out.emplace_back(r, m);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

}  // namespace chordcubic
